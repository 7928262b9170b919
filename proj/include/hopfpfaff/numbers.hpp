#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hopfpfaff/errors.hpp"

namespace hopfpfaff {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// base^e for integer e of either sign; base must be nonzero for e < 0.
Rational rational_pow(const Rational& base, long long e);

// Element of the Gaussian rationals Q(i). All arithmetic is exact.
struct GaussRat {
    Rational re;
    Rational im;

    GaussRat() = default;
    GaussRat(Rational r) : re(std::move(r)) {}
    GaussRat(long long r) : re(r) {}
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_rational() const { return im == 0; }

    GaussRat conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRat& operator*=(const Rational& c) {
        re *= c;
        im *= c;
        return *this;
    }

    GaussRat inverse() const {
        if (is_zero()) throw InputError("division by zero in Q(i)");
        Rational n = norm2();
        return {re / n, -im / n};
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator*(GaussRat a, const Rational& c) { return a *= c; }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::string str() const;
};

GaussRat gauss_pow(const GaussRat& base, long long e);

}  // namespace hopfpfaff
