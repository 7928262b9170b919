#include "hopfpfaff/numbers.hpp"

namespace hopfpfaff {

Rational rational_pow(const Rational& base, long long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw InputError("0 raised to a negative power");
        return Rational(0);
    }
    bool invert = e < 0;
    unsigned long long k = invert ? static_cast<unsigned long long>(-(e + 1)) + 1 : e;
    Rational acc(1), b = base;
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    if (invert) acc = Rational(denominator(acc), numerator(acc));
    return acc;
}

GaussRat gauss_pow(const GaussRat& base, long long e) {
    GaussRat acc(Rational(1));
    if (e == 0) return acc;
    bool invert = e < 0;
    unsigned long long k = invert ? static_cast<unsigned long long>(-(e + 1)) + 1 : e;
    GaussRat b = base;
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return invert ? acc.inverse() : acc;
}

std::string GaussRat::str() const {
    auto rat = [](const Rational& r) {
        std::string s = numerator(r).str();
        if (denominator(r) != 1) s += "/" + denominator(r).str();
        return s;
    };
    if (im == 0) return rat(re);
    if (re == 0) return rat(im) + "i";
    std::string s = rat(re);
    if (im > 0) s += "+";
    return "(" + s + rat(im) + "i)";
}

}  // namespace hopfpfaff
