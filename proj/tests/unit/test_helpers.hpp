#pragma once

#include <random>
#include <vector>

#include "hopfpfaff/exterior.hpp"
#include "hopfpfaff/numbers.hpp"
#include "hopfpfaff/spectrum.hpp"

namespace hopfpfaff::testing {

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline Spectrum exact_spectrum(std::initializer_list<std::pair<long long, long long>> entries) {
    std::vector<Rational> mu;
    for (auto [p, q] : entries) mu.emplace_back(p, q);
    return Spectrum::exact(std::move(mu));
}

inline Spectrum classical_spectrum(int n, long long den = 2) {
    return Spectrum::exact(std::vector<Rational>(n, Rational(1, den)));
}

// 1/p for the first n odd-indexed small primes: guaranteed no-resonance
inline Spectrum prime_spectrum(int n) {
    static const long long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
    std::vector<Rational> mu;
    for (int i = 0; i < n; ++i) mu.emplace_back(1, primes[i]);
    return Spectrum::exact(std::move(mu));
}

inline IntVec ivec(std::initializer_list<long long> xs) {
    IntVec v;
    for (long long x : xs) v.emplace_back(x);
    return v;
}

// single monomial form c z^alpha dz_idx (0-based idx)
inline KForm mono(int n, IdxTuple idx, Exponents alpha, GaussRat c = GaussRat(1)) {
    return KForm::monomial_term(n, idx, alpha, std::move(c));
}

inline Exponents e(std::initializer_list<int> xs) { return Exponents(xs); }

struct RandomGen {
    std::mt19937_64 rng;
    explicit RandomGen(unsigned long long seed) : rng(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    GaussRat coeff() {
        Rational re(uniform(-5, 5), uniform(1, 4));
        Rational im = uniform(0, 2) == 0 ? Rational(uniform(-3, 3), uniform(1, 3)) : Rational(0);
        return {re, im};
    }

    Poly poly(int n, int max_terms = 3, int max_deg = 2) {
        Poly p(n);
        int terms = uniform(0, max_terms);
        for (int t = 0; t < terms; ++t) {
            Exponents alpha(n, 0);
            for (int i = 0; i < n; ++i) alpha[i] = uniform(0, max_deg);
            p.add_term(alpha, coeff());
        }
        return p;
    }

    KForm kform(int n, int k, int max_terms = 3) {
        KForm w(n, k);
        auto tuples = increasing_tuples(n, k);
        int terms = uniform(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            const auto& idx = tuples[uniform(0, static_cast<int>(tuples.size()) - 1)];
            Poly g = poly(n);
            w.add_term(idx, g);
        }
        return w;
    }

    PolyVectorField field(int n) {
        PolyVectorField v(n);
        for (int i = 0; i < n; ++i) v[i] = poly(n, 2, 2);
        return v;
    }
};

}  // namespace hopfpfaff::testing
