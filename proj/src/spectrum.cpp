#include "hopfpfaff/spectrum.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "hopfpfaff/errors.hpp"

namespace hopfpfaff {

namespace {

IntVec unit_difference(int n, int i, int j) {
    IntVec v(n, 0);
    v[i] += 1;
    v[j] -= 1;
    return v;
}

// HNF basis of span{ e_i - e_j : i, j in members }
IntMat class_difference_lattice(int n, const std::vector<int>& members) {
    IntMat gens;
    for (size_t t = 1; t < members.size(); ++t)
        gens.push_back(unit_difference(n, members[0], members[t]));
    return hnf_rows(std::move(gens));
}

Int pollard_rho(const Int& x) {
    // Brent's cycle variant; x must be odd, composite, > 1.
    std::mt19937_64 gen(0x9e3779b97f4a7c15ULL);
    while (true) {
        Int y = Int(gen()) % x, c = Int(gen()) % x + 1, m = 128;
        Int g = 1, r = 1, q = 1, ys = y, xx = y;
        while (g == 1) {
            xx = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % x;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(m, Int(r - k));
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % x;
                    q = q * abs(xx - y) % x;
                }
                g = gcd(q, x);
                k += m;
            }
            r *= 2;
        }
        if (g == x) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % x;
                g = gcd(abs(xx - ys), x);
            }
        }
        if (g != x) return g;
    }
}

void factor_positive_into(Int x, long long sign, std::map<Int, long long>& out) {
    if (x <= 0) throw InputError("factorization requires a positive integer");
    for (Int p : {Int(2), Int(3), Int(5)}) {
        while (x % p == 0) {
            out[p] += sign;
            x /= p;
        }
    }
    for (Int d = 7; d * d <= x && d < 100000; d += 2) {
        while (x % d == 0) {
            out[d] += sign;
            x /= d;
        }
    }
    if (x == 1) return;
    if (x < Int(100000) * Int(100000) ||
        boost::multiprecision::miller_rabin_test(x, 40)) {
        out[x] += sign;
        return;
    }
    Int d = pollard_rho(x);
    factor_positive_into(d, sign, out);
    factor_positive_into(x / d, sign, out);
}

}  // namespace

std::map<Int, long long> factor_rational(const Rational& x) {
    if (x <= 0) throw InputError("factorization requires a positive rational");
    std::map<Int, long long> out;
    factor_positive_into(numerator(x), +1, out);
    factor_positive_into(denominator(x), -1, out);
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Spectrum Spectrum::exact(std::vector<Rational> mu) {
    if (mu.size() < 2) throw InputError("spectrum: n must be at least 2");
    for (size_t i = 0; i < mu.size(); ++i)
        if (!(mu[i] > 0 && mu[i] < 1))
            throw InputError("spectrum: mu[" + std::to_string(i + 1) +
                             "] must lie strictly inside (0,1)");
    Spectrum s;
    s.n_ = static_cast<int>(mu.size());
    s.mode_ = SpectrumMode::Exact;
    s.mu_ = std::move(mu);
    return s;
}

Spectrum Spectrum::symbolic(std::vector<int> class_labels) {
    if (class_labels.size() < 2) throw InputError("spectrum: n must be at least 2");
    // normalize labels to 0..c-1 in order of first occurrence
    std::map<int, int> remap;
    std::vector<int> norm;
    norm.reserve(class_labels.size());
    for (int label : class_labels) {
        auto [it, fresh] = remap.emplace(label, static_cast<int>(remap.size()));
        norm.push_back(it->second);
    }
    Spectrum s;
    s.n_ = static_cast<int>(class_labels.size());
    s.mode_ = SpectrumMode::Symbolic;
    s.classes_ = std::move(norm);
    return s;
}

const std::vector<Rational>& Spectrum::mu() const {
    if (!is_exact()) throw SymbolicModeUnsupported("exact eigenvalues unavailable in symbolic mode");
    return mu_;
}

const Rational& Spectrum::mu(int i) const { return mu()[i]; }

const std::vector<int>& Spectrum::classes() const {
    if (is_exact()) throw InputError("class labels unavailable in exact mode");
    return classes_;
}

bool Spectrum::same_class(int i, int j) const {
    if (is_exact()) return mu_[i] == mu_[j];
    return classes_[i] == classes_[j];
}

Rational Spectrum::eigenvalue_product(const std::vector<long long>& e) const {
    if (e.size() != static_cast<size_t>(n_))
        throw DimensionMismatch("exponent vector length differs from n");
    Rational acc(1);
    for (int i = 0; i < n_; ++i) acc *= rational_pow(mu()[i], e[i]);
    return acc;
}

bool RelationLattice::contains(const IntVec& v) const {
    if (v.size() != static_cast<size_t>(n))
        throw DimensionMismatch("lattice membership: vector length differs from n");
    return in_row_span(basis, v);
}

std::string HopfClass::name() const {
    switch (tag) {
        case Tag::Classical: return "Classical";
        case Tag::NoResonance: return "NoResonance";
        case Tag::WeakNoResonance: return "WeakNoResonance";
        case Tag::GeneralResonant: return "GeneralResonant";
    }
    return "?";
}

long long Character::total() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0LL);
}

RelationLattice compute_relation_lattice(const Spectrum& s) {
    const int n = s.n();
    if (!s.is_exact()) {
        // generated by differences inside each asserted equality class
        std::map<int, std::vector<int>> members;
        for (int i = 0; i < n; ++i) members[s.classes()[i]].push_back(i);
        IntMat gens;
        for (const auto& [label, idx] : members)
            for (size_t t = 1; t < idx.size(); ++t)
                gens.push_back(unit_difference(n, idx[0], idx[t]));
        return {n, hnf_rows(std::move(gens))};
    }
    // Exact: the lattice is the integer kernel of the prime-exponent matrix.
    std::map<Int, long long> support;
    std::vector<std::map<Int, long long>> fac(n);
    for (int i = 0; i < n; ++i) {
        fac[i] = factor_rational(s.mu(i));
        for (const auto& [p, e] : fac[i]) support[p] = 0;
    }
    IntMat m;
    for (const auto& [p, unused] : support) {
        IntVec row(n, 0);
        for (int i = 0; i < n; ++i) {
            auto it = fac[i].find(p);
            if (it != fac[i].end()) row[i] = it->second;
        }
        m.push_back(std::move(row));
    }
    return {n, integer_kernel(m, n)};
}

HopfClass classify(const Spectrum& s, const RelationLattice& lattice) {
    const int n = s.n();
    if (lattice.is_trivial()) return {HopfClass::Tag::NoResonance};

    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    if (lattice.basis == class_difference_lattice(n, all)) return {HopfClass::Tag::Classical};

    // equality classes induced by the lattice: i ~ j iff e_i - e_j in L
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < n; ++i) {
        bool placed = false;
        for (auto& g : groups) {
            if (lattice.contains(unit_difference(n, g[0], i))) {
                g.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({i});
    }
    std::vector<int> big;
    int nontrivial = 0;
    for (const auto& g : groups)
        if (g.size() >= 2) {
            ++nontrivial;
            big = g;
        }
    if (nontrivial == 1 && static_cast<int>(big.size()) <= n - 1 &&
        lattice.basis == class_difference_lattice(n, big)) {
        HopfClass c;
        c.tag = HopfClass::Tag::WeakNoResonance;
        c.block_size = static_cast<int>(big.size());
        c.block = big;
        c.perm = big;
        for (int i = 0; i < n; ++i)
            if (std::find(big.begin(), big.end(), i) == big.end()) c.perm.push_back(i);
        return c;
    }
    return {HopfClass::Tag::GeneralResonant};
}

HopfClass classify(const Spectrum& s) { return classify(s, compute_relation_lattice(s)); }

bool lattice_member(const RelationLattice& lattice, const IntVec& v) {
    return lattice.contains(v);
}

Character character_from_exponents(const Spectrum& s, std::vector<long long> m) {
    if (m.size() != static_cast<size_t>(s.n()))
        throw DimensionMismatch("character exponent vector length differs from n");
    Character c;
    c.exponents = std::move(m);
    if (s.is_exact()) c.value = s.eigenvalue_product(c.exponents);
    return c;
}

Character character_from_value(const Spectrum& s, const Rational& value) {
    if (!s.is_exact())
        throw SymbolicModeUnsupported("character_from_value requires an exact spectrum");
    if (value <= 0) throw InputError("character value must be a positive rational");
    const int n = s.n();

    std::map<Int, long long> support;
    std::vector<std::map<Int, long long>> fac(n);
    for (int i = 0; i < n; ++i) {
        fac[i] = factor_rational(s.mu(i));
        for (const auto& [p, e] : fac[i]) support[p] = 0;
    }
    auto vfac = factor_rational(value);
    for (const auto& [p, e] : vfac)
        if (!support.count(p))
            throw NotMonomialCharacter("value has prime factor outside the eigenvalue support");

    IntMat m;
    IntVec rhs;
    for (const auto& [p, unused] : support) {
        IntVec row(n, 0);
        for (int i = 0; i < n; ++i) {
            auto it = fac[i].find(p);
            if (it != fac[i].end()) row[i] = it->second;
        }
        m.push_back(std::move(row));
        auto it = vfac.find(p);
        rhs.push_back(it != vfac.end() ? Int(it->second) : Int(0));
    }
    auto sol = solve_integer(m, rhs, n);
    if (!sol) throw NotMonomialCharacter("value is not a monomial in the eigenvalues");

    IntVec reduced = reduce_mod_rows(integer_kernel(m, n), std::move(*sol));
    std::vector<long long> exps(n);
    for (int i = 0; i < n; ++i) exps[i] = static_cast<long long>(reduced[i]);
    Character c;
    c.exponents = std::move(exps);
    c.value = s.eigenvalue_product(c.exponents);
    if (*c.value != value) throw InputError("internal: character reconstruction mismatch");
    return c;
}

bool characters_equivalent(const RelationLattice& lattice, const Character& a,
                           const Character& b) {
    if (a.exponents.size() != b.exponents.size()) return false;
    IntVec diff(a.exponents.size());
    for (size_t i = 0; i < diff.size(); ++i) diff[i] = Int(a.exponents[i]) - Int(b.exponents[i]);
    return lattice.contains(diff);
}

}  // namespace hopfpfaff
