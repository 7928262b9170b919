#include "hopfpfaff/exterior.hpp"

#include <algorithm>
#include <numeric>

#include "hopfpfaff/errors.hpp"

namespace hopfpfaff {

long long exponent_degree(const Exponents& a) {
    return std::accumulate(a.begin(), a.end(), 0LL);
}

namespace {

void check_exponents(int n, const Exponents& alpha) {
    if (alpha.size() != static_cast<size_t>(n))
        throw DimensionMismatch("exponent vector length differs from n");
    for (int e : alpha)
        if (e < 0) throw InputError("monomial exponents must be nonnegative");
}

void check_tuple(int n, int k, const IdxTuple& idx) {
    if (idx.size() != static_cast<size_t>(k))
        throw InputError("index tuple length differs from the form degree");
    for (size_t t = 0; t < idx.size(); ++t) {
        if (idx[t] < 0 || idx[t] >= n) throw InputError("index tuple entry out of range");
        if (t > 0 && idx[t - 1] >= idx[t])
            throw InputError("index tuple must be strictly increasing");
    }
}

}  // namespace

Poly Poly::constant(int n, GaussRat c) {
    Poly p(n);
    p.add_term(Exponents(n, 0), c);
    return p;
}

Poly Poly::variable(int n, int i) {
    Exponents alpha(n, 0);
    alpha[i] = 1;
    return monomial(n, std::move(alpha), GaussRat(1));
}

Poly Poly::monomial(int n, Exponents alpha, GaussRat c) {
    check_exponents(n, alpha);
    Poly p(n);
    p.add_term(alpha, c);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && exponent_degree(terms_.begin()->first) == 0;
}

void Poly::add_term(const Exponents& alpha, const GaussRat& c) {
    if (c.is_zero()) return;
    check_exponents(n_, alpha);
    auto [it, fresh] = terms_.emplace(alpha, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (n_ != o.n_) throw DimensionMismatch("polynomial dimension mismatch");
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (n_ != o.n_) throw DimensionMismatch("polynomial dimension mismatch");
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("polynomial dimension mismatch");
    Poly out(a.n_);
    for (const auto& [alpha, c] : a.terms_) {
        for (const auto& [beta, d] : b.terms_) {
            Exponents gamma(alpha.size());
            for (size_t i = 0; i < gamma.size(); ++i) gamma[i] = alpha[i] + beta[i];
            out.add_term(gamma, c * d);
        }
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out(n_);
    for (const auto& [alpha, c] : terms_) out.terms_.emplace(alpha, -c);
    return out;
}

Poly Poly::scaled(const GaussRat& c) const {
    Poly out(n_);
    if (c.is_zero()) return out;
    for (const auto& [alpha, coeff] : terms_) out.terms_.emplace(alpha, coeff * c);
    return out;
}

Poly Poly::derivative(int i) const {
    Poly out(n_);
    for (const auto& [alpha, c] : terms_) {
        if (alpha[i] == 0) continue;
        Exponents beta = alpha;
        beta[i] -= 1;
        out.add_term(beta, c * Rational(alpha[i]));
    }
    return out;
}

Poly Poly::diagonal_substitution(const std::vector<Rational>& mu) const {
    if (mu.size() != static_cast<size_t>(n_))
        throw DimensionMismatch("substitution vector length differs from n");
    Poly out(n_);
    for (const auto& [alpha, c] : terms_) {
        Rational scale(1);
        for (int i = 0; i < n_; ++i) scale *= rational_pow(mu[i], alpha[i]);
        out.terms_.emplace(alpha, c * scale);
    }
    return out;
}

Poly Poly::substitute_zero(const std::vector<int>& zeroed) const {
    Poly out(n_);
    for (const auto& [alpha, c] : terms_) {
        bool survives = true;
        for (int i : zeroed)
            if (alpha[i] > 0) {
                survives = false;
                break;
            }
        if (survives) out.terms_.emplace(alpha, c);
    }
    return out;
}

GaussRat Poly::eval(const std::vector<GaussRat>& point) const {
    if (point.size() != static_cast<size_t>(n_))
        throw DimensionMismatch("evaluation point length differs from n");
    GaussRat acc;
    for (const auto& [alpha, c] : terms_) {
        GaussRat term = c;
        for (int i = 0; i < n_; ++i)
            if (alpha[i] > 0) term *= gauss_pow(point[i], alpha[i]);
        acc += term;
    }
    return acc;
}

long long Poly::degree() const {
    if (terms_.empty()) return -1;
    return exponent_degree(terms_.rbegin()->first);  // grlex: last key has max degree
}

bool Poly::is_homogeneous(long long* deg) const {
    if (terms_.empty()) {
        if (deg) *deg = -1;
        return true;
    }
    long long d = exponent_degree(terms_.begin()->first);
    for (const auto& [alpha, c] : terms_)
        if (exponent_degree(alpha) != d) return false;
    if (deg) *deg = d;
    return true;
}

Exponents Poly::content_exponents() const {
    if (terms_.empty()) return Exponents(n_, 0);
    Exponents m = terms_.begin()->first;
    for (const auto& [alpha, c] : terms_)
        for (int i = 0; i < n_; ++i) m[i] = std::min(m[i], alpha[i]);
    return m;
}

Poly Poly::strip_content() const {
    Exponents m = content_exponents();
    Poly out(n_);
    for (const auto& [alpha, c] : terms_) {
        Exponents beta(n_);
        for (int i = 0; i < n_; ++i) beta[i] = alpha[i] - m[i];
        out.terms_.emplace(beta, c);
    }
    return out;
}

std::vector<int> Poly::support() const {
    std::vector<bool> seen(n_, false);
    for (const auto& [alpha, c] : terms_)
        for (int i = 0; i < n_; ++i)
            if (alpha[i] > 0) seen[i] = true;
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [alpha, c] : terms_) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            if (alpha[i] == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += "z" + std::to_string(i + 1);
            if (alpha[i] > 1) mono += "^" + std::to_string(alpha[i]);
        }
        if (mono.empty()) {
            s += c.str();
        } else if (c == GaussRat(1)) {
            s += mono;
        } else {
            s += c.str() + " " + mono;
        }
    }
    return s;
}

KForm::KForm(int n, int k) : n_(n), k_(k) {
    if (n < 1 || k < 0 || k > n) throw InputError("form degree must satisfy 0 <= k <= n");
}

KForm KForm::monomial_term(int n, const IdxTuple& idx, const Exponents& alpha, GaussRat c) {
    KForm w(n, static_cast<int>(idx.size()));
    w.add_term(idx, Poly::monomial(n, alpha, std::move(c)));
    return w;
}

void KForm::add_term(const IdxTuple& idx, const Poly& g) {
    check_tuple(n_, k_, idx);
    if (g.n() != n_) throw DimensionMismatch("coefficient dimension differs from form dimension");
    if (g.is_zero()) return;
    auto [it, fresh] = terms_.emplace(idx, g);
    if (!fresh) {
        it->second += g;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const Poly* KForm::coefficient(const IdxTuple& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? nullptr : &it->second;
}

KForm& KForm::operator+=(const KForm& o) {
    if (n_ != o.n_ || k_ != o.k_) throw DimensionMismatch("form degree or dimension mismatch");
    for (const auto& [idx, g] : o.terms_) add_term(idx, g);
    return *this;
}

KForm& KForm::operator-=(const KForm& o) {
    if (n_ != o.n_ || k_ != o.k_) throw DimensionMismatch("form degree or dimension mismatch");
    for (const auto& [idx, g] : o.terms_) add_term(idx, -g);
    return *this;
}

KForm KForm::scaled(const GaussRat& c) const {
    KForm out(n_, k_);
    if (c.is_zero()) return out;
    for (const auto& [idx, g] : terms_) out.terms_.emplace(idx, g.scaled(c));
    return out;
}

std::string KForm::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [idx, g] : terms_) {
        if (!s.empty()) s += " + ";
        std::string coeff = g.str();
        if (g.term_count() > 1) coeff = "(" + coeff + ")";
        if (k_ == 0) {
            s += coeff;
            continue;
        }
        if (coeff == "1")
            s += tuple_str(idx, "dz");
        else
            s += coeff + " " + tuple_str(idx, "dz");
    }
    return s;
}

PolyVectorField::PolyVectorField(std::vector<Poly> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw InputError("vector field needs at least one component");
    for (const auto& p : comps_)
        if (p.n() != n()) throw DimensionMismatch("vector field component dimension mismatch");
}

PolyVectorField PolyVectorField::coordinate(int n, int i) {
    PolyVectorField v(n);
    v[i] = Poly::constant(n, GaussRat(1));
    return v;
}

bool PolyVectorField::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Poly& p) { return p.is_zero(); });
}

int merge_sign(const IdxTuple& a, const IdxTuple& b, IdxTuple& merged) {
    merged.clear();
    merged.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    long long inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            merged.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining entries of a
            inversions += static_cast<long long>(a.size() - i);
            merged.push_back(b[j++]);
        }
    }
    while (i < a.size()) merged.push_back(a[i++]);
    while (j < b.size()) merged.push_back(b[j++]);
    return (inversions % 2 == 0) ? 1 : -1;
}

KForm wedge(const KForm& a, const KForm& b) {
    if (a.n() != b.n()) throw DimensionMismatch("wedge operands live in different dimensions");
    const int n = a.n();
    const int k = a.k() + b.k();
    if (k > n) return KForm(n, n);  // zero form
    KForm out(n, k);
    IdxTuple merged;
    for (const auto& [ia, ga] : a.terms()) {
        for (const auto& [ib, gb] : b.terms()) {
            int sign = merge_sign(ia, ib, merged);
            if (sign == 0) continue;
            Poly prod = ga * gb;
            if (sign < 0) prod = -prod;
            out.add_term(merged, prod);
        }
    }
    return out;
}

KForm ext_d(const KForm& w) {
    const int n = w.n();
    if (w.k() >= n) return KForm(n, n);  // d of a top form vanishes
    KForm out(n, w.k() + 1);
    for (const auto& [idx, g] : w.terms()) {
        for (int j = 0; j < n; ++j) {
            Poly dg = g.derivative(j);
            if (dg.is_zero()) continue;
            if (std::binary_search(idx.begin(), idx.end(), j)) continue;
            IdxTuple ext = idx;
            auto pos = std::upper_bound(ext.begin(), ext.end(), j);
            long long before = pos - ext.begin();
            ext.insert(pos, j);
            if (before % 2 == 1) dg = -dg;
            out.add_term(ext, dg);
        }
    }
    return out;
}

KForm interior(const PolyVectorField& v, const KForm& w) {
    if (v.n() != w.n()) throw DimensionMismatch("interior product dimension mismatch");
    if (w.k() < 1) throw InputError("interior product needs a form of degree at least 1");
    KForm out(w.n(), w.k() - 1);
    for (const auto& [idx, g] : w.terms()) {
        for (size_t t = 0; t < idx.size(); ++t) {
            const Poly& comp = v[idx[t]];
            if (comp.is_zero()) continue;
            Poly coeff = g * comp;
            if (t % 2 == 1) coeff = -coeff;
            IdxTuple rest;
            rest.reserve(idx.size() - 1);
            for (size_t u = 0; u < idx.size(); ++u)
                if (u != t) rest.push_back(idx[u]);
            out.add_term(rest, coeff);
        }
    }
    return out;
}

KForm contract_coord(const KForm& w, int j) {
    KForm out(w.n(), w.k() - 1);
    for (const auto& [idx, g] : w.terms()) {
        auto it = std::lower_bound(idx.begin(), idx.end(), j);
        if (it == idx.end() || *it != j) continue;
        size_t t = it - idx.begin();
        IdxTuple rest;
        rest.reserve(idx.size() - 1);
        for (size_t u = 0; u < idx.size(); ++u)
            if (u != t) rest.push_back(idx[u]);
        out.add_term(rest, t % 2 == 1 ? -g : g);
    }
    return out;
}

KForm contract_tuple(const KForm& w, const IdxTuple& j) {
    const int final_k = w.k() - static_cast<int>(j.size());
    if (final_k < 0) throw InputError("contraction tuple longer than the form degree");
    KForm out = w;
    for (int idx : j) {
        if (out.is_zero()) return KForm(w.n(), final_k);
        out = contract_coord(out, idx);
    }
    return out;
}

PolyVectorField lie_bracket(const PolyVectorField& v, const PolyVectorField& w) {
    if (v.n() != w.n()) throw DimensionMismatch("bracket operands live in different dimensions");
    const int n = v.n();
    PolyVectorField out(n);
    for (int j = 0; j < n; ++j) {
        Poly acc(n);
        for (int i = 0; i < n; ++i) {
            if (!v[i].is_zero()) acc += v[i] * w[j].derivative(i);
            if (!w[i].is_zero()) acc -= w[i] * v[j].derivative(i);
        }
        out[j] = std::move(acc);
    }
    return out;
}

KForm pullback_f(const Spectrum& s, const KForm& w) {
    if (!s.is_exact())
        throw SymbolicModeUnsupported("pullback requires an exact spectrum");
    if (s.n() != w.n()) throw DimensionMismatch("pullback dimension mismatch");
    KForm out(w.n(), w.k());
    for (const auto& [idx, g] : w.terms()) {
        Rational scale(1);
        for (int i : idx) scale *= s.mu(i);
        out.add_term(idx, g.diagonal_substitution(s.mu()).scaled(GaussRat(scale)));
    }
    return out;
}

KForm form_of(const PolyVectorField& v) {
    KForm out(v.n(), 1);
    for (int i = 0; i < v.n(); ++i) out.add_term({i}, v[i]);
    return out;
}

std::vector<IdxTuple> increasing_tuples(int n, int k) {
    std::vector<IdxTuple> out;
    if (k < 0 || k > n) return out;
    IdxTuple cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int t = k - 1;
        while (t >= 0 && cur[t] == n - k + t) --t;
        if (t < 0) break;
        ++cur[t];
        for (int u = t + 1; u < k; ++u) cur[u] = cur[u - 1] + 1;
    }
    return out;
}

std::string tuple_str(const IdxTuple& idx, const std::string& prefix) {
    std::string s;
    for (size_t t = 0; t < idx.size(); ++t) {
        if (t) s += "^";
        s += prefix + std::to_string(idx[t] + 1);
    }
    return s;
}

}  // namespace hopfpfaff
