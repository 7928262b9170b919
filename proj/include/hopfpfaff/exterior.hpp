#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfpfaff/numbers.hpp"
#include "hopfpfaff/spectrum.hpp"

namespace hopfpfaff {

// Exponent vector in N^n. Keys are ordered graded-lexicographically so equal
// polynomials have identical representations.
using Exponents = std::vector<int>;

long long exponent_degree(const Exponents& a);

struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        long long da = exponent_degree(a), db = exponent_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse polynomial over Q(i). No zero coefficients are stored.
class Poly {
  public:
    using TermMap = std::map<Exponents, GaussRat, GrlexLess>;

    explicit Poly(int n) : n_(n) {}
    static Poly constant(int n, GaussRat c);
    static Poly variable(int n, int i);
    static Poly monomial(int n, Exponents alpha, GaussRat c);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& alpha, const GaussRat& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly scaled(const GaussRat& c) const;
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    Poly derivative(int i) const;
    // z_i -> mu_i z_i
    Poly diagonal_substitution(const std::vector<Rational>& mu) const;
    // z_i -> 0 for i in zeroed
    Poly substitute_zero(const std::vector<int>& zeroed) const;
    GaussRat eval(const std::vector<GaussRat>& point) const;

    long long degree() const;  // -1 for the zero polynomial
    bool is_homogeneous(long long* deg = nullptr) const;
    // componentwise minimum exponent over all terms (the monomial content)
    Exponents content_exponents() const;
    // quotient by z^content; exact by construction
    Poly strip_content() const;
    // union of variables appearing in some term
    std::vector<int> support() const;

    std::string str() const;

  private:
    int n_;
    TermMap terms_;
};

// Strictly increasing 0-based index tuple; degree-k basis covector dz_I.
using IdxTuple = std::vector<int>;

// Twisted polynomial k-form sum_I g_I dz_I. Index tuples strictly increasing,
// zero coefficient polynomials pruned.
class KForm {
  public:
    KForm(int n, int k);
    static KForm monomial_term(int n, const IdxTuple& idx, const Exponents& alpha, GaussRat c);

    int n() const { return n_; }
    int k() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<IdxTuple, Poly>& terms() const { return terms_; }

    void add_term(const IdxTuple& idx, const Poly& g);
    const Poly* coefficient(const IdxTuple& idx) const;

    KForm& operator+=(const KForm& o);
    KForm& operator-=(const KForm& o);
    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    KForm scaled(const GaussRat& c) const;
    friend bool operator==(const KForm& a, const KForm& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.terms_ == b.terms_;
    }

    std::string str() const;

  private:
    int n_, k_;
    std::map<IdxTuple, Poly> terms_;
};

// Polynomial vector field sum_i v_i d/dz_i.
class PolyVectorField {
  public:
    explicit PolyVectorField(int n) : comps_(n, Poly(n)) {}
    explicit PolyVectorField(std::vector<Poly> comps);
    static PolyVectorField coordinate(int n, int i);  // d/dz_i

    int n() const { return static_cast<int>(comps_.size()); }
    const Poly& operator[](int i) const { return comps_[i]; }
    Poly& operator[](int i) { return comps_[i]; }
    bool is_zero() const;

  private:
    std::vector<Poly> comps_;
};

KForm wedge(const KForm& a, const KForm& b);
KForm ext_d(const KForm& w);
KForm interior(const PolyVectorField& v, const KForm& w);
// iota_{d/dz_j}
KForm contract_coord(const KForm& w, int j);
// fold of contract_coord over J, first index applied first
KForm contract_tuple(const KForm& w, const IdxTuple& j);
PolyVectorField lie_bracket(const PolyVectorField& v, const PolyVectorField& w);
// substitutes z_i -> mu_i z_i and rescales each dz_I; exact spectra only
KForm pullback_f(const Spectrum& s, const KForm& w);
// degree-1 form with the same components (shared wedge combinatorics for
// multivector identities)
KForm form_of(const PolyVectorField& v);

// parity sign merging two disjoint increasing tuples, 0 when they intersect
int merge_sign(const IdxTuple& a, const IdxTuple& b, IdxTuple& merged);

// all strictly increasing k-tuples from {0..n-1}, lexicographic order
std::vector<IdxTuple> increasing_tuples(int n, int k);

std::string tuple_str(const IdxTuple& idx, const std::string& prefix);

}  // namespace hopfpfaff
