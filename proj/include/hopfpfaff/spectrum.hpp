#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfpfaff/intlinalg.hpp"
#include "hopfpfaff/numbers.hpp"

namespace hopfpfaff {

enum class SpectrumMode { Exact, Symbolic };

// The diagonal contraction data: eigenvalues mu_1..mu_n of f(z) = (mu_1 z_1,
// ..., mu_n z_n). Exact mode stores positive rationals in (0,1); symbolic
// mode stores equality-class labels with the assertion that distinct classes
// satisfy no multiplicative relation.
class Spectrum {
  public:
    static Spectrum exact(std::vector<Rational> mu);
    static Spectrum symbolic(std::vector<int> class_labels);

    int n() const { return n_; }
    SpectrumMode mode() const { return mode_; }
    bool is_exact() const { return mode_ == SpectrumMode::Exact; }

    const std::vector<Rational>& mu() const;
    const Rational& mu(int i) const;
    // normalized class labels, 0-based, in order of first occurrence
    const std::vector<int>& classes() const;
    bool same_class(int i, int j) const;

    // prod mu_i^{e_i}, exact mode only
    Rational eigenvalue_product(const std::vector<long long>& e) const;

  private:
    Spectrum() = default;
    int n_ = 0;
    SpectrumMode mode_ = SpectrumMode::Exact;
    std::vector<Rational> mu_;
    std::vector<int> classes_;
};

// Integer lattice { r in Z^n : prod mu_i^{r_i} = 1 }, basis rows in
// canonical HNF.
struct RelationLattice {
    int n = 0;
    IntMat basis;

    int rank() const { return static_cast<int>(basis.size()); }
    bool is_trivial() const { return basis.empty(); }
    bool contains(const IntVec& v) const;
    IntVec reduce(IntVec v) const { return reduce_mod_rows(basis, std::move(v)); }
    bool operator==(const RelationLattice& o) const { return n == o.n && basis == o.basis; }
};

struct HopfClass {
    enum class Tag { Classical, NoResonance, WeakNoResonance, GeneralResonant };
    Tag tag = Tag::GeneralResonant;
    // weak no-resonance only
    int block_size = 0;      // r
    std::vector<int> block;  // 0-based indices of the repeated eigenvalue class, sorted
    std::vector<int> perm;   // perm[p] = original index of position p after moving the block first

    std::string name() const;
    bool is(Tag t) const { return tag == t; }
};

// Line bundle character b = prod mu_i^{m_i}, stored as the exponent vector.
// Two characters are equivalent iff their difference lies in the relation
// lattice. `value` is filled in exact mode.
struct Character {
    std::vector<long long> exponents;
    std::optional<Rational> value;

    long long total() const;
};

RelationLattice compute_relation_lattice(const Spectrum& s);
HopfClass classify(const Spectrum& s, const RelationLattice& lattice);
HopfClass classify(const Spectrum& s);

// v must have length n; true iff v is an integer combination of basis rows.
bool lattice_member(const RelationLattice& lattice, const IntVec& v);

Character character_from_exponents(const Spectrum& s, std::vector<long long> m);
// Exact mode only: solve prod mu_i^{m_i} = value over the integers and return
// the representative canonically reduced against the relation lattice.
// Throws NotMonomialCharacter when no integer solution exists.
Character character_from_value(const Spectrum& s, const Rational& value);

bool characters_equivalent(const RelationLattice& lattice, const Character& a, const Character& b);

// Prime factorization of a positive rational, exponents of either sign.
std::map<Int, long long> factor_rational(const Rational& x);

}  // namespace hopfpfaff
