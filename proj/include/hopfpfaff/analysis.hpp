#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfpfaff/exterior.hpp"
#include "hopfpfaff/sections.hpp"
#include "hopfpfaff/spectrum.hpp"

namespace hopfpfaff {

// Coordinate subspace { z_i = 0 for i in zero_set } minus the origin.
struct CoordinateStratum {
    std::vector<int> zero_set;  // 0-based, sorted, nonempty
    int codim() const { return static_cast<int>(zero_set.size()); }

    friend bool operator==(const CoordinateStratum&, const CoordinateStratum&) = default;
};

// Result of the singular-locus decomposition. `exact` is true when every
// coefficient is a single monomial; otherwise polynomial factors were decided
// by point sampling and the verdict is probabilistic.
struct SingularLocus {
    std::vector<CoordinateStratum> strata;  // maximal strata, full coordinate set excluded
    bool exact = true;
    int samples = 0;  // per-stratum sample count when probabilistic

    bool empty() const { return strata.empty(); }
    std::optional<int> codim() const;
};

SingularLocus singular_locus(const KForm& w);

// Sing(w) intersected with C^n minus the origin is empty. Vanishing only at
// the origin counts as regular.
bool is_regular(const KForm& w);

// Pluecker criterion via coordinate contractions: for every (k-1)-tuple J,
// (i_J w) wedge w = 0.
bool is_decomposable(const KForm& w);

enum class Integrability { Integrable, NonIntegrable, NotApplicable };

// Frobenius: for every (k-1)-tuple J, (i_J w) wedge dw = 0. NotApplicable for
// non-decomposable forms.
Integrability is_integrable(const KForm& w);

std::string integrability_str(Integrability v);

// f^* w = b w, tested exactly in exact mode and by per-monomial weight
// bookkeeping against the relation lattice in symbolic mode.
bool check_equivariance(const Spectrum& s, const Character& b, const KForm& w);

struct TorusWeight {
    bool invariant = false;
    std::vector<long long> weight;  // alpha(I) + 1_I, shared by all terms
};

// True iff every coefficient is a single monomial and all terms share one
// weight vector; the diagonal torus then rescales w by a single character.
TorusWeight torus_invariant(const KForm& w);

// True iff every pairwise bracket lies in the pointwise span of the
// generators, tested as a polynomial identity: [v_i, v_j] wedge v_1 ... v_q = 0.
bool distribution_involutive(const std::vector<PolyVectorField>& gens);

// Recovers the character exponents from the weight alpha + 1_I of any
// monomial, checking all monomials agree modulo the relation lattice.
// nullopt when the form is not equivariant for any character.
std::optional<Character> recover_character(const Spectrum& s, const RelationLattice& lattice,
                                           const KForm& w);

struct PfaffReport {
    int n = 0;
    int k = 0;
    std::optional<Character> character;
    bool equivariant = false;
    SingularLocus singular;
    bool regular = false;
    bool decomposable = false;
    Integrability integrable = Integrability::NotApplicable;
    std::optional<std::string> compact_leaf;
    std::vector<std::string> notes;
};

// Full analysis of one twisted form.
PfaffReport analyze_form(const Spectrum& s, const std::optional<Character>& character,
                         const KForm& w);

// Iterates every character m in {0,1}^n on a no-resonance spectrum and
// reports the systems admitting a regular member: exactly the constant forms
// C dz_I, each integrable with compact leaf {z_I = 0} minus the origin.
std::vector<PfaffReport> enumerate_regular_systems(const Spectrum& s, int k);

}  // namespace hopfpfaff
