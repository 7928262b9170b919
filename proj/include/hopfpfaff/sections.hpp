#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfpfaff/exterior.hpp"
#include "hopfpfaff/spectrum.hpp"

namespace hopfpfaff {

// One instance of "compute H^0(X, Omega^k tensor L_b) as ker p0".
struct SectionProblem {
    Spectrum spectrum;
    RelationLattice lattice;
    HopfClass hopf_class;
    int k = 0;
    Character character;

    // computes lattice and class, checks n >= 3 and 1 <= k <= n-1
    static SectionProblem make(const Spectrum& s, int k, Character character);

    int n() const { return spectrum.n(); }
};

// Basis element z^alpha dz_I of the kernel.
struct MonomialSolution {
    IdxTuple idx;
    Exponents alpha;

    friend bool operator==(const MonomialSolution&, const MonomialSolution&) = default;
};

// idx lexicographic, then alpha graded-lex
bool solution_less(const MonomialSolution& a, const MonomialSolution& b);

struct SectionBasis {
    int n = 0;
    int k = 0;
    std::vector<MonomialSolution> solutions;  // sorted, pairwise distinct
    std::vector<std::string> flags;

    int dim() const { return static_cast<int>(solutions.size()); }
};

KForm kform_of_solution(int n, const MonomialSolution& sol);

// p0(w) = b w - f^* w; exact mode, character must carry its value.
KForm p0_apply(const Spectrum& s, const Character& b, const KForm& w);

struct CharacterVerdict {
    bool positive = false;    // dim > 0
    std::string case_id;      // "classical(i)" | "no-resonance(ii)" | "weak-no-resonance(iii)" | "general-resonant"
    std::string reason;
};

// Structural positivity test for dim ker p0, per resonance class. Agrees with
// solve_sections on every problem.
CharacterVerdict validate_character(const SectionProblem& p);

// Enumerates all monomial solutions: alpha in N^n with alpha + 1_I - m in the
// relation lattice, for every increasing k-tuple I. Closed forms for the
// classical / no-resonance / weak no-resonance classes; bounded weighted-box
// enumeration for general resonant exact spectra.
SectionBasis solve_sections(const SectionProblem& p);

// Independent oracle: builds every monomial k-form with |alpha| <= max_degree,
// applies p0, and extracts the kernel of the resulting linear system by
// sparse exact elimination. max_degree < 0 selects the provable completeness
// bound derived from the eigenvalue weights.
SectionBasis brute_force_kernel(const SectionProblem& p, long long max_degree = -1);

// Total-degree bound D such that every kernel element satisfies |alpha| <= D.
long long provable_degree_bound(const SectionProblem& p);

// The general element of the section space: one free coefficient symbol per
// monomial solution.
struct ParametricSection {
    int n = 0;
    int k = 0;
    HopfClass::Tag case_tag = HopfClass::Tag::GeneralResonant;
    std::vector<MonomialSolution> solutions;  // solution j carries symbol c{j+1}

    int free_symbols() const { return static_cast<int>(solutions.size()); }
    KForm specialize(const std::vector<GaussRat>& values) const;
    std::string str() const;
};

ParametricSection general_section(const SectionProblem& p);

}  // namespace hopfpfaff
