#pragma once

#include <optional>
#include <vector>

#include "hopfpfaff/numbers.hpp"

namespace hopfpfaff {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row major

// Row-style Hermite normal form of the lattice spanned by the input rows.
// Canonical: pivots positive, entries above a pivot reduced into [0, pivot),
// pivot columns strictly increasing, zero rows dropped. Equal lattices yield
// identical matrices.
IntMat hnf_rows(IntMat rows);

// u * a = h with u unimodular; h is the (non-canonical) row echelon produced
// by the reduction, rows of a fully carried along so zero rows of h pair with
// kernel combinations in u.
struct HnfTransform {
    IntMat h;
    IntMat u;
};
HnfTransform hnf_with_transform(IntMat a);

// Basis, in canonical HNF, of { r in Z^cols : m * r = 0 }.
IntMat integer_kernel(const IntMat& m, int cols);

// One integer solution of m * x = rhs, or nullopt when none exists.
std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& rhs, int cols);

// Membership of v in the row span of a canonical HNF matrix.
bool in_row_span(const IntMat& hnf, const IntVec& v);

// Canonical representative of v modulo the row span of a canonical HNF
// matrix: at each pivot column the residue lies in [0, pivot).
IntVec reduce_mod_rows(const IntMat& hnf, IntVec v);

}  // namespace hopfpfaff
