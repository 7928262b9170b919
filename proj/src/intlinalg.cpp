#include "hopfpfaff/intlinalg.hpp"

#include <algorithm>

namespace hopfpfaff {

namespace {

// floor division for cpp_int (operator/ truncates toward zero)
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

void sub_scaled(IntVec& row, const IntVec& other, const Int& q) {
    if (q == 0) return;
    for (size_t i = 0; i < row.size(); ++i) row[i] -= q * other[i];
}

// Reduce rows of `a` to row echelon form by unimodular row operations,
// mirroring every operation on `u` when `u` is non-null.
void echelonize(IntMat& a, IntMat* u) {
    if (a.empty()) return;
    const size_t cols = a[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < a.size(); ++col) {
        // gcd out the column below pivot_row by repeated remainder steps
        while (true) {
            size_t best = a.size();
            for (size_t r = pivot_row; r < a.size(); ++r) {
                if (a[r][col] == 0) continue;
                if (best == a.size() || abs(a[r][col]) < abs(a[best][col])) best = r;
            }
            if (best == a.size()) break;  // column zero below pivot_row
            std::swap(a[pivot_row], a[best]);
            if (u) std::swap((*u)[pivot_row], (*u)[best]);
            bool cleared = true;
            for (size_t r = pivot_row + 1; r < a.size(); ++r) {
                if (a[r][col] == 0) continue;
                Int q = floor_div(a[r][col], a[pivot_row][col]);
                sub_scaled(a[r], a[pivot_row], q);
                if (u) sub_scaled((*u)[r], (*u)[pivot_row], q);
                if (a[r][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (a[pivot_row][col] == 0) continue;
        if (a[pivot_row][col] < 0) {
            for (auto& x : a[pivot_row]) x = -x;
            if (u)
                for (auto& x : (*u)[pivot_row]) x = -x;
        }
        ++pivot_row;
    }
}

// Reduce entries above each pivot into [0, pivot). Requires echelon form.
void reduce_above(IntMat& a) {
    for (size_t r = 0; r < a.size(); ++r) {
        size_t col = 0;
        while (col < a[r].size() && a[r][col] == 0) ++col;
        if (col == a[r].size()) continue;
        for (size_t s = 0; s < r; ++s) {
            Int q = floor_div(a[s][col], a[r][col]);
            sub_scaled(a[s], a[r], q);
        }
    }
}

bool is_zero_row(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

}  // namespace

IntMat hnf_rows(IntMat rows) {
    echelonize(rows, nullptr);
    rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero_row), rows.end());
    reduce_above(rows);
    return rows;
}

HnfTransform hnf_with_transform(IntMat a) {
    IntMat u(a.size(), IntVec(a.size(), 0));
    for (size_t i = 0; i < a.size(); ++i) u[i][i] = 1;
    echelonize(a, &u);
    return {std::move(a), std::move(u)};
}

IntMat integer_kernel(const IntMat& m, int cols) {
    // Row reduce m^T carrying the identity: zero rows of the reduced m^T
    // correspond to unimodular combinations annihilating every row of m.
    IntMat at(cols, IntVec(m.size(), 0));
    for (size_t r = 0; r < m.size(); ++r)
        for (int c = 0; c < cols; ++c) at[c][r] = m[r][c];
    auto [h, u] = hnf_with_transform(std::move(at));
    IntMat kernel;
    for (size_t r = 0; r < h.size(); ++r)
        if (is_zero_row(h[r])) kernel.push_back(u[r]);
    return hnf_rows(std::move(kernel));
}

std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& rhs, int cols) {
    // x^T m^T = rhs^T. With u * m^T = h, write x^T = c^T u and solve c^T h = rhs^T
    // against the pivot structure of h.
    IntMat at(cols, IntVec(m.size(), 0));
    for (size_t r = 0; r < m.size(); ++r)
        for (int c = 0; c < cols; ++c) at[c][r] = m[r][c];
    auto [h, u] = hnf_with_transform(std::move(at));

    IntVec residual = rhs;
    IntVec c(cols, 0);
    for (size_t r = 0; r < h.size(); ++r) {
        size_t col = 0;
        while (col < h[r].size() && h[r][col] == 0) ++col;
        if (col == h[r].size()) continue;
        if (residual[col] % h[r][col] != 0) return std::nullopt;
        Int q = residual[col] / h[r][col];
        c[r] = q;
        for (size_t j = 0; j < residual.size(); ++j) residual[j] -= q * h[r][j];
    }
    if (!is_zero_row(residual)) return std::nullopt;

    IntVec x(cols, 0);
    for (int r = 0; r < cols; ++r)
        if (c[r] != 0)
            for (int j = 0; j < cols; ++j) x[j] += c[r] * u[r][j];
    return x;
}

bool in_row_span(const IntMat& hnf, const IntVec& v) {
    IntVec w = v;
    for (const auto& row : hnf) {
        size_t col = 0;
        while (col < row.size() && row[col] == 0) ++col;
        if (col == row.size()) continue;
        if (w[col] % row[col] != 0) return false;
        sub_scaled(w, row, w[col] / row[col]);
    }
    return is_zero_row(w);
}

IntVec reduce_mod_rows(const IntMat& hnf, IntVec v) {
    for (const auto& row : hnf) {
        size_t col = 0;
        while (col < row.size() && row[col] == 0) ++col;
        if (col == row.size()) continue;
        sub_scaled(v, row, floor_div(v[col], row[col]));
    }
    return v;
}

}  // namespace hopfpfaff
