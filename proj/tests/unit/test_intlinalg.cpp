#include <doctest.h>

#include <algorithm>

#include "hopfpfaff/intlinalg.hpp"
#include "test_helpers.hpp"

using namespace hopfpfaff;
using namespace hopfpfaff::testing;

TEST_CASE("hnf canonicalizes generator order and signs") {
    IntMat a = {ivec({0, 1, -1}), ivec({1, -1, 0})};
    IntMat b = {ivec({-1, 1, 0}), ivec({1, 0, -1})};
    CHECK(hnf_rows(a) == hnf_rows(b));

    IntMat h = hnf_rows({ivec({2, -1, 0}), ivec({4, -2, 0})});
    CHECK(h == IntMat{ivec({2, -1, 0})});
}

TEST_CASE("hnf pivots positive and entries above reduced") {
    IntMat h = hnf_rows({ivec({1, -1, 0}), ivec({0, 1, -1})});
    REQUIRE(h.size() == 2);
    for (const auto& row : h) {
        auto lead = std::find_if(row.begin(), row.end(), [](const Int& x) { return x != 0; });
        REQUIRE(lead != row.end());
        CHECK(*lead > 0);
    }
    // above-pivot entry of column 1 reduced into [0, 1) = {0}
    CHECK(h[0] == ivec({1, 0, -1}));
    CHECK(h[1] == ivec({0, 1, -1}));
}

TEST_CASE("integer kernel of a prime exponent matrix") {
    // rows: exponents of 2 and 3 in (1/2, 1/4, 1/3)
    IntMat m = {ivec({-1, -2, 0}), ivec({0, 0, -1})};
    IntMat k = integer_kernel(m, 3);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == ivec({2, -1, 0}));
}

TEST_CASE("kernel of injective matrix is empty") {
    IntMat m = {ivec({1, 0}), ivec({0, 1})};
    CHECK(integer_kernel(m, 2).empty());
}

TEST_CASE("kernel of empty constraint set is everything") {
    IntMat k = integer_kernel({}, 3);
    REQUIRE(k.size() == 3);
    CHECK(in_row_span(k, ivec({7, -4, 12})));
}

TEST_CASE("solve_integer finds particular solutions and detects misses") {
    IntMat m = {ivec({-1, -1}), ivec({0, -1})};  // exponents of 2,3 in (1/2, 1/6)... columns mu
    auto x = solve_integer(m, ivec({-1, -1}), 2);
    REQUIRE(x.has_value());
    CHECK((*x)[0] + (*x)[1] == 1);  // first equation
    CHECK((*x)[1] == 1);            // second equation

    CHECK_FALSE(solve_integer({ivec({2, 4})}, ivec({3}), 2).has_value());
}

TEST_CASE("membership and canonical reduction") {
    IntMat h = hnf_rows({ivec({2, -1, 0})});
    CHECK(in_row_span(h, ivec({4, -2, 0})));
    CHECK_FALSE(in_row_span(h, ivec({1, 0, 0})));
    CHECK(in_row_span(h, ivec({0, 0, 0})));

    IntVec r = reduce_mod_rows(h, ivec({5, 1, 2}));
    CHECK(r[0] >= 0);
    CHECK(r[0] < 2);
    // difference must be in the lattice
    CHECK(in_row_span(h, ivec({5 - r[0], 1 - r[1], 2 - r[2]})));
}

TEST_CASE("random lattices: reduction is canonical on cosets") {
    RandomGen gen(2024);
    for (int trial = 0; trial < 50; ++trial) {
        int n = gen.uniform(2, 5);
        IntMat gens;
        int rows = gen.uniform(1, n);
        for (int r = 0; r < rows; ++r) {
            IntVec v(n);
            for (int i = 0; i < n; ++i) v[i] = gen.uniform(-3, 3);
            gens.push_back(v);
        }
        IntMat h = hnf_rows(gens);
        IntVec v(n);
        for (int i = 0; i < n; ++i) v[i] = gen.uniform(-6, 6);
        IntVec r1 = reduce_mod_rows(h, v);
        // shift by a random lattice element; reduction must agree
        IntVec w = v;
        for (const auto& row : h) {
            Int c = gen.uniform(-2, 2);
            for (int i = 0; i < n; ++i) w[i] += c * row[i];
        }
        CHECK(reduce_mod_rows(h, w) == r1);
    }
}
