#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hopfpfaff/errors.hpp"
#include "hopfpfaff/spectrum.hpp"
#include "test_helpers.hpp"

using namespace hopfpfaff;
using namespace hopfpfaff::testing;

TEST_CASE("spectrum validation") {
    CHECK_THROWS_AS(Spectrum::exact({Rational(1, 2)}), InputError);
    CHECK_THROWS_AS(Spectrum::exact({Rational(1, 2), Rational(3, 2)}), InputError);
    CHECK_THROWS_AS(Spectrum::exact({Rational(1, 2), Rational(0)}), InputError);
    CHECK_NOTHROW(Spectrum::exact({Rational(1, 2), Rational(999, 1000)}));
}

TEST_CASE("relation lattice of (1/2, 1/4, 1/3)") {
    Spectrum s = exact_spectrum({{1, 2}, {1, 4}, {1, 3}});
    RelationLattice l = compute_relation_lattice(s);
    REQUIRE(l.rank() == 1);
    CHECK(l.basis[0] == ivec({2, -1, 0}));
    // oracle: evaluate the relation in exact rational arithmetic
    CHECK(s.eigenvalue_product({2, -1, 0}) == Rational(1));
}

TEST_CASE("relation lattice of distinct primes is trivial") {
    Spectrum s = exact_spectrum({{1, 2}, {1, 3}, {1, 5}});
    CHECK(compute_relation_lattice(s).is_trivial());
}

TEST_CASE("symbolic equality classes generate difference lattices") {
    Spectrum s = Spectrum::symbolic({7, 7, 7});
    RelationLattice l = compute_relation_lattice(s);
    CHECK(l.basis == hnf_rows({ivec({1, -1, 0}), ivec({0, 1, -1})}));
}

TEST_CASE("every lattice basis vector is a genuine relation") {
    RandomGen gen(11);
    for (int trial = 0; trial < 30; ++trial) {
        int n = gen.uniform(2, 5);
        std::vector<Rational> mu;
        for (int i = 0; i < n; ++i) mu.emplace_back(gen.uniform(1, 5), gen.uniform(6, 12));
        Spectrum s = Spectrum::exact(mu);
        RelationLattice l = compute_relation_lattice(s);
        for (const auto& row : l.basis) {
            std::vector<long long> e(n);
            for (int i = 0; i < n; ++i) e[i] = static_cast<long long>(row[i]);
            CHECK(s.eigenvalue_product(e) == Rational(1));
        }
    }
}

TEST_CASE("classification of the named cases") {
    CHECK(classify(Spectrum::symbolic({1, 1, 1, 1})).is(HopfClass::Tag::Classical));
    CHECK(classify(classical_spectrum(4)).is(HopfClass::Tag::Classical));
    CHECK(classify(exact_spectrum({{1, 2}, {1, 3}, {1, 5}})).is(HopfClass::Tag::NoResonance));

    HopfClass weak = classify(exact_spectrum({{1, 2}, {1, 2}, {1, 3}, {1, 5}}));
    REQUIRE(weak.is(HopfClass::Tag::WeakNoResonance));
    CHECK(weak.block_size == 2);
    CHECK(weak.block == std::vector<int>{0, 1});
    CHECK(weak.perm == std::vector<int>{0, 1, 2, 3});  // identity

    // repeated block away from the front is normalized by the permutation
    HopfClass shifted = classify(exact_spectrum({{1, 3}, {1, 2}, {1, 2}, {1, 5}}));
    REQUIRE(shifted.is(HopfClass::Tag::WeakNoResonance));
    CHECK(shifted.block == std::vector<int>{1, 2});
    CHECK(shifted.perm == std::vector<int>{1, 2, 0, 3});
}

TEST_CASE("resonant spectra that fit no named case") {
    // two equality classes
    CHECK(classify(Spectrum::symbolic({1, 1, 2, 2})).is(HopfClass::Tag::GeneralResonant));
    CHECK(classify(exact_spectrum({{1, 2}, {1, 2}, {1, 3}, {1, 3}}))
              .is(HopfClass::Tag::GeneralResonant));
    // multiplicative relation without equalities: (1/2)^2 = 1/4
    CHECK(classify(exact_spectrum({{1, 2}, {1, 4}, {1, 3}})).is(HopfClass::Tag::GeneralResonant));
    // cross-class relation on top of an equality block
    CHECK(classify(exact_spectrum({{1, 2}, {1, 2}, {1, 8}})).is(HopfClass::Tag::GeneralResonant));
}

TEST_CASE("lattice membership") {
    RelationLattice l{3, hnf_rows({ivec({2, -1, 0})})};
    CHECK(lattice_member(l, ivec({4, -2, 0})));
    CHECK_FALSE(lattice_member(l, ivec({1, 0, 0})));
    RelationLattice trivial{3, {}};
    CHECK(lattice_member(trivial, ivec({0, 0, 0})));
    CHECK_THROWS_AS(lattice_member(l, ivec({1, 0})), DimensionMismatch);
}

TEST_CASE("character_from_value solves the exponent system") {
    Spectrum s = exact_spectrum({{1, 2}, {1, 3}});
    Character c = character_from_value(s, Rational(1, 6));
    CHECK(c.exponents == std::vector<long long>{1, 1});
    CHECK(*c.value == Rational(1, 6));

    CHECK_THROWS_AS(character_from_value(s, Rational(1, 7)), NotMonomialCharacter);

    Character one = character_from_value(s, Rational(1));
    CHECK(one.exponents == std::vector<long long>{0, 0});
}

TEST_CASE("character_from_value returns a representative congruent mod the lattice") {
    RandomGen gen(5);
    for (int trial = 0; trial < 30; ++trial) {
        Spectrum s = trial % 2 == 0 ? exact_spectrum({{1, 2}, {1, 4}, {1, 3}})
                                    : classical_spectrum(3);
        RelationLattice l = compute_relation_lattice(s);
        std::vector<long long> m(3);
        for (auto& x : m) x = gen.uniform(-3, 3);
        Character c = character_from_value(s, s.eigenvalue_product(m));
        Character direct = character_from_exponents(s, m);
        CHECK(characters_equivalent(l, c, direct));
    }
}

TEST_CASE("classification is permutation invariant") {
    RandomGen gen(7);
    std::vector<std::vector<Rational>> cases = {
        {Rational(1, 2), Rational(1, 2), Rational(1, 2)},
        {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7)},
        {Rational(1, 2), Rational(1, 2), Rational(1, 3), Rational(1, 5)},
        {Rational(1, 2), Rational(1, 4), Rational(1, 3)},
    };
    for (auto mu : cases) {
        HopfClass::Tag expected = classify(Spectrum::exact(mu)).tag;
        for (int trial = 0; trial < 8; ++trial) {
            std::shuffle(mu.begin(), mu.end(), gen.rng);
            CHECK(classify(Spectrum::exact(mu)).tag == expected);
        }
    }
}

TEST_CASE("relation lattice commutes with coordinate permutation") {
    RandomGen gen(13);
    Spectrum base = exact_spectrum({{1, 2}, {1, 4}, {1, 8}, {1, 3}});
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> perm(4);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), gen.rng);
        std::vector<Rational> mu(4);
        for (int i = 0; i < 4; ++i) mu[i] = base.mu(perm[i]);
        RelationLattice lp = compute_relation_lattice(Spectrum::exact(mu));
        RelationLattice l = compute_relation_lattice(base);
        // permute the original basis and compare canonically
        IntMat permuted;
        for (const auto& row : l.basis) {
            IntVec v(4);
            for (int i = 0; i < 4; ++i) v[i] = row[perm[i]];
            permuted.push_back(v);
        }
        CHECK(hnf_rows(permuted) == lp.basis);
    }
}

TEST_CASE("random prime spectra are no-resonance") {
    RandomGen gen(17);
    const long long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
    for (int trial = 0; trial < 20; ++trial) {
        int n = gen.uniform(2, 6);
        std::vector<long long> picks(std::begin(primes), std::end(primes));
        std::shuffle(picks.begin(), picks.end(), gen.rng);
        std::vector<Rational> mu;
        for (int i = 0; i < n; ++i) mu.emplace_back(1, picks[i]);
        Spectrum s = Spectrum::exact(mu);
        CHECK(compute_relation_lattice(s).is_trivial());
        CHECK(classify(s).is(HopfClass::Tag::NoResonance));
    }
}
