#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shioda/wps.hpp"

using namespace shioda;

TEST_CASE("WeightSystem validation") {
    CHECK_THROWS_AS(WeightSystem({1, 0, 2}), Error);
    CHECK(WeightSystem({2, 3}).total() == 5);
}

TEST_CASE("reduce_gcd") {
    auto [m, r] = reduce_gcd(WeightSystem({6, 30, 30, 24, 60}));
    CHECK(m == 6);
    CHECK(r.weights == Vec{1, 5, 5, 4, 10});

    auto [m1, r1] = reduce_gcd(WeightSystem({1, 1, 1, 1, 1}));
    CHECK(m1 == 1);
    CHECK(r1.weights == Vec{1, 1, 1, 1, 1});

    auto [m2, r2] = reduce_gcd(WeightSystem({162, 81, 81, 81, 405}));
    CHECK(m2 == 81);
    CHECK(r2.weights == Vec{2, 1, 1, 1, 5});
}

TEST_CASE("well_form pinned cases") {
    CHECK(well_form(WeightSystem({1, 2, 2})).weights == Vec{1, 1, 1});
    CHECK(well_form(WeightSystem({2, 1, 1, 1, 5})).weights == Vec{2, 1, 1, 1, 5});

    // (2,4,6): step-by-step application of the reduction.
    // d = (gcd excluding i) = (2, 2, 2); a_i = lcm of the others = 2 each;
    // one pass gives (1,2,3), which is well-formed.
    CHECK(well_form(WeightSystem({2, 4, 6})).weights == Vec{1, 2, 3});
}

TEST_CASE("well_form output is well-formed and idempotent") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long> w(1, 60);
    std::uniform_int_distribution<int> dim(2, 6);
    for (int it = 0; it < 200; ++it) {
        int n = dim(rng);
        Vec q(n);
        for (int i = 0; i < n; ++i) q[i] = w(rng);
        WeightSystem wf = well_form(WeightSystem(q));
        CHECK(is_well_formed(wf));
        CHECK(well_form(wf) == wf);
        // reduce_gcd then well_form agrees with well_form alone
        auto [m, r] = reduce_gcd(WeightSystem(q));
        CHECK(well_form(r) == wf);
    }
}

TEST_CASE("singular_strata pinned cases") {
    auto s = singular_strata(WeightSystem({2, 1, 1, 1, 5}));
    REQUIRE(s.size() == 2);
    CHECK(s[0].prime == 2);
    CHECK(s[0].indices == std::vector<int>{0});
    CHECK(s[0].projective_dimension() == 0);
    CHECK(s[1].prime == 5);
    CHECK(s[1].indices == std::vector<int>{4});

    CHECK(singular_strata(WeightSystem({1, 1, 1, 1})).empty());

    auto s2 = singular_strata(WeightSystem({9, 6, 1, 1, 1}));
    REQUIRE(s2.size() == 2);
    CHECK(s2[0].prime == 2);
    CHECK(s2[0].indices == std::vector<int>{1});
    CHECK(s2[1].prime == 3);
    CHECK(s2[1].indices == std::vector<int>{0, 1});
    CHECK(s2[1].projective_dimension() == 1);
}

TEST_CASE("adding a prime factor to one weight adds exactly that stratum") {
    auto base = singular_strata(WeightSystem({1, 1, 1, 1}));
    CHECK(base.empty());
    auto s = singular_strata(WeightSystem({7, 1, 1, 1}));
    REQUIRE(s.size() == 1);
    CHECK(s[0].prime == 7);
    CHECK(s[0].indices == std::vector<int>{0});
}

TEST_CASE("fano_divisibility") {
    CHECK(!fano_divisibility(WeightSystem({1, 5, 5, 4, 10})));  // 4 does not divide 25
    CHECK(fano_divisibility(WeightSystem({1, 1, 1, 1, 1})));
    CHECK(fano_divisibility(WeightSystem({2, 1, 1, 1, 5})));    // Q = 10
}
