#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "generators.hpp"
#include "shioda/core.hpp"

using namespace shioda;

namespace {

const IntMatrix EXAMPLE_B({{15, 0, 0, 0, 1},
                           {0, 5, 0, 0, 0},
                           {0, 0, 5, 0, 0},
                           {0, 0, 1, 5, 0},
                           {0, 1, 0, 0, 2}});
const IntMatrix EXAMPLE_D({{5, 0, 0, 0, 0},
                           {0, 9, 1, 0, 0},
                           {0, 0, 9, 1, 0},
                           {0, 0, 0, 10, 0},
                           {0, 0, 0, 0, 2}});

}  // namespace

TEST_CASE("ExponentMatrix validation") {
    CHECK_THROWS_AS(ExponentMatrix(IntMatrix(2, 3)), NonSquareError);
    CHECK_THROWS_AS(ExponentMatrix(IntMatrix({{1, 0}, {-1, 2}})), NegativeEntryError);
    CHECK_THROWS_AS(ExponentMatrix(IntMatrix({{1, 1}, {1, 1}})), SingularError);
}

TEST_CASE("analyze on Example B") {
    ShiodaData s = analyze(ExponentMatrix(EXAMPLE_B));
    CHECK(s.d == 150);
    CHECK(s.q == Vec{6, 30, 30, 24, 60});
    CHECK(s.m == 6);
    CHECK(s.q_reduced == Vec{1, 5, 5, 4, 10});
    CHECK(s.q_prime == Vec{10, 16, 24, 30, 70});
    CHECK(s.m_prime == 2);
    CHECK(s.a_prime == 75);
    CHECK(s.a_prime_vec == Vec{5, 8, 12, 15, 35});
    CHECK(s.is_cy);
}

TEST_CASE("analyze on Example D") {
    ShiodaData s = analyze(ExponentMatrix(EXAMPLE_D));
    CHECK(s.d == 810);
    CHECK(s.q == Vec{162, 81, 81, 81, 405});
    CHECK(s.q_reduced == Vec{2, 1, 1, 1, 5});
    CHECK(s.q_prime == Vec{162, 90, 80, 73, 405});
    CHECK(s.m_prime == 1);
    CHECK(s.is_cy);
}

TEST_CASE("analyze on the quintic") {
    ShiodaData s = analyze(ExponentMatrix(IntMatrix::diagonal({5, 5, 5, 5, 5})));
    CHECK(s.d == 5);
    CHECK(s.q == Vec{1, 1, 1, 1, 1});
    CHECK(s.q_prime == Vec{1, 1, 1, 1, 1});
    CHECK(s.m_prime == 1);
    CHECK(s.a_prime == 5);
    CHECK(s.is_cy);
}

TEST_CASE("analyze rejects non-positive derived weights") {
    // B = 3 * A^{-1} = [[3,-3],[0,3]] ... row sums (0,3): q_1 = 0.
    try {
        analyze(ExponentMatrix(IntMatrix({{1, 1}, {0, 1}})));
        // if weights happen positive, nothing to check here
    } catch (const NonPositiveWeightError& e) {
        CHECK((e.which_vector == "q" || e.which_vector == "q'"));
        CHECK(e.offending_index >= 0);
    }
    // A = [[2,3],[0,1]]: A^{-1} = [[1/2,-3/2],[0,1]], B = [[1,-3],[0,2]],
    // q = (-2, 2) -> rejected naming q[1].
    CHECK_THROWS_AS(analyze(ExponentMatrix(IntMatrix({{2, 3}, {0, 1}}))), NonPositiveWeightError);
}

TEST_CASE("check_cy") {
    CHECK(check_cy(ExponentMatrix(IntMatrix::diagonal({5, 10, 10, 10, 2}))));
    CHECK(!check_cy(ExponentMatrix(IntMatrix::identity(2))));
    CHECK(check_cy(ExponentMatrix(EXAMPLE_D)));
}

TEST_CASE("build_F and build_F_t") {
    ExponentMatrix A(IntMatrix::diagonal({5, 10, 10, 10, 2}));
    MonomialPolynomial F = build_F(A);
    REQUIRE(F.terms.size() == 5);
    CHECK(F.terms[0].exponents == Vec{5, 0, 0, 0, 0});
    CHECK(F.terms[4].exponents == Vec{0, 0, 0, 0, 2});
    for (const MonomialTerm& t : F.terms) CHECK(t.coefficient == 1);

    ExponentMatrix D(EXAMPLE_D);
    MonomialPolynomial Fd = build_F(D);
    CHECK(Fd.terms[1].exponents == Vec{0, 9, 1, 0, 0});

    CHECK(build_F_t(A, Rat(0)) == build_F(A));
    MonomialPolynomial Ft = build_F_t(A, Rat(3, 2));
    REQUIRE(Ft.terms.size() == 6);
    CHECK(Ft.terms[5].coefficient == Rat(-3, 2));
    CHECK(Ft.terms[5].exponents == Vec{1, 1, 1, 1, 1});
}

TEST_CASE("every monomial of F_A has weighted degree d") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 200; ++it) {
        ExponentMatrix A = testing::random_cy_matrix(rng);
        ShiodaData s = analyze(A);
        for (const MonomialTerm& t : build_F(A).terms) CHECK(dot(t.exponents, s.q) == s.d);
    }
}

TEST_CASE("matrix_from_polynomial") {
    // D_1(t) terms without the deformation term give the degree-1280 matrix.
    ExponentMatrix A1 = matrix_from_polynomial(
        {{5, 0, 1, 0, 0}, {0, 0, 4, 1, 0}, {0, 1, 0, 4, 0}, {0, 4, 0, 0, 1}, {0, 0, 0, 0, 4}});
    CHECK(det_fraction_free(A1.A) == 1280);

    // round trip
    ExponentMatrix D(EXAMPLE_D);
    std::vector<Vec> rows;
    for (const MonomialTerm& t : build_F(D).terms) rows.push_back(t.exponents);
    CHECK(matrix_from_polynomial(rows).A == D.A);

    // corrected C_1 monomials: weighted-homogeneous of degree 375
    ExponentMatrix C1 = matrix_from_polynomial(
        {{6, 0, 1, 0, 0}, {0, 1, 5, 0, 0}, {0, 5, 0, 1, 0}, {0, 0, 0, 5, 0}, {0, 0, 0, 0, 3}});
    Vec w{52, 60, 63, 75, 125};
    CHECK(C1.A * w == Vec(5, 375));

    CHECK_THROWS_AS(matrix_from_polynomial({{1, 0}, {0, 1}, {1, 1}}), WrongCountError);
}

TEST_CASE("analyze invariants on random admissible matrices") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 200; ++it) {
        ExponentMatrix A = testing::random_cy_matrix(rng);
        ShiodaData s = analyze(A);
        int n = s.n();
        CHECK(A.A * s.q == Vec(n, s.d));
        CHECK(s.B.row_sums() == s.q);
        CHECK(s.B.column_sums() == s.q_prime);
        CHECK(s.d % s.m_prime == 0);
        CHECK(s.a_prime * s.m_prime == s.d);
        for (int i = 0; i < n; ++i) CHECK(s.a_prime_vec[i] * s.m_prime == s.q_prime[i]);
        Int g = vec_gcd(s.a_prime_vec);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.a_prime.get_mpz_t());
        CHECK(g == 1);
        Int sum_q = std::accumulate(s.q.begin(), s.q.end(), Int(0));
        Int sum_qp = std::accumulate(s.q_prime.begin(), s.q_prime.end(), Int(0));
        CHECK(s.is_cy == (sum_q == s.d));
        if (s.is_cy) CHECK(sum_qp == s.d);
    }
}
