#ifndef SHIODA_CORE_HPP
#define SHIODA_CORE_HPP

#include <vector>

#include "shioda/matrix.hpp"

namespace shioda {

// Square non-negative integer matrix with nonzero determinant; row i is the
// exponent vector of the i-th monomial of F_A.
struct ExponentMatrix {
    IntMatrix A;

    explicit ExponentMatrix(IntMatrix m);
    int n() const { return A.rows(); }
};

// All scalar/vector invariants derived from A.
struct ShiodaData {
    ExponentMatrix matrix;
    Int d;            // smallest positive integer with d*A^{-1} integral
    IntMatrix B;      // d * A^{-1}
    Vec q;            // weights, B*e (row sums of B)
    Int m;            // gcd of q
    Vec q_reduced;    // q / m
    Vec q_prime;      // column sums of B
    Int m_prime;      // gcd(d, q')
    Int a_prime;      // d / m'
    Vec a_prime_vec;  // q' / m'
    bool is_cy;       // sum(q) == d

    int n() const { return matrix.n(); }
};

struct MonomialTerm {
    Rat coefficient;
    Vec exponents;
    bool operator==(const MonomialTerm&) const = default;
};

struct MonomialPolynomial {
    int variables = 0;
    std::vector<MonomialTerm> terms;
    bool operator==(const MonomialPolynomial&) const = default;
};

// Derive d, B, q, q', m, m', a' and the CY flag; throws NonPositiveWeightError
// when any q_i or q'_k fails to be strictly positive.
ShiodaData analyze(const ExponentMatrix& A);

// True iff sum(q) == d, equivalently e^T A^{-1} e == 1.
bool check_cy(const ExponentMatrix& A);

// F_A: one monomial per row of A, all coefficients 1.
MonomialPolynomial build_F(const ExponentMatrix& A);

// F_{A,t} = F_A - t * x_1...x_n.
MonomialPolynomial build_F_t(const ExponentMatrix& A, const Rat& t);

// Rows from the given exponent vectors; inverse of build_F on exponent sets.
ExponentMatrix matrix_from_polynomial(const std::vector<Vec>& terms);

}  // namespace shioda

#endif
