#ifndef SHIODA_MATRIX_HPP
#define SHIODA_MATRIX_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <vector>

#include "shioda/errors.hpp"

namespace shioda {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;

// Dense row-major integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);
    static IntMatrix diagonal(const Vec& d);
    static IntMatrix from_rows(const std::vector<Vec>& rows);
    static IntMatrix from_columns(const std::vector<Vec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Vec row(int i) const;
    Vec column(int j) const;
    Vec row_sums() const;
    Vec column_sums() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    Vec operator*(const Vec& v) const;
    bool operator==(const IntMatrix& other) const = default;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    // row i += m * row j
    void add_row_multiple(int i, int j, const Int& m);
    void add_col_multiple(int i, int j, const Int& m);
    void negate_row(int i);
    void negate_col(int j);

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

struct SNFDecomposition {
    IntMatrix U;  // unimodular, rows x rows
    IntMatrix S;  // diagonal, non-negative, divisibility chain, zeros trailing
    IntMatrix V;  // unimodular, cols x cols
    Vec diagonal() const;
    int rank() const;
};

struct DiophantineSolution {
    Vec particular;
    std::vector<Vec> kernel_basis;
};

// Exact determinant by Bareiss fraction-free elimination.
Int det_fraction_free(const IntMatrix& A);

// (d, B) with B = d * A^{-1} integral and d minimal positive.
std::pair<Int, IntMatrix> scaled_inverse(const IntMatrix& A);

// U * M * V = S with the SNFDecomposition invariants.
SNFDecomposition smith_normal_form(const IntMatrix& M);

// Integer solutions of M * x = b; nullopt when unsolvable over Z.
std::optional<DiophantineSolution> solve_diophantine(const IntMatrix& M, const Vec& b);

// Basis of the lattice spanned by the columns of G (one basis vector per column).
std::vector<Vec> column_lattice_basis(const IntMatrix& G);

// Inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& U);

Int vec_gcd(const Vec& v);
Int dot(const Vec& a, const Vec& b);

}  // namespace shioda

#endif
