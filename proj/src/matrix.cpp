#include "shioda/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace shioda {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw DimensionMismatchError("ragged initializer");
        for (long x : r) a_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const Vec& d) {
    IntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols()) throw DimensionMismatchError("ragged row list");
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return IntMatrix();
    IntMatrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (static_cast<int>(cols[j].size()) != m.rows()) throw DimensionMismatchError("ragged column list");
        for (int i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec IntMatrix::row(int i) const {
    Vec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

Vec IntMatrix::column(int j) const {
    Vec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

Vec IntMatrix::row_sums() const {
    Vec s(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) s[i] += (*this)(i, j);
    return s;
}

Vec IntMatrix::column_sums() const {
    Vec s(cols_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) s[j] += (*this)(i, j);
    return s;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatchError("matrix product");
    IntMatrix p(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j) p(i, j) += aik * other(k, j);
        }
    return p;
}

Vec IntMatrix::operator*(const Vec& v) const {
    if (cols_ != static_cast<int>(v.size())) throw DimensionMismatchError("matrix-vector product");
    Vec r(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row_multiple(int i, int j, const Int& m) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) += m * (*this)(j, k);
}

void IntMatrix::add_col_multiple(int i, int j, const Int& m) {
    for (int k = 0; k < rows_; ++k) (*this)(k, i) += m * (*this)(k, j);
}

void IntMatrix::negate_row(int i) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_col(int j) {
    for (int k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

Vec SNFDecomposition::diagonal() const {
    int n = std::min(S.rows(), S.cols());
    Vec d(n);
    for (int i = 0; i < n; ++i) d[i] = S(i, i);
    return d;
}

int SNFDecomposition::rank() const {
    int r = 0;
    for (const Int& s : diagonal())
        if (s != 0) ++r;
    return r;
}

Int det_fraction_free(const IntMatrix& A) {
    if (!A.is_square()) throw NonSquareError();
    const int n = A.rows();
    IntMatrix M = A;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (M(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            M.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = M(i, j) * M(k, k) - M(i, k) * M(k, j);
                mpz_divexact(M(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M(i, k) = 0;
        }
        prev = M(k, k);
    }
    return sign > 0 ? M(n - 1, n - 1) : Int(-M(n - 1, n - 1));
}

std::pair<Int, IntMatrix> scaled_inverse(const IntMatrix& A) {
    if (!A.is_square()) throw NonSquareError();
    const int n = A.rows();
    // Gauss-Jordan over Q on [A | I].
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rat(A(i, j));
        m[i][n + i] = 1;
    }
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (m[i][k] != 0) { p = i; break; }
        if (p < 0) throw SingularError();
        std::swap(m[k], m[p]);
        Rat piv = m[k][k];
        for (int j = k; j < 2 * n; ++j) m[k][j] /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) continue;
            Rat f = m[i][k];
            for (int j = k; j < 2 * n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    Int d = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat& e = m[i][n + j];
            e.canonicalize();
            mpz_class den = e.get_den();
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
        }
    IntMatrix B(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat e = m[i][n + j] * d;
            e.canonicalize();
            if (e.get_den() != 1) throw InternalError("scaled_inverse: non-integral entry after clearing denominators");
            B(i, j) = e.get_num();
        }
    return {d, B};
}

namespace {

// Location of the nonzero entry of smallest absolute value in M[t.., t..],
// scanning row-major so the choice is deterministic.
bool find_pivot(const IntMatrix& M, int t, int& pi, int& pj) {
    bool found = false;
    Int best;
    for (int i = t; i < M.rows(); ++i)
        for (int j = t; j < M.cols(); ++j) {
            if (M(i, j) == 0) continue;
            Int a = abs(M(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SNFDecomposition smith_normal_form(const IntMatrix& M) {
    const int m = M.rows(), n = M.cols();
    SNFDecomposition r{IntMatrix::identity(m), M, IntMatrix::identity(n)};
    IntMatrix& S = r.S;
    IntMatrix& U = r.U;
    IntMatrix& V = r.V;
    const int rmax = std::min(m, n);
    for (int t = 0; t < rmax; ++t) {
        for (;;) {
            int pi, pj;
            if (!find_pivot(S, t, pi, pj)) {
                // Zero submatrix: the remaining diagonal stays zero.
                t = rmax;
                break;
            }
            if (pi != t) { S.swap_rows(t, pi); U.swap_rows(t, pi); }
            if (pj != t) { S.swap_cols(t, pj); V.swap_cols(t, pj); }
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (S(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
                S.add_row_multiple(i, t, -q);
                U.add_row_multiple(i, t, -q);
                if (S(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (S(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
                S.add_col_multiple(j, t, -q);
                V.add_col_multiple(j, t, -q);
                if (S(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: s_t must divide every remaining entry.
            bool redo = false;
            for (int i = t + 1; i < m && !redo; ++i)
                for (int j = t + 1; j < n && !redo; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        S.add_row_multiple(t, i, 1);
                        U.add_row_multiple(t, i, 1);
                        redo = true;
                    }
            if (!redo) break;
        }
        if (t >= rmax) break;
        if (S(t, t) < 0) { S.negate_row(t); U.negate_row(t); }
    }
    return r;
}

std::optional<DiophantineSolution> solve_diophantine(const IntMatrix& M, const Vec& b) {
    if (static_cast<int>(b.size()) != M.rows()) throw DimensionMismatchError("solve_diophantine rhs");
    SNFDecomposition snf = smith_normal_form(M);
    Vec c = snf.U * b;
    const int n = M.cols();
    const int rmax = std::min(M.rows(), n);
    Vec y(n, 0);
    for (int i = 0; i < M.rows(); ++i) {
        const Int s = i < rmax ? snf.S(i, i) : Int(0);
        if (s == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % s != 0) return std::nullopt;
            y[i] = c[i] / s;
        }
    }
    DiophantineSolution sol;
    sol.particular = snf.V * y;
    int rank = snf.rank();
    for (int j = rank; j < n; ++j) sol.kernel_basis.push_back(snf.V.column(j));
    return sol;
}

std::vector<Vec> column_lattice_basis(const IntMatrix& G) {
    SNFDecomposition snf = smith_normal_form(G);
    IntMatrix Uinv = unimodular_inverse(snf.U);
    std::vector<Vec> basis;
    const int rmax = std::min(G.rows(), G.cols());
    for (int i = 0; i < rmax; ++i) {
        if (snf.S(i, i) == 0) continue;
        Vec v = Uinv.column(i);
        for (Int& x : v) x *= snf.S(i, i);
        basis.push_back(std::move(v));
    }
    return basis;
}

IntMatrix unimodular_inverse(const IntMatrix& U) {
    auto [d, B] = scaled_inverse(U);
    if (d != 1) throw InternalError("unimodular_inverse: matrix is not unimodular");
    return B;
}

Int vec_gcd(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw LengthMismatchError();
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace shioda
