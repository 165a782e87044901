#include "shioda/core.hpp"

#include <numeric>
#include <string>

namespace shioda {

ExponentMatrix::ExponentMatrix(IntMatrix m) : A(std::move(m)) {
    if (!A.is_square()) throw NonSquareError("exponent matrix must be square");
    if (A.rows() < 1) throw DimensionMismatchError("exponent matrix must be at least 1x1");
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (A(i, j) < 0)
                throw NegativeEntryError("exponent matrix entry (" + std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) + ") is negative");
    if (det_fraction_free(A) == 0) throw SingularError("exponent matrix is singular");
}

ShiodaData analyze(const ExponentMatrix& A) {
    auto [d, B] = scaled_inverse(A.A);
    if (d < 0) throw InternalError("analyze: negative scale");
    Vec q = B.row_sums();
    Vec qp = B.column_sums();
    for (int i = 0; i < A.n(); ++i)
        if (q[i] <= 0) throw NonPositiveWeightError("q", i);
    for (int k = 0; k < A.n(); ++k)
        if (qp[k] <= 0) throw NonPositiveWeightError("q'", k);

    Int m = vec_gcd(q);
    Vec q_red(q.size());
    for (size_t i = 0; i < q.size(); ++i) q_red[i] = q[i] / m;

    Int mp = d;
    for (const Int& x : qp) mpz_gcd(mp.get_mpz_t(), mp.get_mpz_t(), x.get_mpz_t());
    Vec ap_vec(qp.size());
    for (size_t i = 0; i < qp.size(); ++i) ap_vec[i] = qp[i] / mp;

    Int qsum = std::accumulate(q.begin(), q.end(), Int(0));

    ShiodaData data{A, d, B, std::move(q), m, std::move(q_red), std::move(qp), mp, Int(d / mp),
                    std::move(ap_vec), qsum == d};

    // A*q = d*e must hold exactly.
    Vec Aq = A.A * data.q;
    for (const Int& x : Aq)
        if (x != d) throw InternalError("analyze: A*q != d*e");
    return data;
}

bool check_cy(const ExponentMatrix& A) {
    auto [d, B] = scaled_inverse(A.A);
    Vec q = B.row_sums();
    Int qsum = std::accumulate(q.begin(), q.end(), Int(0));
    return qsum == d;
}

MonomialPolynomial build_F(const ExponentMatrix& A) {
    MonomialPolynomial f;
    f.variables = A.n();
    for (int i = 0; i < A.n(); ++i) f.terms.push_back({Rat(1), A.A.row(i)});
    return f;
}

MonomialPolynomial build_F_t(const ExponentMatrix& A, const Rat& t) {
    MonomialPolynomial f = build_F(A);
    if (t != 0) f.terms.push_back({Rat(-t), Vec(A.n(), 1)});
    return f;
}

ExponentMatrix matrix_from_polynomial(const std::vector<Vec>& terms) {
    if (terms.empty()) throw WrongCountError("no exponent vectors given");
    const size_t n = terms[0].size();
    if (terms.size() != n)
        throw WrongCountError("need exactly " + std::to_string(n) + " exponent vectors of length " +
                              std::to_string(n) + ", got " + std::to_string(terms.size()));
    return ExponentMatrix(IntMatrix::from_rows(terms));
}

}  // namespace shioda
