#include "shioda/maps.hpp"

#include <algorithm>
#include <numeric>

#include "shioda/groups.hpp"

namespace shioda {

std::string TParam::str() const {
    if (symbolic) return "t";
    Rat v = value;
    v.canonicalize();
    return v.get_str();
}

std::string Fingerprint::str() const {
    std::string s = "(" + a_prime.get_str() + "; {";
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (i) s += ",";
        s += exponents[i].get_str();
    }
    return s + "})";
}

MonomialMap phi_map(const ShiodaData& data) {
    return MonomialMap{Vec(data.n(), 1), data.q, data.B};
}

MonomialMap q_map(const ExponentMatrix& A) {
    ShiodaData data = analyze(A);
    const int n = A.n();
    IntMatrix E(n + 1, n);
    for (int j = 0; j < n; ++j) E(0, j) = 1;
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) E(k + 1, j) = A.A(k, j);
    return MonomialMap{data.q, Vec(n + 1, data.d), E};
}

MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner) {
    if (outer.source_dim() != inner.target_dim())
        throw DimensionMismatchError("compose: outer source dimension != inner target dimension");
    MonomialMap m;
    m.source_weights = inner.source_weights;
    m.exponents = outer.exponents * inner.exponents;
    m.target_degrees = m.exponents * m.source_weights;
    return m;
}

std::pair<EquationSet, EquationSet> mbar_equations(const ShiodaData& data) {
    if (!data.is_cy) throw NotCalabiYauError();
    EquationSet unreduced{TParam::exact(Rat(0)), data.d, data.q_prime};
    EquationSet reduced{TParam::exact(Rat(0)), data.a_prime, data.a_prime_vec};
    return {unreduced, reduced};
}

FamilyEquations family_equations(const ShiodaData& data, const TParam& t) {
    if (!data.is_cy) throw NotCalabiYauError();
    FamilyEquations f;
    f.with_u0 = EquationSet{t, data.d, data.q_prime};
    f.eliminated_degree = data.d;
    f.eliminated_exponents = data.q_prime;
    f.t = t;
    return f;
}

bool root_identity_check(const ShiodaData& data) {
    const int n = data.n();
    for (int j = 0; j < n; ++j) {
        // x-exponents of prod_k u_k^{B_jk} with u_k = x^{row k of A}.
        Vec acc(n, 0);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) acc[l] += data.B(j, k) * data.matrix.A(k, l);
        for (int l = 0; l < n; ++l)
            if (acc[l] != (l == j ? data.d : Int(0))) return false;
    }
    return true;
}

InverseCheck verify_inverse(const ExponentMatrix& A, const InverseMap& inv) {
    const int n = A.n();
    if (static_cast<int>(inv.slack_exponents.size()) != n ||
        static_cast<int>(inv.lines.size()) != n)
        throw DimensionMismatchError("verify_inverse: inverse map dimensions do not match A");
    ShiodaData data = analyze(A);
    InverseCheck check{true, {}};
    for (int j = 0; j < n; ++j) {
        const InverseLine& line = inv.lines[j];
        if (static_cast<int>(line.c.size()) != n)
            throw DimensionMismatchError("verify_inverse: line exponent count");
        InverseLineCheck lc;
        lc.lhs = Vec(n, 0);
        for (int l = 0; l < n; ++l) lc.lhs[l] = line.s * inv.slack_exponents[l];
        lc.lhs[j] += 1;
        lc.rhs = Vec(n, Int(line.c0));
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) lc.rhs[l] += line.c[k] * A.A(k, l);
        lc.ok = lc.lhs == lc.rhs;
        // Residual against the relation u_0^d = prod u^{q'}: shift c0 into [0, d).
        Int lambda;
        mpz_fdiv_q(lambda.get_mpz_t(), line.c0.get_mpz_t(), data.d.get_mpz_t());
        lc.c0_normalized = line.c0 - lambda * data.d;
        lc.c_normalized = line.c;
        for (int k = 0; k < n; ++k) lc.c_normalized[k] += lambda * data.q_prime[k];
        check.ok = check.ok && lc.ok;
        check.lines.push_back(std::move(lc));
    }
    return check;
}

namespace {

// x == a (mod m) intersected with x == b (mod k); nullopt when incompatible.
std::optional<std::pair<Int, Int>> merge_progressions(const Int& a, const Int& m, const Int& b, const Int& k) {
    Int g, p, q;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t(), k.get_mpz_t());
    Int diff = b - a;
    if (diff % g != 0) return std::nullopt;
    Int lcm = m / g * k;
    Int x = a + m * (p * (diff / g));
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), lcm.get_mpz_t());
    return std::make_pair(x, lcm);
}

// Candidate slack vectors: small positive boxes ordered by total degree,
// plus the reduced weight vectors.
std::vector<Vec> slack_candidates(const ShiodaData& data) {
    const int n = data.n();
    std::vector<Vec> out;
    const long hi = n <= 5 ? 4 : 3;
    Vec mu(n, 1);
    for (;;) {
        out.push_back(mu);
        int i = 0;
        while (i < n && mu[i] == hi) mu[i++] = 1;
        if (i == n) break;
        mu[i] += 1;
    }
    out.push_back(data.q_reduced);
    out.push_back(data.q);
    std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) {
        Int sa = std::accumulate(a.begin(), a.end(), Int(0));
        Int sb = std::accumulate(b.begin(), b.end(), Int(0));
        if (sa != sb) return sa < sb;
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::optional<InverseMap> construct_inverse(const ShiodaData& data) {
    if (!data.is_cy) throw NotCalabiYauError();
    if (!h_A(data).trivial()) return std::nullopt;

    const int n = data.n();
    const Int& d = data.d;
    const IntMatrix Bt = data.B.transpose();

    for (const Vec& mu : slack_candidates(data)) {
        Vec v = Bt * mu;  // x^{d mu} = prod_k u_k^{v_k}

        // The exponent identity for line j with s_j = sigma * q_j holds iff
        // B_j + sigma q_j v - c0 q' == 0 (mod d); collect the feasible sigma
        // per line as an arithmetic progression, then intersect.
        Int alpha = 0, beta = 1;
        bool feasible = true;
        for (int j = 0; j < n && feasible; ++j) {
            IntMatrix M(n, n + 2);
            for (int i = 0; i < n; ++i) {
                M(i, 0) = data.q[j] * v[i];
                M(i, 1) = -data.q_prime[i];
                M(i, 2 + i) = d;
            }
            Vec rhs(n);
            for (int i = 0; i < n; ++i) rhs[i] = -data.B(j, i);
            auto sol = solve_diophantine(M, rhs);
            if (!sol) { feasible = false; break; }
            Int step = 0;
            for (const Vec& kv : sol->kernel_basis)
                mpz_gcd(step.get_mpz_t(), step.get_mpz_t(), kv[0].get_mpz_t());
            if (step == 0) step = d;  // sigma -> sigma + d is always compensable
            auto merged = merge_progressions(alpha, beta, sol->particular[0], step);
            if (!merged) { feasible = false; break; }
            alpha = merged->first;
            beta = merged->second;
        }
        if (!feasible) continue;
        Int sigma;
        mpz_fdiv_r(sigma.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());

        InverseMap inv;
        inv.slack_exponents = mu;
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            Int s = sigma * data.q[j];
            // c0 from c0 q' == B_j + s v (mod d).
            IntMatrix M(n, n + 1);
            for (int i = 0; i < n; ++i) {
                M(i, 0) = data.q_prime[i];
                M(i, 1 + i) = d;
            }
            Vec rhs(n);
            for (int i = 0; i < n; ++i) rhs[i] = data.B(j, i) + s * v[i];
            auto sol = solve_diophantine(M, rhs);
            if (!sol) { ok = false; break; }
            Int c0;
            mpz_fdiv_r(c0.get_mpz_t(), sol->particular[0].get_mpz_t(), d.get_mpz_t());
            Vec c(n);
            for (int i = 0; i < n; ++i) {
                Int num = data.B(j, i) + s * v[i] - c0 * data.q_prime[i];
                if (num % d != 0) { ok = false; break; }
                c[i] = num / d;
            }
            if (!ok) break;
            inv.lines.push_back({s, c0, std::move(c)});
        }
        if (!ok) continue;
        if (!verify_inverse(data.matrix, inv).ok)
            throw InternalError("construct_inverse: candidate failed verification");
        return inv;
    }
    return std::nullopt;
}

FamilyEquations mirror_transpose(const ExponentMatrix& A) {
    ShiodaData dataT = analyze(ExponentMatrix(A.A.transpose()));
    return family_equations(dataT, TParam::exact(Rat(1)));
}

Fingerprint fingerprint(const ShiodaData& data) {
    if (!data.is_cy) throw NotCalabiYauError();
    Fingerprint fp{data.a_prime, data.a_prime_vec};
    std::sort(fp.exponents.begin(), fp.exponents.end());
    return fp;
}

bool left_eigenvector_certificate(const ShiodaData& data) {
    const int n = data.n();
    Int g = vec_gcd(data.a_prime_vec);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), data.a_prime.get_mpz_t());
    if (g != 1) return false;
    for (const Int& c : data.a_prime_vec)
        if (c <= 0) return false;
    // a'_vec * A must equal a' * e^T, by direct multiplication.
    for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (int i = 0; i < n; ++i) s += data.a_prime_vec[i] * data.matrix.A(i, j);
        if (s != data.a_prime) return false;
    }
    return true;
}

}  // namespace shioda
