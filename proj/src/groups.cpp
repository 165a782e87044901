#include "shioda/groups.hpp"

#include <string>

namespace shioda {

namespace {

Int mod_floor(const Int& a, const Int& d) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

void require_cy(const ShiodaData& data) {
    if (!data.is_cy) throw NotCalabiYauError();
}

// d Z^n together with e: the relations defining Gamma_d cosets.
std::vector<Vec> scaling_relations(int n, const Int& d) {
    std::vector<Vec> gens;
    for (int i = 0; i < n; ++i) {
        Vec v(n, 0);
        v[i] = d;
        gens.push_back(std::move(v));
    }
    gens.emplace_back(n, 1);
    return gens;
}

std::vector<Vec> concat(std::vector<Vec> a, const std::vector<Vec>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

CyclotomicVector::CyclotomicVector(Int modulus, Vec entries) : d(std::move(modulus)), k(std::move(entries)) {
    if (d < 1) throw ModulusMismatchError("modulus must be positive");
    for (Int& x : k) x = mod_floor(x, d);
}

AbelianGroupStructure quotient_structure(const std::vector<Vec>& numerator_gens,
                                         const std::vector<Vec>& denominator_gens, const Int& modulus) {
    if (denominator_gens.empty()) throw DimensionMismatchError("empty denominator");
    const int n = static_cast<int>(denominator_gens[0].size());

    std::vector<Vec> basis = column_lattice_basis(IntMatrix::from_columns(concat(numerator_gens, denominator_gens)));
    if (static_cast<int>(basis.size()) != n)
        throw InternalError("quotient_structure: numerator lattice is not full rank");
    IntMatrix N = IntMatrix::from_columns(basis);

    // Coordinates of the denominator generators in the numerator basis.
    std::vector<Vec> coords;
    for (const Vec& g : denominator_gens) {
        auto sol = solve_diophantine(N, g);
        if (!sol) throw InternalError("quotient_structure: denominator not contained in numerator");
        coords.push_back(sol->particular);
    }
    SNFDecomposition snf = smith_normal_form(IntMatrix::from_columns(coords));

    AbelianGroupStructure g;
    g.order = 1;
    IntMatrix W = N * unimodular_inverse(snf.U);
    for (int i = 0; i < n; ++i) {
        const Int& s = snf.S(i, i);
        if (s == 0) throw InternalError("quotient_structure: infinite quotient");
        g.order *= s;
        if (s > 1) {
            g.invariant_factors.push_back(s);
            g.generator_lifts.emplace_back(modulus, W.column(i));
        }
    }
    return g;
}

std::vector<Vec> character_kernel_lattice(const Vec& q_prime, const Int& d) {
    const int n = static_cast<int>(q_prime.size());
    IntMatrix M(1, n + 1);
    for (int j = 0; j < n; ++j) M(0, j) = q_prime[j];
    M(0, n) = d;
    auto sol = solve_diophantine(M, Vec{0});
    std::vector<Vec> basis;
    for (const Vec& v : sol->kernel_basis) basis.emplace_back(v.begin(), v.begin() + n);
    // Projection away from the auxiliary coordinate is injective on the kernel.
    if (static_cast<int>(basis.size()) != n) throw InternalError("character_kernel_lattice: wrong rank");
    return basis;
}

std::vector<Vec> shioda_kernel_lattice(const IntMatrix& B, const Int& d) {
    const int n = B.rows();
    IntMatrix M(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M(i, j) = B(i, j);
        M(i, n + i) = d;
    }
    auto sol = solve_diophantine(M, Vec(n, 0));
    std::vector<Vec> basis;
    for (const Vec& v : sol->kernel_basis) basis.emplace_back(v.begin(), v.begin() + n);
    if (static_cast<int>(basis.size()) != n) throw InternalError("shioda_kernel_lattice: wrong rank");
    return basis;
}

AbelianGroupStructure gamma_d(int n, const Int& d) {
    if (n < 2) throw DimensionMismatchError("gamma_d needs n >= 2");
    if (d < 1) throw ModulusMismatchError("gamma_d needs d >= 1");
    std::vector<Vec> num;
    for (int i = 0; i < n; ++i) {
        Vec v(n, 0);
        v[i] = 1;
        num.push_back(std::move(v));
    }
    return quotient_structure(num, scaling_relations(n, d), d);
}

AbelianGroupStructure gamma_q_prime(const ShiodaData& data) {
    require_cy(data);
    return quotient_structure(character_kernel_lattice(data.q_prime, data.d),
                              scaling_relations(data.n(), data.d), data.d);
}

AbelianGroupStructure gamma_A(const ShiodaData& data) {
    require_cy(data);
    return quotient_structure(shioda_kernel_lattice(data.B, data.d), scaling_relations(data.n(), data.d),
                              data.d);
}

AbelianGroupStructure h_A(const ShiodaData& data) {
    require_cy(data);
    std::vector<Vec> den = concat(shioda_kernel_lattice(data.B, data.d), scaling_relations(data.n(), data.d));
    AbelianGroupStructure g =
        quotient_structure(character_kernel_lattice(data.q_prime, data.d), den, data.d);
    // Lifts act on X_A through B: report B k mod d.
    for (CyclotomicVector& lift : g.generator_lifts) lift = CyclotomicVector(data.d, data.B * lift.k);
    return g;
}

bool is_automorphism_vector(const CyclotomicVector& w, const ExponentMatrix& A) {
    auto [d, B] = scaled_inverse(A.A);
    if (w.d != d) throw ModulusMismatchError("automorphism vector modulus " + w.d.get_str() +
                                             " does not match d = " + d.get_str());
    Vec Aw = A.A * w.k;
    Int c = mod_floor(Aw[0], d);
    for (const Int& x : Aw)
        if (mod_floor(x, d) != c) return false;
    return true;
}

Int form_character(const CyclotomicVector& k, const Vec& b) {
    if (b.size() != k.k.size()) throw LengthMismatchError("form_character: vector lengths differ");
    Int s = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 0) throw NegativeExponentError("form_character: b must be non-negative");
        s += (b[i] + 1) * k.k[i];
    }
    return mod_floor(s, k.d);
}

Vec invariant_form_exponents(const ShiodaData& data) {
    require_cy(data);
    Vec b(data.q_prime.size());
    Int sum = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        b[i] = data.q_prime[i] - 1;
        if (b[i] < 0) throw NegativeExponentError("invariant form: q'[" + std::to_string(i + 1) + "] < 1");
        sum += b[i];
    }
    if (sum != data.d - data.n()) throw InternalError("invariant form: degree mismatch");
    return b;
}

bool in_gamma_q_prime_lattice(const Vec& k, const ShiodaData& data) {
    return mod_floor(dot(data.q_prime, k), data.d) == 0;
}

bool in_gamma_A_lattice(const Vec& k, const ShiodaData& data) {
    if (!in_gamma_q_prime_lattice(k, data)) return false;
    // k represents an element of Gamma_A iff some representative k - c e of
    // its coset lies in L_A, i.e. B k = c q mod d (B e = q).
    const int n = data.n();
    IntMatrix M(n, n + 1);
    for (int i = 0; i < n; ++i) {
        M(i, 0) = data.q[i];
        M(i, 1 + i) = data.d;
    }
    return solve_diophantine(M, data.B * k).has_value();
}

}  // namespace shioda
