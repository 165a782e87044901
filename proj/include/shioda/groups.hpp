#ifndef SHIODA_GROUPS_HPP
#define SHIODA_GROUPS_HPP

#include <vector>

#include "shioda/core.hpp"
#include "shioda/matrix.hpp"

namespace shioda {

// Exponent vector of a diagonal root-of-unity automorphism
// g_k : y_i -> zeta^{k_i} y_i with zeta a primitive d-th root of unity.
struct CyclotomicVector {
    Int d;
    Vec k;  // entries reduced to [0, d)

    CyclotomicVector(Int modulus, Vec entries);
    bool operator==(const CyclotomicVector&) const = default;
};

// Invariant-factor decomposition of a finite abelian group, factors in
// increasing divisibility order with factors of 1 omitted.
struct AbelianGroupStructure {
    std::vector<Int> invariant_factors;
    Int order;
    std::vector<CyclotomicVector> generator_lifts;  // one per invariant factor

    bool trivial() const { return invariant_factors.empty(); }
};

// Structure of span(numerator)/span(denominator); both lattices must have
// full rank and the denominator generators are adjoined to the numerator.
AbelianGroupStructure quotient_structure(const std::vector<Vec>& numerator_gens,
                                         const std::vector<Vec>& denominator_gens, const Int& modulus);

// Basis of L = { k : q'.k == 0 mod d } (kernel of the character q' mod d).
std::vector<Vec> character_kernel_lattice(const Vec& q_prime, const Int& d);

// Basis of L_A = { k : B k == 0 mod d }.
std::vector<Vec> shioda_kernel_lattice(const IntMatrix& B, const Int& d);

// Gamma_d = mu_d^n / <(1,...,1)>, isomorphic to mu_d^{n-1}.
AbelianGroupStructure gamma_d(int n, const Int& d);

// Gamma(q') = L / (d Z^n + Z e); requires the CY condition.
AbelianGroupStructure gamma_q_prime(const ShiodaData& data);

// Kernel of g_k -> g_{Bk}: (L_A + d Z^n + Z e) / (d Z^n + Z e).
AbelianGroupStructure gamma_A(const ShiodaData& data);

// Image of g_k -> g_{Bk}: L / (L_A + d Z^n + Z e); generator lifts are the
// image vectors B k mod d, acting on the coordinates of X_A.
AbelianGroupStructure h_A(const ShiodaData& data);

// True iff A w == c e mod d for some scalar c, i.e. g_w preserves Z(F_A).
bool is_automorphism_vector(const CyclotomicVector& w, const ExponentMatrix& A);

// Character by which g_k scales the residue form with exponent vector b:
// sum_i (b_i + 1) k_i mod d.
Int form_character(const CyclotomicVector& k, const Vec& b);

// b = q' - e, the exponent vector of the unique invariant (n-2)-form.
Vec invariant_form_exponents(const ShiodaData& data);

// Membership predicates for the defining congruences.
bool in_gamma_q_prime_lattice(const Vec& k, const ShiodaData& data);
bool in_gamma_A_lattice(const Vec& k, const ShiodaData& data);

}  // namespace shioda

#endif
