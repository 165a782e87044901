#ifndef SHIODA_MAPS_HPP
#define SHIODA_MAPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "shioda/core.hpp"
#include "shioda/matrix.hpp"
#include "shioda/wps.hpp"

namespace shioda {

// Deformation parameter: an exact rational or the formal symbol t.
struct TParam {
    bool symbolic = true;
    Rat value;  // meaningful only when !symbolic

    static TParam symbol() { return TParam{true, Rat(0)}; }
    static TParam exact(Rat v) { return TParam{false, std::move(v)}; }
    bool is_zero() const { return !symbolic && value == 0; }
    std::string str() const;
    bool operator==(const TParam&) const = default;
};

// Rational monomial map between (weighted) projective spaces as an integer
// exponent table: entry (j,k) is the exponent of source variable k in target
// coordinate j.  Negative entries mark non-regular loci.
struct MonomialMap {
    Vec source_weights;
    Vec target_degrees;  // weighted degree of each target coordinate
    IntMatrix exponents;

    int source_dim() const { return static_cast<int>(source_weights.size()); }
    int target_dim() const { return exponents.rows(); }
    bool operator==(const MonomialMap&) const = default;
};

// One linear and one monomial relation cutting out the (family of) Shioda
// quotient(s): sum_i u_i - t u_0 = 0 and u_0^power = prod_i u_i^{exponents_i}.
struct EquationSet {
    TParam t = TParam::exact(Rat(0));  // t = 0: the undeformed quotient
    Int power;                         // exponent of u_0
    Vec exponents;                     // over u_1..u_n
    bool operator==(const EquationSet&) const = default;
};

// The two forms of the family: with u_0, and with u_0 eliminated
// ((sum u)^d = t^d prod u^{q'}), valid for t != 0.
struct FamilyEquations {
    EquationSet with_u0;
    Int eliminated_degree;
    Vec eliminated_exponents;
    TParam t;
};

struct InverseLine {
    Int s;   // power of the slack monomial M
    Int c0;  // power of u_0
    Vec c;   // powers of u_1..u_n, may be negative
    bool operator==(const InverseLine&) const = default;
};

// Explicit monomial birational inverse of q_A:
// M^{s_j} x_j = u_0^{c0_j} prod_k u_k^{c_jk}, with M = x^mu.
struct InverseMap {
    Vec slack_exponents;  // mu, all entries > 0
    std::vector<InverseLine> lines;
};

struct InverseLineCheck {
    bool ok;
    Vec lhs;  // x-exponents of M^{s_j} x_j
    Vec rhs;  // x-exponents of u_0^{c0} prod u^c after substitution
    Int c0_normalized;  // c0 reduced mod d by the relation u_0^d = prod u^{q'}
    Vec c_normalized;
};

struct InverseCheck {
    bool ok;
    std::vector<InverseLineCheck> lines;
};

// (a', sorted a'_vec): equal fingerprints give identical reduced family
// equations up to permutation of the u_i.
struct Fingerprint {
    Int a_prime;
    Vec exponents;  // sorted ascending
    bool operator==(const Fingerprint&) const = default;
    std::string str() const;
};

// phi_A: P^{n-1} -> WP(q), x_j = prod_k y_k^{B_jk}.
MonomialMap phi_map(const ShiodaData& data);

// q_A: WP(q) -> P^n, u_0 = prod x_j, u_k = monomial with exponent row k of A.
MonomialMap q_map(const ExponentMatrix& A);

// Exponent table of outer after inner (product of exponent matrices).
MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner);

// (unreduced (d; q'), reduced (a'; a'_vec)); linear part sum u_i = 0.
std::pair<EquationSet, EquationSet> mbar_equations(const ShiodaData& data);

FamilyEquations family_equations(const ShiodaData& data, const TParam& t);

// x_j^d = prod_k u_k^{B_jk} as exact exponent bookkeeping (B A = d I).
bool root_identity_check(const ShiodaData& data);

InverseCheck verify_inverse(const ExponentMatrix& A, const InverseMap& inv);

// A verified inverse when H_A is trivial (searching slack vectors of small
// total degree), absent when H_A is nontrivial or the search fails.
std::optional<InverseMap> construct_inverse(const ShiodaData& data);

// Family equations at t = 1 for the transposed matrix; the monomial-relation
// exponents come out proportional to the weight vector q of A.
FamilyEquations mirror_transpose(const ExponentMatrix& A);

Fingerprint fingerprint(const ShiodaData& data);

// Certificate that c A = k e^T for the primitive vector c = a'_vec, k = a'.
bool left_eigenvector_certificate(const ShiodaData& data);

}  // namespace shioda

#endif
