#ifndef SHIODA_WPS_HPP
#define SHIODA_WPS_HPP

#include <vector>

#include "shioda/matrix.hpp"

namespace shioda {

// Positive weight vector of a weighted projective space.
struct WeightSystem {
    Vec weights;

    explicit WeightSystem(Vec w);
    int n() const { return static_cast<int>(weights.size()); }
    Int total() const;  // Q = sum of weights
    bool operator==(const WeightSystem&) const = default;
};

// Coordinates fixed by the mu_p action: I = { i : p | q_i }.
struct SingularStratum {
    Int prime;
    std::vector<int> indices;        // zero-based, sorted
    int projective_dimension() const { return static_cast<int>(indices.size()) - 1; }
    bool operator==(const SingularStratum&) const = default;
};

// (gcd m, weights / m).
std::pair<Int, WeightSystem> reduce_gcd(const WeightSystem& q);

// Iterate q_i -> q_i / lcm(d_1,..,^d_i,..,d_n), with d_j the gcd of all
// weights except q_j, until every n-1 weights are coprime as a set.
WeightSystem well_form(const WeightSystem& q);

bool is_well_formed(const WeightSystem& q);

// One stratum per prime dividing at least one weight, primes ascending.
std::vector<SingularStratum> singular_strata(const WeightSystem& q);

// True iff q_i | Q for every i (canonical sheaf is a line bundle).
bool fano_divisibility(const WeightSystem& q);

}  // namespace shioda

#endif
