#ifndef SHIODA_ORACLE_HPP
#define SHIODA_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "shioda/core.hpp"

namespace shioda {

// Invariant factors recomputed by exhaustive enumeration of (Z/d)^n,
// independent of the Smith-normal-form route.
struct BruteForceGroups {
    std::vector<Int> gamma_q_prime;
    std::vector<Int> gamma_A;
    std::vector<Int> h_A;
};

// Absent when d^n exceeds the enumeration budget.
std::optional<BruteForceGroups> brute_force_groups(const ShiodaData& data,
                                                   std::uint64_t budget = 1000000);

}  // namespace shioda

#endif
