#ifndef SHIODA_FIXTURES_HPP
#define SHIODA_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "shioda/core.hpp"
#include "shioda/maps.hpp"

namespace shioda {

// One expected value with its provenance: "paper-example" for data printed in
// the source examples, "derived-correction" for values recomputed here where
// the printed data is inconsistent, "derived" for values the source does not
// print at all.
template <typename T>
struct Expected {
    T value;
    std::string provenance;
};

struct Fixture {
    std::string name;
    std::vector<Vec> monomials;  // rows of the exponent matrix
    Vec printed_weights;         // ambient weights as printed; may be empty
    std::string family_class;    // "A".."D" for the twelve families, else ""
    std::vector<std::string> errata_notes;

    std::optional<Expected<Int>> d, m, m_prime, a_prime;
    std::optional<Expected<Vec>> q, q_reduced, q_prime, a_prime_vec;
    std::optional<Expected<IntMatrix>> B;
    std::optional<Expected<bool>> cy, fano;
    std::optional<Expected<std::vector<Int>>> gamma_qp_factors, gamma_a_factors, h_a_factors;
    std::optional<Expected<std::pair<Int, Vec>>> relation_unreduced, relation_reduced;
    std::optional<Expected<Fingerprint>> fp;

    // Vectors asserted to satisfy both Gamma_A congruences (q'.k == 0 and
    // B k == 0 mod d).
    std::vector<Expected<Vec>> gamma_a_members;
    // Expected x-side action of an H_A generator, up to weighted scaling.
    std::optional<Expected<Vec>> h_a_generator_action;
    // Printed inverse (with any corrections noted) to run through
    // verify_inverse.
    std::optional<Expected<InverseMap>> inverse;
};

const std::vector<Fixture>& fixture_registry();

const Fixture& fixture_by_name(const std::string& name);

struct FieldCheck {
    std::string field;
    std::string expected;
    std::string actual;
    std::string provenance;
    bool ok;
};

// Recompute everything for one fixture and diff against its expectations.
std::vector<FieldCheck> verify_fixture(const Fixture& f);

}  // namespace shioda

#endif
