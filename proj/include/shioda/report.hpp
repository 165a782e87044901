#ifndef SHIODA_REPORT_HPP
#define SHIODA_REPORT_HPP

#include <json.hpp>
#include <string>

#include "shioda/core.hpp"
#include "shioda/groups.hpp"
#include "shioda/maps.hpp"
#include "shioda/wps.hpp"

namespace shioda {

using json = nlohmann::ordered_json;

// All arbitrary-precision integers are serialized as decimal strings.
json int_json(const Int& x);
json vec_json(const Vec& v);
json matrix_json(const IntMatrix& m);
json group_json(const AbelianGroupStructure& g);
json equation_json(const EquationSet& eq);
json family_json(const FamilyEquations& f);
json inverse_json(const InverseMap& inv);

Int parse_int(const json& j);
Vec parse_vec(const json& j);
IntMatrix parse_matrix(const json& j);

// {"name": ..., "matrix": [[...]]} or {"name": ..., "monomials": [[...]], "weights": [...]}.
struct InputDocument {
    std::string name;
    ExponentMatrix matrix;
    Vec declared_weights;  // empty when the input gave a bare matrix
};
InputDocument parse_input(const json& doc);

// "u0^75 = u1^5 u2^8 u3^12 u4^15 u5^35 ; u1+u2+u3+u4+u5 = 0"
std::string equation_text(const EquationSet& eq);
std::string equation_latex(const EquationSet& eq);

// Full analysis: invariants, WPS geometry, groups, equations, fingerprint,
// inverse.  Sections requiring the CY condition carry a "skipped" marker on
// non-CY input.  with_oracle adds the brute-force group cross-check.
json analysis_report(const std::string& name, const ExponentMatrix& A, bool with_oracle,
                     bool with_inverse);

// argv-style entry point used by the CLI binary and by tests.
// Exit codes: 0 success, 1 input/validation failure, 2 internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shioda

#endif
