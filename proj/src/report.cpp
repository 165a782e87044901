#include "shioda/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "shioda/oracle.hpp"

namespace shioda {

json int_json(const Int& x) { return x.get_str(); }

json vec_json(const Vec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.get_str());
    return a;
}

json matrix_json(const IntMatrix& m) {
    json a = json::array();
    for (int i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
    return a;
}

json group_json(const AbelianGroupStructure& g) {
    json j;
    json f = json::array();
    for (const Int& x : g.invariant_factors) f.push_back(x.get_str());
    j["invariant_factors"] = f;
    j["order"] = g.order.get_str();
    json lifts = json::array();
    for (const CyclotomicVector& v : g.generator_lifts) lifts.push_back(vec_json(v.k));
    j["generator_lifts"] = lifts;
    return j;
}

json equation_json(const EquationSet& eq) {
    json j;
    j["linear"] = {{"u_coefficients", json::array()}, {"t", eq.t.str()}};
    for (size_t i = 0; i < eq.exponents.size(); ++i) j["linear"]["u_coefficients"].push_back("1");
    j["relation"] = {{"u0_power", eq.power.get_str()}, {"exponents", vec_json(eq.exponents)}};
    return j;
}

json family_json(const FamilyEquations& f) {
    json j;
    j["with_u0"] = equation_json(f.with_u0);
    j["eliminated"] = {{"degree", f.eliminated_degree.get_str()},
                       {"exponents", vec_json(f.eliminated_exponents)},
                       {"t", f.t.str()}};
    return j;
}

json inverse_json(const InverseMap& inv) {
    json j;
    j["slack_exponents"] = vec_json(inv.slack_exponents);
    json lines = json::array();
    for (const InverseLine& l : inv.lines)
        lines.push_back({{"s", l.s.get_str()}, {"u0_power", l.c0.get_str()}, {"u_powers", vec_json(l.c)}});
    j["lines"] = lines;
    return j;
}

Int parse_int(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long>());
    throw Error("expected an integer (number or decimal string)");
}

Vec parse_vec(const json& j) {
    if (!j.is_array()) throw Error("expected an array of integers");
    Vec v;
    for (const auto& e : j) v.push_back(parse_int(e));
    return v;
}

IntMatrix parse_matrix(const json& j) {
    if (!j.is_array() || j.empty()) throw Error("expected a non-empty array of rows");
    std::vector<Vec> rows;
    for (const auto& r : j) rows.push_back(parse_vec(r));
    return IntMatrix::from_rows(rows);
}

InputDocument parse_input(const json& doc) {
    if (!doc.is_object()) throw Error("input must be a JSON object");
    std::string name = doc.value("name", std::string("unnamed"));
    if (doc.contains("matrix")) {
        return {name, ExponentMatrix(parse_matrix(doc["matrix"])), {}};
    }
    if (doc.contains("monomials")) {
        IntMatrix m = parse_matrix(doc["monomials"]);
        Vec w;
        if (doc.contains("weights")) w = parse_vec(doc["weights"]);
        return {name, ExponentMatrix(std::move(m)), std::move(w)};
    }
    throw Error("input needs a \"matrix\" or \"monomials\" field");
}

namespace {

std::string monomial_text(const std::string& var, const Vec& exps) {
    std::string s;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!s.empty()) s += " ";
        s += var + std::to_string(i + 1);
        if (exps[i] != 1) s += "^" + exps[i].get_str();
    }
    return s.empty() ? "1" : s;
}

std::string linear_text(const EquationSet& eq) {
    std::string s;
    for (size_t i = 0; i < eq.exponents.size(); ++i) {
        if (i) s += "+";
        s += "u" + std::to_string(i + 1);
    }
    if (!eq.t.is_zero()) s += " - " + (eq.t.symbolic ? std::string("t") : "(" + eq.t.str() + ")") + " u0";
    return s + " = 0";
}

std::string latex_pow(const std::string& base, const Int& e) {
    if (e == 1) return base;
    std::string es = e.get_str();
    return es.size() == 1 ? base + "^" + es : base + "^{" + es + "}";
}

}  // namespace

std::string equation_text(const EquationSet& eq) {
    std::string rel = "u0";
    if (eq.power != 1) rel += "^" + eq.power.get_str();
    rel += " = " + monomial_text("u", eq.exponents);
    return rel + " ; " + linear_text(eq);
}

std::string equation_latex(const EquationSet& eq) {
    std::string rel = latex_pow("u_0", eq.power) + "=";
    for (size_t i = 0; i < eq.exponents.size(); ++i) {
        if (eq.exponents[i] == 0) continue;
        rel += latex_pow("u_" + std::to_string(i + 1), eq.exponents[i]);
    }
    std::string lin;
    for (size_t i = 0; i < eq.exponents.size(); ++i) {
        if (i) lin += "+";
        lin += "u_" + std::to_string(i + 1);
    }
    if (!eq.t.is_zero()) lin += "-" + (eq.t.symbolic ? std::string("t") : eq.t.str()) + "\\,u_0";
    return rel + ", \\quad " + lin + "=0";
}

json analysis_report(const std::string& name, const ExponentMatrix& A, bool with_oracle,
                     bool with_inverse) {
    json r;
    r["schema"] = "shioda-report/1";
    r["name"] = name;
    r["matrix"] = matrix_json(A.A);

    ShiodaData data = analyze(A);
    r["d"] = data.d.get_str();
    r["B"] = matrix_json(data.B);
    r["q"] = vec_json(data.q);
    r["m"] = data.m.get_str();
    r["q_reduced"] = vec_json(data.q_reduced);
    r["q_prime"] = vec_json(data.q_prime);
    r["m_prime"] = data.m_prime.get_str();
    r["a_prime"] = data.a_prime.get_str();
    r["a_prime_vec"] = vec_json(data.a_prime_vec);
    r["is_cy"] = data.is_cy;

    WeightSystem ws(data.q);
    r["fano"] = fano_divisibility(ws);
    r["well_formed_weights"] = vec_json(well_form(ws).weights);
    json strata = json::array();
    for (const SingularStratum& s : singular_strata(ws)) {
        json idx = json::array();
        for (int i : s.indices) idx.push_back(i + 1);
        // monomial i of F_A vanishes identically on the stratum iff it
        // involves a variable forced to zero there (one outside the index set)
        json vanishing = json::array();
        for (int i = 0; i < A.n(); ++i) {
            bool vanishes = false;
            for (int j = 0; j < A.n() && !vanishes; ++j)
                vanishes = A.A(i, j) > 0 &&
                           !std::binary_search(s.indices.begin(), s.indices.end(), j);
            if (vanishes) vanishing.push_back(i + 1);
        }
        strata.push_back({{"prime", s.prime.get_str()},
                          {"indices", idx},
                          {"projective_dimension", s.projective_dimension()},
                          {"vanishing_monomials", vanishing}});
    }
    r["singular_strata"] = strata;

    if (!data.is_cy) {
        r["groups"] = {{"skipped", "NotCalabiYau"}};
        r["equations"] = {{"skipped", "NotCalabiYau"}};
        r["fingerprint"] = {{"skipped", "NotCalabiYau"}};
        r["inverse"] = {{"skipped", "NotCalabiYau"}};
        return r;
    }

    json groups;
    groups["gamma_q_prime"] = group_json(gamma_q_prime(data));
    groups["gamma_A"] = group_json(gamma_A(data));
    groups["h_A"] = group_json(h_A(data));
    if (with_oracle) {
        auto bf = brute_force_groups(data);
        if (bf) {
            json o;
            json a = json::array(), b = json::array(), c = json::array();
            for (const Int& x : bf->gamma_q_prime) a.push_back(x.get_str());
            for (const Int& x : bf->gamma_A) b.push_back(x.get_str());
            for (const Int& x : bf->h_A) c.push_back(x.get_str());
            o["gamma_q_prime"] = a;
            o["gamma_A"] = b;
            o["h_A"] = c;
            groups["brute_force"] = o;
        } else {
            groups["brute_force"] = {{"skipped", "d^n exceeds enumeration budget"}};
        }
    }
    r["groups"] = groups;

    auto [unreduced, reduced] = mbar_equations(data);
    json eqs;
    eqs["unreduced"] = equation_json(unreduced);
    eqs["reduced"] = equation_json(reduced);
    eqs["family"] = family_json(family_equations(data, TParam::symbol()));
    r["equations"] = eqs;

    Fingerprint fp = fingerprint(data);
    r["fingerprint"] = {{"a_prime", fp.a_prime.get_str()}, {"exponents", vec_json(fp.exponents)}};

    if (with_inverse) {
        auto inv = construct_inverse(data);
        if (inv)
            r["inverse"] = {{"present", true}, {"map", inverse_json(*inv)}};
        else
            r["inverse"] = {{"present", false}};
    } else {
        r["inverse"] = {{"skipped", "not requested"}};
    }
    return r;
}

}  // namespace shioda
