#include "shioda/fixtures.hpp"

#include <numeric>
#include <sstream>

#include "shioda/groups.hpp"
#include "shioda/wps.hpp"

namespace shioda {

namespace {

std::string str(const Int& x) { return x.get_str(); }

std::string str(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

std::string str(bool b) { return b ? "true" : "false"; }

std::string str(const std::pair<Int, Vec>& rel) { return "(" + str(rel.first) + "; " + str(rel.second) + ")"; }

std::string str(const IntMatrix& m) {
    std::string s = "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) s += ",";
        s += str(m.row(i));
    }
    return s + "]";
}

// a and b induce the same automorphism of WP(q) iff a - b lies in
// Z q_reduced + d Z^n: scalars act on coordinate i with exponent proportional
// to q_i, and any root of unity (not just a d-th root) may serve as scalar.
bool same_x_action(const Vec& a, const Vec& b, const Vec& q_reduced, const Int& d) {
    const int n = static_cast<int>(q_reduced.size());
    const Vec& q = q_reduced;
    IntMatrix M(n, n + 1);
    for (int i = 0; i < n; ++i) {
        M(i, 0) = q[i];
        M(i, 1 + i) = d;
    }
    Vec rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = a[i] - b[i];
    return solve_diophantine(M, rhs).has_value();
}

Expected<std::pair<Int, Vec>> rel(long p, Vec v, const char* prov) {
    return {{Int(p), std::move(v)}, prov};
}

Fixture example_a() {
    Fixture f;
    f.name = "example-a";
    f.monomials = {{5, 0, 0, 0, 0}, {0, 10, 0, 0, 0}, {0, 0, 10, 0, 0}, {0, 0, 0, 10, 0}, {0, 0, 0, 0, 2}};
    f.printed_weights = {2, 1, 1, 1, 5};
    f.d = {{10}, "paper-example"};
    f.B = {{IntMatrix::diagonal({2, 1, 1, 1, 5})}, "paper-example"};
    f.q = {{{2, 1, 1, 1, 5}}, "paper-example"};
    f.q_prime = {{{2, 1, 1, 1, 5}}, "paper-example"};
    f.m_prime = {{1}, "derived"};
    f.cy = {{true}, "paper-example"};
    f.fano = {{true}, "derived"};
    f.gamma_qp_factors = {{{10, 10, 10}}, "paper-example"};
    f.gamma_a_factors = {{{10}}, "paper-example"};
    f.h_a_factors = {{{10, 10}}, "paper-example"};
    f.relation_unreduced = rel(10, {2, 1, 1, 1, 5}, "paper-example");
    f.gamma_a_members = {{{{5, 0, 0, 0, 6}}, "paper-example"}};
    return f;
}

Fixture example_b() {
    Fixture f;
    f.name = "example-b";
    f.monomials = {{15, 0, 0, 0, 1}, {0, 5, 0, 0, 0}, {0, 0, 5, 0, 0}, {0, 0, 1, 5, 0}, {0, 1, 0, 0, 2}};
    f.printed_weights = {1, 5, 5, 4, 10};
    f.errata_notes = {
        "the printed sentence \"a'=g.c.d.(d,q')=2\" conflicts with d=m'a'; the gcd is m'=2 and a'=75, "
        "matching the reduced relation [derived-correction]"};
    f.d = {{150}, "paper-example"};
    f.B = {{IntMatrix({{10, 1, 0, 0, -5},
                       {0, 30, 0, 0, 0},
                       {0, 0, 30, 0, 0},
                       {0, 0, -6, 30, 0},
                       {0, -15, 0, 0, 75}})},
           "paper-example"};
    f.q = {{{6, 30, 30, 24, 60}}, "paper-example"};
    f.q_reduced = {{{1, 5, 5, 4, 10}}, "paper-example"};
    f.q_prime = {{{10, 16, 24, 30, 70}}, "paper-example"};
    f.m_prime = {{2}, "derived-correction"};
    f.a_prime = {{75}, "derived-correction"};
    f.a_prime_vec = {{{5, 8, 12, 15, 35}}, "paper-example"};
    f.cy = {{true}, "derived"};
    f.fano = {{false}, "paper-example"};
    f.gamma_qp_factors = {{{2, 150, 150, 150}}, "paper-example"};
    f.gamma_a_factors = {{{150, 150, 150}}, "paper-example"};
    f.h_a_factors = {{{2}}, "paper-example"};
    f.relation_reduced = rel(75, {5, 8, 12, 15, 35}, "paper-example");
    f.h_a_generator_action = {{{0, 75, 75, 0, 75}}, "paper-example"};
    return f;
}

Fixture example_c() {
    Fixture f;
    f.name = "example-c";
    f.monomials = {{2, 0, 0, 0, 0}, {0, 3, 0, 0, 0}, {0, 0, 18, 0, 0}, {0, 0, 0, 18, 0}, {0, 0, 0, 0, 18}};
    f.printed_weights = {9, 6, 1, 1, 1};
    f.d = {{18}, "paper-example"};
    f.q = {{{9, 6, 1, 1, 1}}, "paper-example"};
    f.q_prime = {{{9, 6, 1, 1, 1}}, "paper-example"};
    f.cy = {{true}, "derived"};
    f.gamma_qp_factors = {{{18, 18, 18}}, "paper-example"};
    f.gamma_a_factors = {{{3, 18}}, "paper-example"};
    f.h_a_factors = {{{6, 18}}, "paper-example"};
    return f;
}

Fixture example_d() {
    Fixture f;
    f.name = "example-d";
    f.monomials = {{5, 0, 0, 0, 0}, {0, 9, 1, 0, 0}, {0, 0, 9, 1, 0}, {0, 0, 0, 10, 0}, {0, 0, 0, 0, 2}};
    f.printed_weights = {2, 1, 1, 1, 5};
    f.errata_notes = {
        "the printed q_A display shows u_4 = x_4^10 x_2 while row 4 of A is (0,0,0,10,0); the inverse "
        "verifies only with u_4 = x_4^10, so the display is treated as a typo [derived-correction]",
        "the printed inverse lines 2-5 verify only after inserting u_0 powers 172, 72, 162, 405 "
        "[derived-correction]"};
    f.d = {{810}, "paper-example"};
    f.B = {{IntMatrix({{162, 0, 0, 0, 0},
                       {0, 90, -10, 1, 0},
                       {0, 0, 90, -9, 0},
                       {0, 0, 0, 81, 0},
                       {0, 0, 0, 0, 405}})},
           "paper-example"};
    f.q = {{{162, 81, 81, 81, 405}}, "derived"};
    f.q_reduced = {{{2, 1, 1, 1, 5}}, "paper-example"};
    f.q_prime = {{{162, 90, 80, 73, 405}}, "paper-example"};
    f.m_prime = {{1}, "derived"};
    f.cy = {{true}, "derived"};
    f.h_a_factors = Expected<std::vector<Int>>{{}, "paper-example"};  // trivial
    f.relation_unreduced = rel(810, {162, 90, 80, 73, 405}, "paper-example");
    f.relation_reduced = rel(810, {162, 90, 80, 73, 405}, "derived");
    InverseMap inv;
    inv.slack_exponents = {2, 3, 1, 1, 2};
    inv.lines = {{162, 0, {65, 54, 12, 15, 162}},
                 {81, 172, {-2, 8, -11, -8, -5}},
                 {81, 72, {18, 19, -1, 1, 45}},
                 {81, 162, {0, 9, -10, -7, 0}},
                 {405, 405, {81, 90, -10, 1, 203}}};
    f.inverse = {{std::move(inv)}, "paper-example with derived u_0-power corrections on lines 2-5"};
    return f;
}

Fixture quintic() {
    Fixture f;
    f.name = "quintic";
    f.monomials = {{5, 0, 0, 0, 0}, {0, 5, 0, 0, 0}, {0, 0, 5, 0, 0}, {0, 0, 0, 5, 0}, {0, 0, 0, 0, 5}};
    f.printed_weights = {1, 1, 1, 1, 1};
    f.d = {{5}, "derived"};
    f.q = {{{1, 1, 1, 1, 1}}, "derived"};
    f.q_prime = {{{1, 1, 1, 1, 1}}, "derived"};
    f.a_prime = {{5}, "derived"};
    f.cy = {{true}, "derived"};
    f.gamma_a_factors = Expected<std::vector<Int>>{{}, "derived"};  // trivial
    f.h_a_factors = {{{5, 5, 5}}, "derived"};    // the Greene-Plesser quotient group
    f.fp = {{Fingerprint{5, {1, 1, 1, 1, 1}}}, "derived"};
    return f;
}

Fixture family(const std::string& name, const std::string& cls, std::vector<Vec> monomials, Vec weights,
               Fingerprint fp, std::vector<std::string> notes = {}) {
    Fixture f;
    f.name = name;
    f.family_class = cls;
    f.monomials = std::move(monomials);
    f.printed_weights = std::move(weights);
    f.errata_notes = std::move(notes);
    f.cy = {{true}, "derived"};
    f.fp = {{std::move(fp)}, "derived"};
    f.h_a_factors = Expected<std::vector<Int>>{{}, "paper-example"};  // trivial for all twelve families
    return f;
}

std::vector<Fixture> build_registry() {
    std::vector<Fixture> r;
    r.push_back(example_a());
    r.push_back(example_b());
    r.push_back(example_c());
    r.push_back(example_d());
    r.push_back(quintic());

    Fingerprint fpA{8, {1, 1, 1, 1, 4}};
    Fingerprint fpB{10, {1, 1, 1, 2, 5}};
    Fingerprint fpC{6, {1, 1, 1, 1, 2}};
    Fingerprint fpD{5, {1, 1, 1, 1, 1}};

    r.push_back(family("family-a1", "A",
                       {{8, 0, 1, 0, 0}, {0, 1, 7, 0, 0}, {0, 7, 0, 1, 0}, {0, 0, 0, 7, 0}, {0, 0, 0, 0, 2}},
                       {75, 84, 86, 98, 343}, fpA));
    r.push_back(family("family-a2", "A",
                       {{8, 1, 0, 0, 0}, {0, 7, 1, 0, 0}, {0, 0, 7, 0, 0}, {0, 0, 0, 4, 0}, {0, 0, 0, 1, 2}},
                       {43, 48, 56, 98, 147}, fpA));
    r.push_back(family("family-a3", "A",
                       {{0, 8, 0, 0, 0}, {7, 0, 1, 0, 0}, {0, 0, 7, 0, 0}, {1, 0, 0, 4, 0}, {0, 0, 0, 1, 2}},
                       {48, 49, 56, 86, 153}, fpA));
    r.push_back(family("family-a4", "A",
                       {{1, 7, 0, 0, 0}, {7, 0, 1, 0, 0}, {0, 0, 7, 0, 0}, {0, 1, 0, 4, 0}, {0, 0, 0, 1, 2}},
                       {42, 43, 49, 75, 134}, fpA));
    r.push_back(family("family-b1", "B",
                       {{10, 1, 0, 0, 0}, {0, 9, 1, 0, 0}, {0, 0, 9, 0, 0}, {0, 0, 0, 5, 0}, {0, 0, 0, 0, 2}},
                       {73, 80, 90, 162, 405}, fpB));
    r.push_back(family("family-b2", "B",
                       {{9, 1, 0, 0, 0}, {0, 9, 0, 0, 0}, {1, 0, 8, 0, 0}, {0, 0, 1, 5, 0}, {0, 0, 0, 0, 2}},
                       {64, 72, 73, 115, 324}, fpB));
    r.push_back(family("family-b3", "B",
                       {{9, 1, 0, 0, 0}, {0, 9, 0, 0, 0}, {1, 0, 5, 0, 0}, {0, 0, 0, 5, 0}, {0, 0, 1, 0, 2}},
                       {40, 45, 73, 81, 166}, fpB));
    r.push_back(family("family-b4", "B",
                       {{9, 0, 0, 0, 0}, {0, 8, 0, 0, 0}, {0, 1, 5, 0, 0}, {1, 0, 0, 5, 0}, {0, 0, 0, 1, 2}},
                       {40, 45, 63, 64, 148}, fpB));
    r.push_back(family(
        "family-c1", "C",
        {{6, 0, 1, 0, 0}, {0, 1, 5, 0, 0}, {0, 5, 0, 1, 0}, {0, 0, 0, 5, 0}, {0, 0, 0, 0, 3}},
        {52, 60, 63, 75, 125}, fpC,
        {"the printed monomial list \"x_1^6 x_3 + x_2 x_3^5 x_2^5 + x_4 + x_4^5 + x_5^3\" is garbled; "
         "the monomials x_1^6 x_3, x_2 x_3^5, x_2^5 x_4, x_4^5, x_5^3 are the unique correction of "
         "weighted degree 375 under the printed weights [derived-correction]"}));
    r.push_back(family("family-c2", "C",
                       {{0, 6, 0, 0, 0}, {5, 0, 1, 0, 0}, {0, 0, 5, 0, 0}, {1, 0, 0, 4, 0}, {0, 0, 0, 1, 3}},
                       {48, 50, 60, 63, 79}, fpC));
    r.push_back(family("family-d1", "D",
                       {{5, 0, 1, 0, 0}, {0, 0, 4, 1, 0}, {0, 1, 0, 4, 0}, {0, 4, 0, 0, 1}, {0, 0, 0, 0, 4}},
                       {41, 48, 51, 52, 64}, fpD,
                       {"the degree-320/exponent-64 map printed for this family is inconsistent with "
                        "det(A)=1280 and the integrality of B; the fingerprint rests on the column sums "
                        "of A all being 5 [derived-correction]"}));
    r.push_back(family("family-d2", "D",
                       {{0, 0, 5, 0, 0}, {5, 0, 0, 1, 0}, {0, 1, 0, 4, 0}, {0, 4, 0, 0, 1}, {0, 0, 0, 0, 4}},
                       {51, 60, 64, 65, 80}, fpD,
                       {"the matrix printed alongside this family has row 4 = (0,1,0,0,4), which breaks "
                        "the constant column sums; the row (0,4,0,0,1) read off the monomial x_2^4 x_5 "
                        "is used instead [derived-correction]"}));
    return r;
}

}  // namespace

const std::vector<Fixture>& fixture_registry() {
    static const std::vector<Fixture> registry = build_registry();
    return registry;
}

const Fixture& fixture_by_name(const std::string& name) {
    for (const Fixture& f : fixture_registry())
        if (f.name == name) return f;
    throw Error("unknown fixture: " + name);
}

std::vector<FieldCheck> verify_fixture(const Fixture& f) {
    std::vector<FieldCheck> checks;
    auto add = [&](const std::string& field, const std::string& expected, const std::string& actual,
                   const std::string& provenance) {
        checks.push_back({field, expected, actual, provenance, expected == actual});
    };

    ExponentMatrix A = matrix_from_polynomial(f.monomials);
    ShiodaData data = analyze(A);

    if (!f.printed_weights.empty()) {
        // The printed ambient weights must make every monomial of F_A
        // weighted-homogeneous of degree Q.
        Int Q = std::accumulate(f.printed_weights.begin(), f.printed_weights.end(), Int(0));
        Vec Aw = A.A * f.printed_weights;
        bool homog = true;
        for (const Int& x : Aw) homog = homog && x == Q;
        add("printed_weights_homogeneous", "true", str(homog), "paper-example");
        std::string which = f.printed_weights == data.q            ? "q"
                            : f.printed_weights == data.q_reduced ? "q_reduced"
                                                                  : "proportional";
        add("printed_weights_match", which, which, "derived");  // recorded, never failing
    }

    if (f.d) add("d", str(f.d->value), str(data.d), f.d->provenance);
    if (f.B) add("B", str(f.B->value), str(data.B), f.B->provenance);
    if (f.q) add("q", str(f.q->value), str(data.q), f.q->provenance);
    if (f.m) add("m", str(f.m->value), str(data.m), f.m->provenance);
    if (f.q_reduced) add("q_reduced", str(f.q_reduced->value), str(data.q_reduced), f.q_reduced->provenance);
    if (f.q_prime) add("q_prime", str(f.q_prime->value), str(data.q_prime), f.q_prime->provenance);
    if (f.m_prime) add("m_prime", str(f.m_prime->value), str(data.m_prime), f.m_prime->provenance);
    if (f.a_prime) add("a_prime", str(f.a_prime->value), str(data.a_prime), f.a_prime->provenance);
    if (f.a_prime_vec)
        add("a_prime_vec", str(f.a_prime_vec->value), str(data.a_prime_vec), f.a_prime_vec->provenance);
    if (f.cy) add("is_cy", str(f.cy->value), str(data.is_cy), f.cy->provenance);
    if (f.fano) add("fano", str(f.fano->value), str(fano_divisibility(WeightSystem(data.q))), f.fano->provenance);

    if (data.is_cy) {
        if (f.gamma_qp_factors)
            add("gamma_q_prime", str(f.gamma_qp_factors->value), str(gamma_q_prime(data).invariant_factors),
                f.gamma_qp_factors->provenance);
        if (f.gamma_a_factors)
            add("gamma_A", str(f.gamma_a_factors->value), str(gamma_A(data).invariant_factors),
                f.gamma_a_factors->provenance);
        AbelianGroupStructure h;
        if (f.h_a_factors || f.h_a_generator_action) h = h_A(data);
        if (f.h_a_factors)
            add("h_A", str(f.h_a_factors->value), str(h.invariant_factors), f.h_a_factors->provenance);
        if (f.h_a_generator_action) {
            // The printed action must be an automorphism of X_A and agree, up
            // to weighted scaling, with a computed generator lift.
            CyclotomicVector w(data.d, f.h_a_generator_action->value);
            bool auto_ok = is_automorphism_vector(w, A);
            bool matched = false;
            for (const CyclotomicVector& lift : h.generator_lifts)
                matched = matched || same_x_action(lift.k, w.k, data.q_reduced, data.d);
            add("h_A_generator_action", "automorphism+matched", std::string(auto_ok ? "automorphism" : "not-automorphism") + (matched ? "+matched" : "+unmatched"),
                f.h_a_generator_action->provenance);
        }
        auto [unreduced, reduced] = mbar_equations(data);
        if (f.relation_unreduced)
            add("relation_unreduced", str(f.relation_unreduced->value),
                str(std::make_pair(unreduced.power, unreduced.exponents)), f.relation_unreduced->provenance);
        if (f.relation_reduced)
            add("relation_reduced", str(f.relation_reduced->value),
                str(std::make_pair(reduced.power, reduced.exponents)), f.relation_reduced->provenance);
        if (f.fp) {
            Fingerprint fp = fingerprint(data);
            add("fingerprint", f.fp->value.str(), fp.str(), f.fp->provenance);
            add("fingerprint_certificate", "true", str(left_eigenvector_certificate(data)), "derived");
        }
    }

    for (const auto& member : f.gamma_a_members)
        add("gamma_A_member" + str(member.value), "true", str(in_gamma_A_lattice(member.value, data)),
            member.provenance);

    if (f.inverse) {
        InverseCheck check = verify_inverse(A, f.inverse->value);
        std::ostringstream os;
        int valid = 0;
        for (const auto& l : check.lines) valid += l.ok;
        os << valid << "/" << check.lines.size() << " lines valid";
        add("inverse_lines", std::to_string(check.lines.size()) + "/" + std::to_string(check.lines.size()) +
            " lines valid", os.str(), f.inverse->provenance);
    }
    return checks;
}

}  // namespace shioda
