#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "shioda/fixtures.hpp"
#include "shioda/oracle.hpp"
#include "shioda/report.hpp"

namespace shioda {

namespace {

std::string vec_text(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

Rat parse_rational(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw Error("cannot parse rational: " + s);
    if (v.get_den() == 0) throw Error("zero denominator in rational: " + s);
    v.canonicalize();
    return v;
}

InputDocument load_input(const std::string& path, const std::string& fixture_name) {
    if (!path.empty() && !fixture_name.empty())
        throw Error("give either an input file or --fixture, not both");
    if (!fixture_name.empty()) {
        const Fixture& f = fixture_by_name(fixture_name);
        return {f.name, matrix_from_polynomial(f.monomials), f.printed_weights};
    }
    if (path.empty()) throw Error("no input: give a JSON file or --fixture NAME");
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error(std::string("invalid JSON: ") + e.what());
    }
    return parse_input(doc);
}

std::string group_text(const AbelianGroupStructure& g) {
    if (g.trivial()) return "trivial (order 1)";
    std::string s;
    for (size_t i = 0; i < g.invariant_factors.size(); ++i) {
        if (i) s += " x ";
        s += "Z/" + g.invariant_factors[i].get_str();
    }
    return s + " (order " + g.order.get_str() + ")";
}

void print_analysis_text(const json& r, std::ostream& out) {
    out << "name: " << r["name"].get<std::string>() << "\n";
    out << "d = " << r["d"].get<std::string>() << "\n";
    auto vec_of = [&](const char* key) {
        Vec v;
        for (const auto& e : r[key]) v.push_back(Int(e.get<std::string>()));
        return vec_text(v);
    };
    out << "q = " << vec_of("q") << "  (m = " << r["m"].get<std::string>()
        << ", reduced " << vec_of("q_reduced") << ")\n";
    out << "q' = " << vec_of("q_prime") << "  (m' = " << r["m_prime"].get<std::string>()
        << ", a' = " << r["a_prime"].get<std::string>() << ", a'_vec = " << vec_of("a_prime_vec")
        << ")\n";
    out << "calabi-yau: " << (r["is_cy"].get<bool>() ? "yes" : "no") << "\n";
    out << "fano divisibility: " << (r["fano"].get<bool>() ? "yes" : "no") << "\n";
    out << "well-formed weights: " << vec_of("well_formed_weights") << "\n";
    for (const auto& s : r["singular_strata"])
        out << "singular stratum: p = " << s["prime"].get<std::string>() << ", coordinates "
            << s["indices"].dump() << ", dimension " << s["projective_dimension"].get<int>() << "\n";
    if (!r["is_cy"].get<bool>()) {
        out << "groups/equations/fingerprint: skipped (not Calabi-Yau)\n";
        return;
    }
    auto group_of = [&](const char* key) {
        AbelianGroupStructure g;
        for (const auto& e : r["groups"][key]["invariant_factors"])
            g.invariant_factors.push_back(Int(e.get<std::string>()));
        g.order = Int(r["groups"][key]["order"].get<std::string>());
        return group_text(g);
    };
    out << "Gamma(q') = " << group_of("gamma_q_prime") << "\n";
    out << "Gamma_A   = " << group_of("gamma_A") << "\n";
    out << "H_A       = " << group_of("h_A") << "\n";
    auto eq_of = [&](const char* key) {
        EquationSet eq;
        eq.power = Int(r["equations"][key]["relation"]["u0_power"].get<std::string>());
        for (const auto& e : r["equations"][key]["relation"]["exponents"])
            eq.exponents.push_back(Int(e.get<std::string>()));
        eq.t = TParam::exact(Rat(0));
        return equation_text(eq);
    };
    out << "relation (unreduced): " << eq_of("unreduced") << "\n";
    out << "relation (reduced):   " << eq_of("reduced") << "\n";
    out << "fingerprint: (" << r["fingerprint"]["a_prime"].get<std::string>() << "; ";
    Vec fpv;
    for (const auto& e : r["fingerprint"]["exponents"]) fpv.push_back(Int(e.get<std::string>()));
    out << vec_text(fpv) << ")\n";
}

int cmd_analyze(const std::string& path, const std::string& fixture, const std::string& format,
                bool oracle, std::ostream& out) {
    InputDocument doc = load_input(path, fixture);
    json r = analysis_report(doc.name, doc.matrix, oracle, /*with_inverse=*/true);
    if (format == "json")
        out << r.dump(2) << "\n";
    else
        print_analysis_text(r, out);
    return 0;
}

int cmd_verify_fixtures(const std::string& filter, const std::string& format, std::ostream& out) {
    json table = json::array();
    bool all_ok = true;
    for (const Fixture& f : fixture_registry()) {
        if (!filter.empty() && f.name.find(filter) == std::string::npos) continue;
        std::vector<FieldCheck> checks = verify_fixture(f);
        json entry;
        entry["fixture"] = f.name;
        json rows = json::array();
        bool ok = true;
        for (const FieldCheck& c : checks) {
            ok = ok && c.ok;
            rows.push_back({{"field", c.field},
                            {"expected", c.expected},
                            {"actual", c.actual},
                            {"provenance", c.provenance},
                            {"ok", c.ok}});
        }
        entry["checks"] = rows;
        entry["errata_notes"] = f.errata_notes;
        entry["ok"] = ok;
        table.push_back(entry);
        all_ok = all_ok && ok;
        if (format != "json") {
            out << f.name << ": " << (ok ? "pass" : "FAIL") << " (" << checks.size() << " checks)\n";
            for (const FieldCheck& c : checks)
                if (!c.ok)
                    out << "  " << c.field << ": expected " << c.expected << ", got " << c.actual
                        << " [" << c.provenance << "]\n";
        }
    }
    if (format == "json")
        out << json{{"schema", "shioda-report/1"}, {"fixtures", table}, {"ok", all_ok}}.dump(2)
            << "\n";
    else if (table.empty())
        out << "no fixtures matched\n";
    return all_ok ? 0 : 1;
}

int cmd_classify(const std::string& path, const std::string& format, std::ostream& out) {
    // (name, data, errata) per family; default input is the built-in family registry.
    std::vector<std::tuple<std::string, ShiodaData, std::vector<std::string>>> entries;
    if (path.empty()) {
        for (const Fixture& f : fixture_registry()) {
            if (f.family_class.empty()) continue;
            entries.emplace_back(f.name, analyze(matrix_from_polynomial(f.monomials)), f.errata_notes);
        }
    } else {
        std::ifstream in(path);
        if (!in) throw Error("cannot open input file: " + path);
        json doc;
        try {
            in >> doc;
        } catch (const json::exception& e) {
            throw Error(std::string("invalid JSON: ") + e.what());
        }
        if (!doc.is_array()) doc = json::array({doc});
        for (const auto& item : doc) {
            InputDocument d = parse_input(item);
            try {
                entries.emplace_back(d.name, analyze(d.matrix), std::vector<std::string>{});
            } catch (const Error& e) {
                throw Error("family " + d.name + ": " + e.what());
            }
        }
    }
    std::map<std::string, std::vector<std::string>> classes;
    std::map<std::string, Fingerprint> fps;
    json notes = json::array();
    for (auto& [name, data, errata] : entries) {
        if (!data.is_cy) throw Error("family " + name + " is not Calabi-Yau");
        Fingerprint fp = fingerprint(data);
        if (!left_eigenvector_certificate(data))
            throw InternalError("fingerprint certificate failed for " + name);
        classes[fp.str()].push_back(name);
        fps.emplace(fp.str(), fp);
        for (const std::string& e : errata) notes.push_back({{"family", name}, {"note", e}});
    }
    if (format == "json") {
        json r;
        r["schema"] = "shioda-report/1";
        json cl = json::array();
        for (const auto& [key, members] : classes) {
            const Fingerprint& fp = fps.at(key);
            cl.push_back({{"fingerprint",
                           {{"a_prime", fp.a_prime.get_str()}, {"exponents", vec_json(fp.exponents)}}},
                          {"members", members}});
        }
        r["classes"] = cl;
        r["errata_applied"] = notes;
        out << r.dump(2) << "\n";
    } else {
        for (const auto& [key, members] : classes) {
            out << key << ":";
            for (const std::string& m : members) out << " " << m;
            out << "\n";
        }
        for (const auto& n : notes)
            out << "note [" << n["family"].get<std::string>() << "]: " << n["note"].get<std::string>()
                << "\n";
    }
    return 0;
}

int cmd_equations(const std::string& path, const std::string& fixture, const std::string& format,
                  const std::string& t_str, std::ostream& out) {
    InputDocument doc = load_input(path, fixture);
    ShiodaData data = analyze(doc.matrix);
    if (!data.is_cy) throw NotCalabiYauError();
    auto [unreduced, reduced] = mbar_equations(data);
    std::optional<FamilyEquations> fam;
    if (!t_str.empty()) {
        TParam t = t_str == "t" ? TParam::symbol() : TParam::exact(parse_rational(t_str));
        fam = family_equations(data, t);
    }
    if (format == "json") {
        json r;
        r["schema"] = "shioda-report/1";
        r["name"] = doc.name;
        r["unreduced"] = equation_json(unreduced);
        r["reduced"] = equation_json(reduced);
        if (fam) r["family"] = family_json(*fam);
        out << r.dump(2) << "\n";
    } else if (format == "latex") {
        out << equation_latex(fam ? fam->with_u0 : reduced) << "\n";
    } else {
        out << equation_text(fam ? fam->with_u0 : reduced) << "\n";
    }
    return 0;
}

int cmd_groups(const std::string& path, const std::string& fixture, const std::string& format,
               bool oracle, std::ostream& out) {
    InputDocument doc = load_input(path, fixture);
    ShiodaData data = analyze(doc.matrix);
    if (!data.is_cy) throw NotCalabiYauError();
    AbelianGroupStructure gq = gamma_q_prime(data), ga = gamma_A(data), ha = h_A(data);
    std::optional<BruteForceGroups> bf;
    if (oracle) bf = brute_force_groups(data);
    if (format == "json") {
        json r;
        r["schema"] = "shioda-report/1";
        r["name"] = doc.name;
        r["gamma_q_prime"] = group_json(gq);
        r["gamma_A"] = group_json(ga);
        r["h_A"] = group_json(ha);
        if (oracle) {
            if (bf) {
                auto factors = [](const std::vector<Int>& v) {
                    json a = json::array();
                    for (const Int& x : v) a.push_back(x.get_str());
                    return a;
                };
                r["brute_force"] = {{"gamma_q_prime", factors(bf->gamma_q_prime)},
                                    {"gamma_A", factors(bf->gamma_A)},
                                    {"h_A", factors(bf->h_A)}};
            } else {
                r["brute_force"] = {{"skipped", "d^n exceeds enumeration budget"}};
            }
        }
        out << r.dump(2) << "\n";
    } else {
        out << "Gamma(q') = " << group_text(gq) << "\n";
        out << "Gamma_A   = " << group_text(ga) << "\n";
        out << "H_A       = " << group_text(ha) << "\n";
        if (oracle) {
            if (bf) {
                auto agree = [](const std::vector<Int>& a, const std::vector<Int>& b) {
                    return a == b ? "agrees" : "DISAGREES";
                };
                out << "brute force: Gamma(q') " << agree(bf->gamma_q_prime, gq.invariant_factors)
                    << ", Gamma_A " << agree(bf->gamma_A, ga.invariant_factors) << ", H_A "
                    << agree(bf->h_A, ha.invariant_factors) << "\n";
                if (bf->gamma_q_prime != gq.invariant_factors || bf->gamma_A != ga.invariant_factors ||
                    bf->h_A != ha.invariant_factors)
                    throw InternalError("brute-force oracle disagrees with lattice computation");
            } else {
                out << "brute force: skipped (d^n exceeds enumeration budget)\n";
            }
        }
    }
    if (bf && (bf->gamma_q_prime != gq.invariant_factors || bf->gamma_A != ga.invariant_factors ||
               bf->h_A != ha.invariant_factors))
        throw InternalError("brute-force oracle disagrees with lattice computation");
    return 0;
}

int cmd_invert(const std::string& path, const std::string& fixture, const std::string& format,
               std::ostream& out) {
    InputDocument doc = load_input(path, fixture);
    ShiodaData data = analyze(doc.matrix);
    if (!data.is_cy) throw NotCalabiYauError();
    std::optional<InverseMap> inv = construct_inverse(data);
    if (format == "json") {
        json r;
        r["schema"] = "shioda-report/1";
        r["name"] = doc.name;
        r["present"] = inv.has_value();
        if (inv) {
            r["map"] = inverse_json(*inv);
            InverseCheck check = verify_inverse(doc.matrix, *inv);
            r["verified"] = check.ok;
        } else {
            r["reason"] = h_A(data).trivial() ? "slack search failed" : "H_A is nontrivial";
        }
        out << r.dump(2) << "\n";
    } else {
        if (!inv) {
            out << "no inverse: "
                << (h_A(data).trivial() ? "slack search failed" : "H_A is nontrivial") << "\n";
        } else {
            out << "M = " << [&] {
                std::string s;
                for (size_t i = 0; i < inv->slack_exponents.size(); ++i) {
                    if (inv->slack_exponents[i] == 0) continue;
                    if (!s.empty()) s += " ";
                    s += "x" + std::to_string(i + 1);
                    if (inv->slack_exponents[i] != 1) s += "^" + inv->slack_exponents[i].get_str();
                }
                return s;
            }() << "\n";
            for (size_t j = 0; j < inv->lines.size(); ++j) {
                const InverseLine& l = inv->lines[j];
                out << "M^" << l.s.get_str() << " x" << (j + 1) << " = u0^" << l.c0.get_str();
                for (size_t k = 0; k < l.c.size(); ++k)
                    if (l.c[k] != 0)
                        out << " u" << (k + 1) << "^" << l.c[k].get_str();
                out << "\n";
            }
            InverseCheck check = verify_inverse(doc.matrix, *inv);
            out << "verified: " << (check.ok ? "yes" : "NO") << "\n";
        }
    }
    return 0;
}

int cmd_mirror(const std::string& path, const std::string& fixture, const std::string& format,
               std::ostream& out) {
    InputDocument doc = load_input(path, fixture);
    FamilyEquations fam = mirror_transpose(doc.matrix);
    if (format == "json") {
        json r;
        r["schema"] = "shioda-report/1";
        r["name"] = doc.name;
        r["mirror_family"] = family_json(fam);
        out << r.dump(2) << "\n";
    } else if (format == "latex") {
        out << equation_latex(fam.with_u0) << "\n";
    } else {
        out << equation_text(fam.with_u0) << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shioda-map analysis of Fermat-type hypersurface quotients"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string input_path, fixture_name, t_str;
    bool oracle = false;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text", "latex"}));
        if (with_input) {
            cmd->add_option("input", input_path, "JSON input file");
            cmd->add_option("--fixture", fixture_name, "use a built-in fixture as input");
        }
        return cmd;
    };

    CLI::App* analyze_cmd = add_common(app.add_subcommand("analyze", "full invariant report"), true);
    analyze_cmd->add_flag("--oracle", oracle, "cross-check groups by exhaustive enumeration");
    CLI::App* verify_cmd =
        add_common(app.add_subcommand("verify-fixtures", "recompute and diff the built-in fixtures"),
                   false);
    verify_cmd->add_option("--fixture", fixture_name, "only fixtures whose name contains this");
    CLI::App* classify_cmd =
        add_common(app.add_subcommand("classify", "partition families by birational fingerprint"),
                   false);
    classify_cmd->add_option("input", input_path, "JSON array of family inputs");
    CLI::App* equations_cmd =
        add_common(app.add_subcommand("equations", "defining equations of the Shioda quotient"), true);
    equations_cmd->add_option("-t", t_str, "deformation parameter (rational, or the symbol t)");
    CLI::App* groups_cmd =
        add_common(app.add_subcommand("groups", "quotient group structures"), true);
    groups_cmd->add_flag("--oracle", oracle, "cross-check by exhaustive enumeration");
    CLI::App* invert_cmd =
        add_common(app.add_subcommand("invert", "construct an explicit monomial inverse"), true);
    CLI::App* mirror_cmd =
        add_common(app.add_subcommand("mirror", "t=1 family equations of the transpose"), true);

    try {
        std::vector<std::string> argv(args.rbegin(), args.rend());
        app.name("shioda");
        app.parse(std::move(argv));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(input_path, fixture_name, format, oracle, out);
        if (verify_cmd->parsed()) return cmd_verify_fixtures(fixture_name, format, out);
        if (classify_cmd->parsed()) return cmd_classify(input_path, format, out);
        if (equations_cmd->parsed())
            return cmd_equations(input_path, fixture_name, format, t_str, out);
        if (groups_cmd->parsed()) return cmd_groups(input_path, fixture_name, format, oracle, out);
        if (invert_cmd->parsed()) return cmd_invert(input_path, fixture_name, format, out);
        if (mirror_cmd->parsed()) return cmd_mirror(input_path, fixture_name, format, out);
        err << "error: no subcommand\n";
        return 1;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace shioda
