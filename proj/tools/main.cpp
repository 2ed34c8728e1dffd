// Command-line surface: construction, verification, span analysis and
// fuzzing as reproducible batch commands. All randomness flows from --seed;
// identical invocations produce byte-identical JSON reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "semi2x2/separator.hpp"
#include "semi2x2/verifier.hpp"

using nlohmann::json;
using namespace semi2x2;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    int m = 4;
    int char_regime = -1;  // -1: both where applicable
    std::uint64_t p = 65521;
    int degree = 6;
    std::uint64_t seed = 1;
    int trials = -1;  // verb-specific default
    long long budget = 40000000;
    std::string out_path;
    std::string set_path, points_path;
};

void emit(const json& report, const Options& opt, int exit_code) {
    std::string text = report.dump(2) + "\n";
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + opt.out_path);
        f << text;
    } else {
        std::cout << text;
    }
    std::exit(exit_code);
}

json params_json(const Options& opt, std::initializer_list<std::string> keys) {
    json out;
    for (const auto& key : keys) {
        if (key == "m") out["m"] = opt.m;
        if (key == "char") out["char"] = opt.char_regime;
        if (key == "p") out["p"] = opt.p;
        if (key == "degree") out["degree"] = opt.degree;
        if (key == "trials") out["trials"] = opt.trials;
        if (key == "budget") out["budget"] = opt.budget;
    }
    return out;
}

std::vector<Ring> fields_for(const Options& opt) {
    if (opt.char_regime == 0) return {Ring::rationals()};
    if (opt.char_regime == 2) return {Ring::prime_field(2)};
    return {Ring::rationals(), Ring::prime_field(2)};
}

json tuple_json(const MatrixTuple& t) {
    json mats = json::array();
    for (int k = 1; k <= t.m(); ++k) {
        Mat2 s = tuple_slot(t.entries, k);
        mats.push_back(json::array({json::array({s.e[0], s.e[1]}), json::array({s.e[2], s.e[3]})}));
    }
    return mats;
}

json certificate_json(const MembershipCertificate& cert) {
    json combo = json::object();
    for (const auto& [label, c] : cert.combination) combo[label] = c.str();
    return json{{"inside", cert.inside}, {"combination", combo}};
}

/******** gen ********/

int cmd_gen(const Options& opt) {
    CharRegime regime = opt.char_regime == 2 ? CharRegime::Two : CharRegime::ZeroOrOdd;
    Ring Z = Ring::integers();
    json gens = json::array();
    for (const auto& g : enumerate_generators(opt.m, regime)) {
        Polynomial f = g.expand(Z);
        gens.push_back(json{{"descriptor", g.token()},
                            {"degree", g.degree()},
                            {"multidegree", g.multidegree(opt.m)},
                            {"polynomial", f.str()}});
    }
    json report{{"check", "gen"},
                {"parameters", params_json(opt, {"m", "char"})},
                {"seed", opt.seed},
                {"status", "pass"},
                {"generators", gens},
                {"count", gens.size()}};
    std::cout << "gen: " << gens.size() << " generators (m=" << opt.m << ", char="
              << (regime == CharRegime::Two ? "2" : "0") << ")\n";
    emit(report, opt, kExitPass);
    return kExitPass;
}

/******** verify ********/

json check_list_json(const IdentityReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e{{"name", c.name}, {"ok", c.ok}};
        if (!c.ok) e["detail"] = c.detail;
        checks.push_back(e);
    }
    return checks;
}

int cmd_verify_identities(const Options& opt) {
    IdentityReport rep = identity_suite();
    bool ok = rep.ok();
    json witnesses = json::array();
    for (const auto& c : rep.checks)
        if (!c.ok) witnesses.push_back(c.name + ": " + c.detail);
    json report{{"check", "identities"},
                {"parameters", json::object()},
                {"seed", opt.seed},
                {"status", ok ? "pass" : "fail"},
                {"checks", check_list_json(rep)},
                {"witnesses", witnesses}};
    for (const auto& c : rep.checks) std::cout << (c.ok ? "  ok  " : "  FAIL ") << c.name << "\n";
    emit(report, opt, ok ? kExitPass : kExitCheckFailure);
    return 0;
}

int cmd_verify_lemma2(const Options& opt) {
    json checks = json::array();
    bool ok = true;
    for (const Ring& ring : {Ring::integers(), Ring::prime_field(2)}) {
        for (int q = 2; 2 * q <= opt.degree; ++q) {
            auto rep = collapse_identity(ring, q);
            ok = ok && rep.ok;
            json e{{"name", "collapse-q" + std::to_string(q) + " over " + ring.str()}, {"ok", rep.ok}};
            if (!rep.ok) e["difference"] = rep.difference.str();
            checks.push_back(e);
            std::cout << (rep.ok ? "  ok  " : "  FAIL ") << e["name"].get<std::string>() << "\n";
        }
    }
    // the sign and repeated-slot congruences, as span membership at m = 4
    for (const Ring& field : {Ring::rationals(), Ring::prime_field(2)}) {
        auto catalog = enumerate_generators(4, regime_for(field));
        Polynomial sum = (xi(Ring::integers(), {1, 2, 3, 4}) + xi(Ring::integers(), {3, 2, 1, 4}))
                             .convert_to(field);
        bool inside = in_span(sum, products_of_multidegree(catalog, {1, 1, 1, 1}, field)).inside;
        ok = ok && inside;
        checks.push_back(json{{"name", "sign-congruence over " + field.str()}, {"ok", inside}});
        std::cout << (inside ? "  ok  " : "  FAIL ") << "sign-congruence over " << field.str() << "\n";
        Polynomial rep = xi(Ring::integers(), {1, 2, 1, 4}).convert_to(field);
        bool inside2 = in_span(rep, products_of_multidegree(catalog, {2, 1, 0, 1}, field)).inside;
        ok = ok && inside2;
        checks.push_back(json{{"name", "repeat-congruence over " + field.str()}, {"ok", inside2}});
        std::cout << (inside2 ? "  ok  " : "  FAIL ") << "repeat-congruence over " << field.str() << "\n";
    }
    json report{{"check", "lemma2"},
                {"parameters", params_json(opt, {"degree"})},
                {"seed", opt.seed},
                {"status", ok ? "pass" : "fail"},
                {"checks", checks},
                {"witnesses", json::array()}};
    emit(report, opt, ok ? kExitPass : kExitCheckFailure);
    return 0;
}

int cmd_verify_invariance(const Options& opt) {
    Ring field = Ring::prime_field(opt.p);
    int trials = opt.trials > 0 ? opt.trials : 500;
    std::set<GeneratorDescriptor> all;
    for (auto regime : {CharRegime::ZeroOrOdd, CharRegime::Two})
        for (const auto& g : enumerate_generators(opt.m, regime)) all.insert(g);
    json results = json::array();
    json witnesses = json::array();
    bool ok = true;
    for (const auto& g : all) {
        auto rep = check_invariance(g.expand(Ring::integers()), opt.m, trials, field, opt.seed, g.token());
        results.push_back(json{{"generator", g.token()}, {"failures", rep.failing_trials.size()}});
        if (!rep.ok()) {
            ok = false;
            witnesses.push_back(g.token());
        }
    }
    std::cout << "invariance: " << all.size() << " generators x " << trials << " trials over F"
              << opt.p << (ok ? ": all invariant\n" : ": FAILURES\n");
    json report{{"check", "invariance"},
                {"parameters", params_json(opt, {"m", "p", "trials"})},
                {"seed", opt.seed},
                {"status", ok ? "pass" : "fail"},
                {"results", results},
                {"witnesses", witnesses}};
    emit(report, opt, ok ? kExitPass : kExitCheckFailure);
    return 0;
}

int cmd_verify_nakayama(const Options& opt) {
    json checks = json::array();
    json certificate;
    bool ok = true;
    for (const Ring& field : fields_for(opt)) {
        auto catalog = enumerate_generators(opt.m, regime_for(field));
        bool char2 = field.characteristic() == 2;
        for (int arity = 4; arity <= opt.m; arity += 2) {
            std::vector<int> tuple;
            for (int i = 1; i <= arity; ++i) tuple.push_back(i);
            auto desc = GeneratorDescriptor::xi(tuple);
            auto res = is_decomposable(desc, catalog, opt.m, field);
            bool expected = arity > 4 && !char2;
            bool good = res.decomposable == expected;
            ok = ok && good;
            checks.push_back(json{{"name", desc.token() + " over " + field.str()},
                                  {"decomposable", res.decomposable},
                                  {"expected", expected},
                                  {"basis", res.basis_size},
                                  {"ok", good}});
            std::cout << (good ? "  ok  " : "  FAIL ") << desc.token() << " over " << field.str()
                      << (res.decomposable ? " decomposable" : " indecomposable") << " (basis "
                      << res.basis_size << ")\n";
            if (res.decomposable) {
                certificate = certificate_json(res.certificate);
                for (const auto& [label, c] : res.certificate.combination)
                    std::cout << "        " << c.str() << " * " << label << "\n";
            }
        }
        // quadratic generators have minimal degree: their product bases are empty
        auto det_res = is_decomposable(GeneratorDescriptor::det(1), catalog, opt.m, field);
        bool det_good = !det_res.decomposable;
        ok = ok && det_good;
        checks.push_back(json{{"name", "det(1) over " + field.str()},
                              {"decomposable", det_res.decomposable},
                              {"expected", false},
                              {"basis", det_res.basis_size},
                              {"ok", det_good}});
    }
    json report{{"check", "nakayama"},
                {"parameters", params_json(opt, {"m", "char"})},
                {"seed", opt.seed},
                {"status", ok ? "pass" : "fail"},
                {"checks", checks},
                {"witnesses", json::array()}};
    if (!certificate.is_null()) report["certificate"] = certificate;
    emit(report, opt, ok ? kExitPass : kExitCheckFailure);
    return 0;
}

int cmd_verify_spanning(const Options& opt) {
    json checks = json::array();
    bool ok = true;
    for (const Ring& field : fields_for(opt)) {
        auto rep = spanning_check(opt.m, opt.degree / 2, field);
        ok = ok && rep.ok;
        checks.push_back(json{{"name", "spanning degree " + std::to_string(opt.degree) + " over " + field.str()},
                              {"ok", rep.ok},
                              {"multidegrees", rep.multidegrees},
                              {"alpha_vectors", rep.alpha_vectors},
                              {"product_vectors", rep.product_vectors},
                              {"witnesses", rep.witnesses}});
        std::cout << (rep.ok ? "  ok  " : "  FAIL ") << "spanning m=" << opt.m << " degree "
                  << opt.degree << " over " << field.str() << " (" << rep.alpha_vectors
                  << " spanning vectors, " << rep.product_vectors << " products)\n";
    }
    json report{{"check", "spanning"},
                {"parameters", params_json(opt, {"m", "degree", "char"})},
                {"seed", opt.seed},
                {"status", ok ? "pass" : "fail"},
                {"checks", checks},
                {"witnesses", json::array()}};
    emit(report, opt, ok ? kExitPass : kExitCheckFailure);
    return 0;
}

/******** fuzz ********/

int cmd_fuzz_separating(const Options& opt) {
    int trials = opt.trials > 0 ? opt.trials : 10000;
    Options o = opt;
    o.trials = trials;
    std::vector<std::pair<std::string, Polynomial>> candidate;
    for (const auto& g : separating_family(opt.m))
        candidate.push_back({g.token(), g.expand(Ring::integers())});
    auto rep = separating_fuzz(candidate, opt.degree, opt.m, opt.p, trials, opt.seed);
    json witnesses = json::array();
    for (const auto& ce : rep.counterexamples)
        witnesses.push_back(json{{"a", tuple_json(ce.a)},
                                 {"b", tuple_json(ce.b)},
                                 {"p", opt.p},
                                 {"reference", ce.reference_label},
                                 {"value_a", ce.value_a},
                                 {"value_b", ce.value_b}});
    bool ok = rep.ok();
    std::cout << "separating fuzz: m=" << opt.m << " degree<=" << opt.degree << " over F" << opt.p
              << ", " << trials << " trials, " << rep.candidate_agreements << " candidate agreements, "
              << rep.counterexamples.size() << " counterexamples\n";
    json report{{"check", "separating"},
                {"parameters", params_json(o, {"m", "p", "degree", "trials", "budget"})},
                {"seed", opt.seed},
                {"status", ok ? "pass" : "fail"},
                {"candidate_agreements", rep.candidate_agreements},
                {"caveat", rep.caveat},
                {"witnesses", witnesses}};
    emit(report, o, ok ? kExitPass : kExitCheckFailure);
    return 0;
}

int cmd_fuzz_irredundancy(const Options& opt, const std::string& removed_token) {
    auto candidate = separating_family(opt.m);
    GeneratorDescriptor removed =
        removed_token.empty() ? candidate.back() : GeneratorDescriptor::parse(removed_token);
    auto w = irredundancy_witness(candidate, removed, opt.m, Ring::prime_field(opt.p), opt.budget,
                                  opt.seed);
    json witnesses = json::array();
    if (w.found)
        witnesses.push_back(json{{"a", tuple_json(w.a)},
                                 {"b", tuple_json(w.b)},
                                 {"p", w.a.p},
                                 {"removed", removed.token()},
                                 {"value_a", w.removed_a},
                                 {"value_b", w.removed_b}});
    std::cout << "irredundancy: removed " << removed.token() << " from S_" << opt.m << ": "
              << (w.found ? "witness found (" + w.stage + ")" : "no witness within budget (inconclusive)")
              << ", nodes " << w.nodes_used << "\n";
    json report{{"check", "irredundancy"},
                {"parameters", params_json(opt, {"m", "p", "budget"})},
                {"removed", removed.token()},
                {"seed", opt.seed},
                {"status", w.found ? "pass" : "fail"},
                {"stage", w.stage},
                {"nodes", w.nodes_used},
                {"witnesses", witnesses}};
    emit(report, opt, w.found ? kExitPass : kExitCheckFailure);
    return 0;
}

/******** eval ********/

int cmd_eval(const Options& opt) {
    std::ifstream set_file(opt.set_path);
    if (!set_file) {
        std::cerr << "eval: cannot open set file " << opt.set_path << "\n";
        return kExitUsage;
    }
    json set_doc;
    try {
        set_doc = json::parse(set_file);
    } catch (const json::parse_error& e) {
        std::cerr << "eval: set file: " << e.what() << "\n";
        return kExitUsage;
    }
    std::ifstream points_file(opt.points_path);
    if (!points_file) {
        std::cerr << "eval: cannot open points file " << opt.points_path << "\n";
        return kExitUsage;
    }
    json points_doc;
    try {
        points_doc = json::parse(points_file);
    } catch (const json::parse_error& e) {
        std::cerr << "eval: points file: " << e.what() << "\n";
        return kExitUsage;
    }

    Ring Z = Ring::integers();
    std::vector<std::string> labels;
    std::vector<Polynomial> polys;
    try {
        const json& entries = set_doc.contains("generators") ? set_doc["generators"] : set_doc.at("polynomials");
        for (const auto& e : entries) {
            labels.push_back(e.contains("descriptor") ? e["descriptor"].get<std::string>()
                                                      : e.at("name").get<std::string>());
            polys.push_back(Polynomial::parse(e.at("polynomial").get<std::string>(), Z));
        }
    } catch (const std::exception& e) {
        std::cerr << "eval: set file: " << e.what() << "\n";
        return kExitUsage;
    }

    std::uint64_t p = 0;
    json value_rows = json::array();
    try {
        p = points_doc.at("p").get<std::uint64_t>();
        if (!is_prime_u64(p)) {
            std::cerr << "eval: modulus " << p << " is not prime\n";
            return kExitUsage;
        }
        for (const auto& point : points_doc.at("points")) {
            MatrixTuple tup;
            tup.p = p;
            for (const auto& mat : point)
                for (const auto& row : mat)
                    for (const auto& v : row) {
                        std::uint64_t res = v.get<std::uint64_t>();
                        if (res >= p) {
                            std::cerr << "eval: entry " << res << " outside F" << p << "\n";
                            return kExitUsage;
                        }
                        tup.entries.push_back(res);
                    }
            if (tup.entries.size() % 4 != 0) {
                std::cerr << "eval: malformed point (entries not a multiple of 4)\n";
                return kExitUsage;
            }
            value_rows.push_back(evaluate_set(polys, tup));
        }
    } catch (const json::exception& e) {
        std::cerr << "eval: points file: " << e.what() << "\n";
        return kExitUsage;
    }

    json report{{"check", "eval"},
                {"parameters", json{{"p", p}, {"set", labels}}},
                {"seed", opt.seed},
                {"status", "pass"},
                {"values", value_rows}};
    for (const auto& row : value_rows) std::cout << row.dump() << "\n";
    emit(report, opt, kExitPass);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact semi-invariants of m-tuples of 2x2 matrices: construction and machine verification"};
    app.require_subcommand(1);

    Options opt;
    std::string suite, mode;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--m", opt.m, "tuple size")->check(CLI::Range(1, 16));
        cmd->add_option("--seed", opt.seed, "random seed (reports embed it)");
        cmd->add_option("--out", opt.out_path, "write the JSON report here");
    };

    CLI::App* gen = app.add_subcommand("gen", "enumerate and expand the generator catalog");
    add_common(gen);
    gen->add_option("--char", opt.char_regime, "characteristic regime (0 or 2)")
        ->check(CLI::IsMember({0, 2}))
        ->required();

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify);
    verify->add_option("suite", suite, "identities | invariance | lemma2 | nakayama | spanning")
        ->required()
        ->check(CLI::IsMember({"identities", "invariance", "lemma2", "nakayama", "spanning"}));
    verify->add_option("--char", opt.char_regime, "restrict to one characteristic (default: both)")
        ->check(CLI::IsMember({0, 2}));
    verify->add_option("--p", opt.p, "fuzz field modulus");
    verify->add_option("--degree", opt.degree, "degree ceiling (even, <= 12)");
    verify->add_option("--trials", opt.trials, "fuzz trials per generator");

    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized testing with an embedded seed");
    add_common(fuzz);
    std::string removed_token;
    fuzz->add_option("mode", mode, "invariance | separating | irredundancy")
        ->required()
        ->check(CLI::IsMember({"invariance", "separating", "irredundancy"}));
    fuzz->add_option("--removed", removed_token, "generator token to drop in irredundancy mode");
    fuzz->add_option("--p", opt.p, "field modulus (prime)")->required();
    fuzz->add_option("--degree", opt.degree, "reference degree for separating mode");
    fuzz->add_option("--trials", opt.trials, "number of trials");
    fuzz->add_option("--budget", opt.budget, "search node budget");

    CLI::App* eval = app.add_subcommand("eval", "evaluate a polynomial set at numeric points");
    add_common(eval);
    eval->add_option("--set", opt.set_path, "JSON file with polynomials (gen manifest works)")->required();
    eval->add_option("--points", opt.points_path, "JSON file with matrix tuples over F_p")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (opt.degree % 2 != 0 || opt.degree < 2 || opt.degree > 12) {
            std::cerr << "error: --degree must be even and within 2..12\n";
            return kExitUsage;
        }
        if ((verify->parsed() || fuzz->parsed()) && !is_prime_u64(opt.p)) {
            std::cerr << "error: --p " << opt.p << " is not prime\n";
            return kExitUsage;
        }
        if (gen->parsed()) return cmd_gen(opt);
        if (verify->parsed()) {
            if (suite == "identities") return cmd_verify_identities(opt);
            if (suite == "invariance") return cmd_verify_invariance(opt);
            if (suite == "lemma2") return cmd_verify_lemma2(opt);
            if (suite == "nakayama") return cmd_verify_nakayama(opt);
            if (suite == "spanning") return cmd_verify_spanning(opt);
        }
        if (fuzz->parsed()) {
            if (mode == "invariance") return cmd_verify_invariance(opt);
            if (mode == "separating") return cmd_fuzz_separating(opt);
            if (mode == "irredundancy") return cmd_fuzz_irredundancy(opt, removed_token);
        }
        if (eval->parsed()) return cmd_eval(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
