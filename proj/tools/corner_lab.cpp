// corner-lab: command-line front end. Every command prints one JSON document
// on stdout; diagnostics and timings go to stderr.
//
// Exit codes: 0 result produced, 2 bad input, 3 internal inconsistency or a
// failed suite criterion.

#include "cornerlab/classify3.hpp"
#include "cornerlab/compress.hpp"
#include "cornerlab/io.hpp"
#include "cornerlab/structure.hpp"
#include "cornerlab/suite.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>

using namespace cornerlab;

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitInternal = 3;

GaussianRational parse_param(const std::string& name, const std::string& text) {
    try {
        return GaussianRational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw PreconditionError("--" + name + ": " + e.what());
    }
}

Json algebra_summary(const Family& f) {
    return Json{{"source", f.name}, {"n", f.algebra.n()}, {"dim", f.algebra.dim()}};
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int fail(int code, const std::string& kind, const std::string& message, const Json& manifest) {
    std::cerr << "corner-lab: " << message << '\n';
    emit(Json{{"manifest", manifest}, {"error", {{"kind", kind}, {"message", message}}}});
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact corner-compression experiments on matrix algebras over Q(i)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(CORNERLAB_VERSION));

    SampleConfig cfg;
    std::string algebra, mode_text = "projection";
    bool cross = false;
    std::string s_text = "0", t_text = "0", r_text, k_text, m_text;
    std::vector<int> criteria;

    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "master seed")->capture_default_str();
        sub->add_option("--samples", cfg.count, "samples per rank")->capture_default_str();
    };

    auto* check = app.add_subcommand("check", "search for a corner that is not an algebra");
    check->add_option("--algebra", algebra, "family:<name>[:params] or @file.json")->required();
    check->add_option("--mode", mode_text, "projection | idempotent")->capture_default_str();
    add_sampling(check);

    auto* classify_cmd = app.add_subcommand("classify", "label a unital subalgebra of M_3");
    classify_cmd->add_option("--algebra", algebra, "family:<name>[:params] or @file.json")->required();
    classify_cmd->add_flag("--cross-validate", cross, "also sample corners in both modes");
    add_sampling(classify_cmd);

    auto* structure_cmd = app.add_subcommand("structure", "reduced block triangular form");
    structure_cmd->add_option("--algebra", algebra, "family:<name>[:params] or @file.json")->required();

    auto* repro = app.add_subcommand("repro", "replay a fixed computation");
    repro->require_subcommand(1);
    auto* sec2 = repro->add_subcommand("sec2", "the 3 x 3 counterexample projection");
    auto* thm_b = repro->add_subcommand("thmB", "certificate for B_st");
    thm_b->add_option("--s", s_text)->capture_default_str();
    thm_b->add_option("--t", t_text)->capture_default_str();
    thm_b->add_option("--k", k_text, "default: smallest positive integer outside {s, t}");
    auto* thm_c = repro->add_subcommand("thmC", "certificate for C_r");
    thm_c->add_option("--r", r_text)->required();
    auto* thm_d = repro->add_subcommand("thmD", "certificate for D_rst");
    thm_d->add_option("--r", r_text)->required();
    thm_d->add_option("--s", s_text)->required();
    thm_d->add_option("--t", t_text)->required();
    thm_d->add_option("--k", k_text, "default: first admissible pair of a fixed scan");
    thm_d->add_option("--m", m_text);

    auto* suite = app.add_subcommand("suite", "run the acceptance battery");
    suite->add_option("--criteria", criteria, "subset of 1..9 (default: all)")->delimiter(',');
    add_sampling(suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitPrecondition;
    }

    RunManifest manifest;
    manifest.command_line.assign(argv, argv + argc);
    manifest.config = cfg;
    const Json manifest_json = to_json(manifest);
    const auto start = std::chrono::steady_clock::now();
    int code = 0;

    try {
        cfg.validate();
        Json out{{"manifest", manifest_json}};
        if (*check) {
            const Family f = parse_algebra(algebra);
            const Mode mode = parse_mode(mode_text);
            out["algebra"] = algebra_summary(f);
            out["mode"] = to_string(mode);
            out["report"] = to_json(falsify(f.algebra, mode, cfg));
        } else if (*classify_cmd) {
            const Family f = parse_algebra(algebra);
            out["algebra"] = algebra_summary(f);
            if (cross) {
                const CrossValidation cv = cross_validate(f.algebra, cfg);
                out.update(to_json(cv));
                if (!cv.consistent) code = kExitInternal;
            } else {
                out.update(to_json(classify(f.algebra)));
            }
        } else if (*structure_cmd) {
            const Family f = parse_algebra(algebra);
            out["algebra"] = algebra_summary(f);
            out.update(structure_json(unhinge(triangularize(f.algebra))));
        } else if (*sec2) {
            out.update(to_json(repro_section2()));
        } else if (*thm_b) {
            const auto s = parse_param("s", s_text), t = parse_param("t", t_text);
            const auto k = k_text.empty() ? default_k_for_B(s, t) : parse_param("k", k_text);
            out.update(to_json(certify_B(s, t, k)));
        } else if (*thm_c) {
            out.update(to_json(certify_C(parse_param("r", r_text))));
        } else if (*thm_d) {
            const auto r = parse_param("r", r_text), s = parse_param("s", s_text), t = parse_param("t", t_text);
            if (k_text.empty() != m_text.empty()) throw PreconditionError("give both --k and --m, or neither");
            GaussianRational k, m;
            if (k_text.empty()) {
                auto km = default_km_for_D(r, s, t);
                if (!km) throw PreconditionError("no admissible (k, m) in the default scan");
                std::tie(k, m) = *km;
            } else {
                k = parse_param("k", k_text);
                m = parse_param("m", m_text);
            }
            out.update(to_json(certify_D(r, s, t, k, m)));
        } else if (*suite) {
            Json results = Json::array();
            bool all = true;
            run_suite(criteria, cfg, [&](const CriterionResult& r) {
                std::cerr << "criterion " << r.id << " " << (r.passed ? "PASS" : "FAIL") << " (" << r.seconds
                          << " s) " << r.detail << '\n';
                all = all && r.passed;
                results.push_back({{"id", r.id},
                                   {"name", r.name},
                                   {"passed", r.passed},
                                   {"checks", r.cases},
                                   {"failures", r.failures},
                                   {"detail", r.detail}});
            });
            out["criteria"] = results;
            out["passed"] = all;
            if (!all) code = kExitInternal;
        }
        emit(out);
    } catch (const PreconditionError& e) {
        return fail(kExitPrecondition, "precondition", e.what(), manifest_json);
    } catch (const std::invalid_argument& e) {
        return fail(kExitPrecondition, "precondition", e.what(), manifest_json);
    } catch (const std::exception& e) {
        return fail(kExitInternal, "internal", e.what(), manifest_json);
    }
    std::cerr << "elapsed "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
    return code;
}
