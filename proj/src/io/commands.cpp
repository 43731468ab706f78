#include "uniton/io/commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "uniton/combinatorics/matching.hpp"
#include "uniton/io/presets.hpp"
#include "uniton/numeric/errors.hpp"
#include "uniton/verify/differential.hpp"
#include "uniton/verify/exact_checks.hpp"

namespace uniton {

namespace {

const std::vector<std::string>& check_order() {
    static const std::vector<std::string> order = {"unitary",     "splitting",   "sij",        "backend",
                                                   "rank_formula", "uniton",      "shift",      "harmonicity",
                                                   "interchange", "split_holomorphicity"};
    return order;
}

json strings(const std::vector<GaussRat>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back(p.str());
    return out;
}

std::string join(const std::vector<size_t>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s;
}

Scenario with_seed(Scenario s, const RunOptions& opt) {
    if (opt.seed) s.seed = *opt.seed;
    return s;
}

std::vector<size_t> formula_ranks(const AdaptedPair& p, int q_sign) {
    std::vector<size_t> out;
    for (size_t i = 0; i <= p.r; ++i) {
        long f = rank_formula(p, i);
        out.push_back(static_cast<size_t>(q_sign > 0 ? f : static_cast<long>(p.n) - f));
    }
    return out;
}

bool report_ok(const CheckReport& r) { return !r.applicable || (r.pass && r.contraction); }

// Runs one float check, turning StepTooLarge into a failed report.
CheckReport guarded_float(const std::string& name, const std::function<CheckReport()>& body) {
    try {
        return body();
    } catch (const StepTooLarge& e) {
        CheckReport r;
        r.check = name;
        r.backend = "binary128";
        r.fail(e.what());
        return r;
    }
}

CheckReport rank_formula_report(const Scenario& s, const UnitonChain& chain) {
    CheckReport r;
    r.check = "rank_formula";
    r.backend = "exact";
    if (!s.pair || s.kind != ArrayKind::K) {
        r.applicable = false;
        r.pass = true;
        r.details.push_back("needs Grassmannian data with a pair");
        return r;
    }
    const auto& prof = *chain.profile();
    r.points = {};
    for (const auto& p : prof.points) r.points.push_back(p.str());
    MatchingOptions mo;
    mo.seed = s.seed;
    MatchingReport m = matching_check(s.f0_array(), *s.pair, mo);
    if (!m.ok)
        for (const auto& issue : m.issues)
            r.fail("matching clause (" + issue.clause + ") row " + std::to_string(issue.row) + ": " + issue.detail);
    std::vector<size_t> expect = formula_ranks(*s.pair, s.q_sign);
    if (expect != prof.f_ranks) r.fail("F ranks " + join(prof.f_ranks) + ", formula " + join(expect));
    r.residuals.push_back(r.pass ? 0 : 1);
    return r;
}

json issues_json(const MatchingReport& m) {
    json out = json::array();
    for (const auto& i : m.issues) out.push_back({{"clause", i.clause}, {"row", i.row}, {"detail", i.detail}});
    return out;
}

}  // namespace

const std::set<std::string>& known_checks() {
    static const std::set<std::string> names(check_order().begin(), check_order().end());
    return names;
}

CommandResult run_guarded(const std::function<CommandResult()>& body) {
    auto failure = [](int code, const std::string& kind, const std::string& what) {
        CommandResult r;
        r.code = code;
        r.out = {{"error", kind}, {"message", what}};
        r.summary = "error: " + what;
        return r;
    };
    try {
        return body();
    } catch (const ParseError& e) {
        return failure(exit_code::parse_error, e.kind(), e.what());
    } catch (const BadArguments& e) {
        return failure(exit_code::parse_error, e.kind(), e.what());
    } catch (const PatternViolation& e) {
        return failure(exit_code::pattern_violation, e.kind(), e.what());
    } catch (const RankDropAtPoint& e) {
        return failure(exit_code::infeasible, e.kind(), e.what());
    } catch (const PoleAtPoint& e) {
        return failure(exit_code::infeasible, e.kind(), e.what());
    } catch (const InfeasiblePair& e) {
        return failure(exit_code::infeasible, e.kind(), e.what());
    } catch (const Error& e) {
        return failure(exit_code::check_failed, e.kind(), e.what());
    } catch (const json::exception& e) {
        return failure(exit_code::parse_error, "ParseError", e.what());
    }
}

CommandResult cmd_build(const Scenario& scenario, const RunOptions& opt) {
    Scenario s = with_seed(scenario, opt);
    UnitonChain chain = s.build();
    const auto& prof = *chain.profile();
    CommandResult res;
    json& o = res.out;
    o["command"] = "build";
    if (!s.name.empty()) o["name"] = s.name;
    o["n"] = s.n;
    o["k"] = s.k;
    o["r"] = s.r();
    o["Q_sign"] = s.q_sign;
    o["kind"] = s.kind == ArrayKind::K ? "K" : "H";
    o["alpha_ranks"] = prof.alpha_ranks;
    if (s.kind == ArrayKind::K) o["f_ranks"] = prof.f_ranks;
    o["points"] = strings(prof.points);
    std::ostringstream sum;
    sum << (s.name.empty() ? "scenario" : s.name) << ": n=" << s.n << " k=" << s.k << " r=" << s.r()
        << "; rank alpha_i = (" << join(prof.alpha_ranks) << ")";
    if (s.kind == ArrayKind::K) sum << "; rank F_i = (" << join(prof.f_ranks) << ")";
    if (s.pair) {
        MatchingOptions mo;
        mo.seed = s.seed;
        MatchingReport m = s.kind == ArrayKind::K ? matching_check(s.f0_array(), *s.pair, mo) : MatchingReport{};
        o["pair"] = pair_to_json(*s.pair);
        o["matching"] = {{"ok", m.ok}, {"issues", issues_json(m)}};
        o["formula_f_ranks"] = formula_ranks(*s.pair, s.q_sign);
        sum << "; pair " << (m.ok ? "matched" : "NOT matched");
    }
    res.summary = sum.str();
    return res;
}

CommandResult cmd_verify(const Scenario& scenario, const RunOptions& opt) {
    for (const auto& c : opt.checks)
        if (!known_checks().count(c)) throw BadArguments("unknown check '" + c + "'");
    auto wanted = [&](const std::string& c) { return opt.checks.empty() || opt.checks.count(c) > 0; };
    Scenario s = with_seed(scenario, opt);
    UnitonChain chain = s.build();
    const auto& pts = chain.profile()->points;
    const size_t r = chain.r();
    DiffOptions d;
    d.h = opt.h;
    d.tol = opt.tol;

    std::vector<CheckReport> reports;
    auto add = [&](CheckReport rep, std::optional<size_t> i) {
        if (i) rep.check += "[" + std::to_string(*i) + "]";
        reports.push_back(std::move(rep));
    };
    if (wanted("unitary"))
        for (size_t i = 0; i <= r; ++i) add(check_unitary_involution(chain, i, pts), i);
    if (wanted("splitting"))
        for (size_t i = 0; i < r; ++i) add(check_splitting(chain, i, pts), i);
    if (wanted("sij"))
        for (size_t i = 0; i <= r; ++i) add(check_sij_images(chain, i, pts), i);
    if (wanted("backend")) add(check_backend_consistency(chain, pts), std::nullopt);
    if (wanted("rank_formula")) add(rank_formula_report(s, chain), std::nullopt);

    bool any_float = wanted("uniton") || wanted("shift") || wanted("harmonicity") || wanted("interchange") ||
                     wanted("split_holomorphicity");
    if (any_float) {
        FloatModel model(chain);
        std::vector<cquad> fp = float_sample_points(model, opt.float_points, s.seed, 2, opt.h);
        for (size_t i = 0; i < r; ++i) {
            if (wanted("uniton"))
                add(guarded_float("uniton_conditions", [&] { return check_uniton_conditions(model, i, fp, d); }), i);
            if (wanted("shift"))
                add(guarded_float("shift_identity", [&] { return check_shift_identity(model, i, fp, d); }), i);
        }
        if (wanted("harmonicity"))
            for (size_t i = 0; i <= r; ++i)
                add(guarded_float("harmonicity", [&] { return check_harmonicity(model, i, fp, d); }), i);
        if (wanted("interchange"))
            add(guarded_float("interchange", [&] { return check_interchange(model, fp, d); }), std::nullopt);
        if (wanted("split_holomorphicity"))
            for (size_t i = 0; i < r; ++i)
                add(guarded_float("split_holomorphicity", [&] { return check_split_holomorphicity(model, i, fp, d); }),
                    i);
    }

    CommandResult res;
    bool all = true;
    json reps = json::array();
    std::ostringstream sum;
    size_t failed = 0, skipped = 0;
    for (const auto& rep : reports) {
        bool ok = report_ok(rep);
        all = all && ok;
        failed += ok ? 0 : 1;
        skipped += rep.applicable ? 0 : 1;
        reps.push_back(report_to_json(rep));
        if (!ok) sum << "FAIL " << rep.check << (rep.details.empty() ? "" : ": " + rep.details.front()) << "\n";
    }
    res.out = {{"command", "verify"}, {"pass", all}, {"reports", reps}};
    if (!s.name.empty()) res.out["name"] = s.name;
    sum << (s.name.empty() ? "scenario" : s.name) << ": " << reports.size() << " checks, " << failed << " failed, "
        << skipped << " not applicable";
    res.summary = sum.str();
    res.code = all ? exit_code::ok : exit_code::check_failed;
    return res;
}

CommandResult cmd_enumerate(size_t n, size_t p, size_t r, std::optional<size_t> only_k, bool realizability) {
    if (n < 2 || r < 1 || r > n - 1) throw BadArguments("enumerate needs 1 <= r <= n-1");
    if (p > n) throw BadArguments("enumerate needs p <= n");
    const size_t q = std::min(p, n - p);
    const bool dual = q != p;
    EnumerateOptions eo;
    eo.realizability = realizability;
    // Pairs are enumerated for G_q; for q = n - p they are reported with L and S interchanged.
    if (only_k) {
        if (*only_k > n) throw BadArguments("k exceeds n");
        eo.only_k = dual ? n - *only_k : *only_k;
    }
    std::vector<EnumeratedPair> found = enumerate_pairs(n, q, r, eo);
    CommandResult res;
    json list = json::array();
    std::ostringstream sum;
    sum << "G_" << p << "(C^" << n << "), uniton number " << r << ": " << found.size() << " pair(s), Q_sign "
        << (dual ? "-1 (q = n - p = " : "+1 (q = p = ") << q << ")";
    for (const auto& e : found) {
        AdaptedPair shown = dual ? e.pair.swapped() : e.pair;
        json rec = pair_to_json(shown);
        rec["Q_sign"] = dual ? -1 : 1;
        if (dual) rec["reduced"] = pair_to_json(e.pair);
        list.push_back(rec);
        sum << "\n  " << shown.str();
    }
    res.out = {{"command", "enumerate"}, {"n", n}, {"p", p}, {"r", r}, {"q", q}, {"Q_sign", dual ? -1 : 1},
               {"pairs", list}};
    if (only_k) res.out["k"] = *only_k;
    res.summary = sum.str();
    return res;
}

CommandResult cmd_bound(size_t n, size_t p) {
    if (n < 1 || p > n) throw BadArguments("bound needs 0 <= p <= n, n >= 1");
    const bool dual = 2 * p > n;
    const long ln = static_cast<long>(n), lp = static_cast<long>(p);
    CommandResult res;
    json rows = json::array();
    std::ostringstream sum;
    sum << "uniton number bounds for G_" << p << "(C^" << n << ")" << (dual ? ", via G_" + std::to_string(n - p) : "");
    for (long k = 0; k <= ln; ++k) {
        BoundCase c = dual ? bound_case(ln - k, ln - lp, ln) : bound_case(k, lp, ln);
        json row = {{"k", k}, {"case", c.label}, {"a_k", c.a}, {"r_k", c.r}};
        if (dual) row["dual_k"] = ln - k;
        rows.push_back(row);
        sum << "\n  k=" << k << " case " << c.label << " a_k=" << c.a << " r_k=" << c.r;
    }
    res.out = {{"command", "bound"}, {"n", n}, {"p", p}, {"dualized", dual}, {"rows", rows}};
    res.summary = sum.str();
    return res;
}

CommandResult cmd_model(const Scenario& scenario, const RunOptions& opt) {
    Scenario s = with_seed(scenario, opt);
    UnitonChain chain = s.build();
    const GaussRat z0 = chain.profile()->points.front();
    ModelSource source = s.kind == ArrayKind::K ? ModelSource::KTilde : ModelSource::R;
    ModelSpace w = model_space(chain, z0, std::nullopt, source);
    ShiftReport sh = shift_stability(w);
    AdaptedReport ad = f0_adapted_check(w.sections, w.blocks, chain.f0().projector);
    bool same_as_phi = exact_same_span(w.basis, phi_hplus(chain, z0));
    json labels = json::array();
    for (const auto& v : ad.vectors) labels.push_back(v.label());
    CommandResult res;
    res.out = {{"command", "model"},
               {"source", source == ModelSource::KTilde ? "K" : "R"},
               {"model", model_to_json(w)},
               {"adapted", {{"all", ad.all_adapted()}, {"sections", labels}}},
               {"shift_stable", {{"stable", sh.stable}, {"rank_w", sh.rank_w}, {"rank_union", sh.rank_union}}},
               {"equals_phi_hplus", same_as_phi}};
    if (!s.name.empty()) res.out["name"] = s.name;
    bool ok = ad.all_adapted() && sh.stable && same_as_phi;
    std::ostringstream sum;
    sum << (s.name.empty() ? "scenario" : s.name) << ": dim W = " << w.dim() << " in C^" << w.blocks * w.ambient
        << "; F0-adapted " << (ad.all_adapted() ? "yes" : "no") << "; shift-stable " << (sh.stable ? "yes" : "no")
        << "; W = Phi(H+) " << (same_as_phi ? "yes" : "no");
    res.summary = sum.str();
    res.code = ok ? exit_code::ok : exit_code::check_failed;
    return res;
}

CommandResult cmd_model_raw(const json& raw) {
    if (!raw.is_object()) throw ParseError("raw model must be a JSON object");
    auto count = [&](const char* key) {
        if (!raw.contains(key) || !raw.at(key).is_number_integer() || raw.at(key).get<long long>() < 0) throw ParseError(std::string("raw model needs '") + key + "'");
        return raw.at(key).get<size_t>();
    };
    const size_t n = count("n"), k = count("k"), blocks = count("blocks");
    if (n == 0 || k > n || blocks == 0) throw BadArguments("raw model needs n >= 1, k <= n, blocks >= 1");
    Subspace f0 = raw.contains("F0_basis") ? Subspace::from_basis(n, columns_from_json(raw.at("F0_basis"), n))
                                           : Subspace::standard(n, k);
    GaussRat z0 = raw.contains("point") ? gauss_from_json(raw.at("point")) : GaussRat(0);
    if (!raw.contains("sections")) throw ParseError("raw model needs 'sections'");
    std::vector<MeroVector> sections;
    for (const auto& v : raw.at("sections")) {
        sections.push_back(mero_from_json(v));
        if (sections.back().size() != blocks * n) throw ParseError("each section needs blocks * n entries");
    }
    ModelSpace w = model_from_sections(sections, blocks, n, z0);
    ShiftReport sh = shift_stability(w);
    AdaptedReport ad = f0_adapted_check(sections, blocks, f0.projector);
    json labels = json::array();
    for (const auto& v : ad.vectors) labels.push_back(v.label());
    CommandResult res;
    res.out = {{"command", "model"},
               {"source", "raw"},
               {"model", model_to_json(w)},
               {"adapted", {{"all", ad.all_adapted()}, {"sections", labels}}},
               {"shift_stable", {{"stable", sh.stable}, {"rank_w", sh.rank_w}, {"rank_union", sh.rank_union}}}};
    res.summary = "raw model: dim W = " + std::to_string(w.dim()) + "; F0-adapted " +
                  (ad.all_adapted() ? "yes" : "no") + "; shift-stable " + (sh.stable ? "yes" : "no");
    res.code = ad.all_adapted() && sh.stable ? exit_code::ok : exit_code::check_failed;
    return res;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Harmonic maps into Grassmannians from F0-arrays: build, verify, enumerate, bound, model"};
    app.require_subcommand(1);
    std::string scenario_file, preset_name, checks, raw_model;
    RunOptions opt;
    std::uint64_t seed = 0;
    bool pretty = false, quiet = false;
    size_t n = 0, p = 0, r = 0, k = 0;
    bool no_realize = false;

    app.add_flag("--json", pretty, "Indent the JSON report");
    app.add_flag("--quiet", quiet, "Suppress the summary on standard error");

    auto scenario_opts = [&](CLI::App* sub) {
        // --h is the step size, so help keeps only its long form.
        sub->set_help_flag("--help", "Print this help message and exit");
        auto* f = sub->add_option("--scenario", scenario_file, "Scenario JSON file");
        auto* pr = sub->add_option("--preset", preset_name, "Built-in example");
        f->excludes(pr);
        sub->add_option("--seed", seed, "Sampling seed (overrides the scenario)");
        sub->add_option("--points", opt.float_points, "Float sample points for differential checks")
            ->check(CLI::PositiveNumber);
        sub->add_option("--tol", opt.tol, "Residual tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--h", opt.h, "Finite-difference step")->check(CLI::PositiveNumber);
        sub->add_flag("--json", pretty, "Indent the JSON report");
        sub->add_flag("--quiet", quiet, "Suppress the summary on standard error");
    };
    CLI::App* build = app.add_subcommand("build", "Build the chain and report generic ranks");
    scenario_opts(build);
    CLI::App* verify = app.add_subcommand("verify", "Run verifier checks");
    scenario_opts(verify);
    verify->add_option("--checks", checks, "Comma-separated subset of checks");
    CLI::App* model = app.add_subcommand("model", "Grassmannian model, adaptedness and shift stability");
    scenario_opts(model);
    model->add_option("--raw-model", raw_model, "Raw model JSON instead of a scenario");
    CLI::App* enumerate = app.add_subcommand("enumerate", "Adapted pairs for G_p(C^n) with uniton number r");
    enumerate->add_option("n", n)->required();
    enumerate->add_option("p", p)->required();
    enumerate->add_option("r", r)->required();
    auto* kopt = enumerate->add_option("--k", k, "Only this dim F0");
    enumerate->add_flag("--no-realize", no_realize, "Skip the realizability pass");
    enumerate->add_flag("--json", pretty, "Indent the JSON report");
    enumerate->add_flag("--quiet", quiet, "Suppress the summary on standard error");
    CLI::App* bound = app.add_subcommand("bound", "Uniton number bounds r_k for k = 0..n");
    bound->add_option("n", n)->required();
    bound->add_option("p", p)->required();
    bound->add_flag("--json", pretty, "Indent the JSON report");
    bound->add_flag("--quiet", quiet, "Suppress the summary on standard error");
    CLI::App* presets = app.add_subcommand("preset", "Print a preset scenario, or list them");
    std::string show_name;
    presets->add_option("name", show_name);
    presets->add_flag("--json", pretty, "Indent the JSON report");
    presets->add_flag("--quiet", quiet, "Suppress the summary on standard error");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code::parse_error;
    }

    auto load = [&]() -> Scenario {
        if (!preset_name.empty()) return preset(preset_name);
        if (scenario_file.empty()) throw BadArguments("need --scenario FILE or --preset NAME");
        return parse_scenario(read_file(scenario_file));
    };
    auto seeded = [&](CLI::App* sub) {
        if (sub->count("--seed")) opt.seed = seed;
    };

    CommandResult res = run_guarded([&]() -> CommandResult {
        if (build->parsed()) {
            seeded(build);
            return cmd_build(load(), opt);
        }
        if (verify->parsed()) {
            seeded(verify);
            std::stringstream ss(checks);
            for (std::string item; std::getline(ss, item, ',');)
                if (!item.empty()) opt.checks.insert(item);
            return cmd_verify(load(), opt);
        }
        if (model->parsed()) {
            seeded(model);
            if (!raw_model.empty()) {
                json j;
                try {
                    j = json::parse(read_file(raw_model));
                } catch (const json::exception& e) {
                    throw ParseError(e.what());
                }
                return cmd_model_raw(j);
            }
            return cmd_model(load(), opt);
        }
        if (enumerate->parsed())
            return cmd_enumerate(n, p, r, kopt->count() ? std::optional<size_t>(k) : std::nullopt, !no_realize);
        if (bound->parsed()) return cmd_bound(n, p);
        CommandResult list;
        if (show_name.empty()) {
            list.out = {{"command", "preset"}, {"presets", preset_names()}};
            for (const auto& name : preset_names()) list.summary += name + "\n";
        } else {
            list.out = scenario_to_json(preset(show_name));
            list.summary = show_name;
        }
        return list;
    });

    out << res.out.dump(pretty ? 2 : -1) << "\n";
    if (!quiet && !res.summary.empty()) err << res.summary << "\n";
    return res.code;
}

}  // namespace uniton
