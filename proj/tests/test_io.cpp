#include <gtest/gtest.h>

#include "uniton/io/commands.hpp"
#include "uniton/io/presets.hpp"
#include "uniton/numeric/errors.hpp"

using namespace uniton;

namespace {

CommandResult guarded(const std::function<CommandResult()>& f) { return run_guarded(f); }

Scenario inline_scenario(const std::string& text) { return parse_scenario(text); }

}  // namespace

TEST(JsonIo, GaussRatRoundTrip) {
    for (const char* s : {"0", "3/2", "-i", "3/2-5/7i", "-1/3+i"}) {
        GaussRat z = GaussRat::parse(s);
        EXPECT_EQ(gauss_from_json(gauss_to_json(z)), z) << s;
    }
    EXPECT_EQ(gauss_from_json(json(4)), GaussRat(4));
    EXPECT_THROW(gauss_from_json(json(0.5)), ParseError);
}

TEST(JsonIo, RatFunRoundTrip) {
    RatFun poly(Poly({GaussRat(1), GaussRat(0), GaussRat::i()}));
    json jp = ratfun_to_json(poly);
    EXPECT_FALSE(jp.contains("den"));
    EXPECT_EQ(ratfun_from_json(jp), poly);

    RatFun frac(Poly({GaussRat(1)}), Poly({GaussRat(-2), GaussRat(1)}));
    json jf = ratfun_to_json(frac);
    ASSERT_TRUE(jf.contains("den"));
    EXPECT_EQ(ratfun_from_json(jf), frac);

    EXPECT_EQ(ratfun_from_json(json("2-i")), RatFun(GaussRat::parse("2-i")));
    EXPECT_THROW(ratfun_from_json(json{{"num", {"1"}}, {"den", {"0"}}}), ParseError);
}

TEST(JsonIo, PresetScenariosRoundTrip) {
    for (const auto& name : preset_names()) {
        Scenario s = preset(name);
        json j = scenario_to_json(s);
        Scenario back = scenario_from_json(j);
        EXPECT_EQ(scenario_to_json(back), j) << name;
        EXPECT_EQ(back.r(), s.r());
        EXPECT_EQ(back.kind, s.kind);
    }
}

TEST(JsonIo, PairIsColumnMajor) {
    Scenario s = preset("c10-example");
    json j = pair_to_json(*s.pair);
    ASSERT_EQ(j["L"].size(), 3u);
    EXPECT_EQ(j["L"][0].size(), 3u);
    EXPECT_EQ(j["L"][2].size(), 1u);
    AdaptedPair back = pair_from_json(j);
    EXPECT_EQ(back.l, s.pair->l);
    EXPECT_EQ(back.s, s.pair->s);
    json bad = j;
    bad["L"][1] = json::array({1});
    EXPECT_THROW(pair_from_json(bad), ParseError);
}

TEST(JsonIo, MalformedInput) {
    EXPECT_THROW(parse_scenario("{"), ParseError);
    EXPECT_THROW(parse_scenario("[]"), ParseError);
    EXPECT_THROW(parse_scenario(R"({"n":3,"k":1})"), ParseError);
    EXPECT_THROW(parse_scenario(R"({"n":3,"k":1,"Q_sign":2,"array":[]})"), ParseError);
    EXPECT_THROW(parse_scenario(R"({"n":3,"k":1,"kind":"X","array":[]})"), ParseError);
    EXPECT_THROW(parse_scenario(R"({"n":-3,"k":1,"array":[]})"), ParseError);
}

TEST(Commands, EmptyArrayIsConstantMap) {
    CommandResult r = guarded([] { return cmd_build(inline_scenario(R"({"n":5,"k":3,"Q_sign":1,"array":[]})")); });
    ASSERT_EQ(r.code, exit_code::ok) << r.out.dump();
    EXPECT_EQ(r.out["r"], 0);
    EXPECT_EQ(r.out["f_ranks"], json::array({3}));
    EXPECT_TRUE(r.out["alpha_ranks"].empty());
}

TEST(Commands, BuildPresetRanks) {
    CommandResult r = cmd_build(preset("c10-example"));
    EXPECT_EQ(r.out["alpha_ranks"], json::array({2, 6, 9}));
    EXPECT_EQ(r.out["f_ranks"], json::array({5, 5, 5, 6}));
    EXPECT_EQ(r.out["formula_f_ranks"], r.out["f_ranks"]);
    EXPECT_TRUE(r.out["matching"]["ok"].get<bool>());
}

TEST(Commands, ExitCodes) {
    EXPECT_EQ(guarded([] { return cmd_build(preset("nope")); }).code, exit_code::parse_error);
    EXPECT_EQ(guarded([] { return cmd_build(inline_scenario("{")); }).code, exit_code::parse_error);
    // Column 1 sits in F0 at rows 0 and 1: not an F0-array.
    const char* bad = R"({"n":3,"k":1,"array":[[[1,0,0],[0,0,0],[0,0,0]],
                                              [[{"num":["0","1"]},0,0],[0,0,0],[0,0,0]]]})";
    CommandResult v = guarded([&] { return cmd_build(inline_scenario(bad)); });
    EXPECT_EQ(v.code, exit_code::pattern_violation) << v.out.dump();
    EXPECT_EQ(v.out["error"], "PatternViolation");
    EXPECT_EQ(guarded([] { return cmd_enumerate(4, 2, 5); }).code, exit_code::parse_error);
}

TEST(Commands, BoundTable) {
    CommandResult r = cmd_bound(5, 2);
    std::vector<long> expect = {3, 3, 1, 2, 3, 3};
    ASSERT_EQ(r.out["rows"].size(), expect.size());
    for (size_t k = 0; k < expect.size(); ++k) EXPECT_EQ(r.out["rows"][k]["r_k"], expect[k]) << k;
    EXPECT_EQ(r.out["rows"][0]["case"], "(i)");
    EXPECT_EQ(cmd_bound(8, 3).out["rows"][4]["r_k"], 3);
    // G_p(C^{2p}) at k = p: case (ii) with r_k = p - 1 for even p.
    json row = cmd_bound(8, 4).out["rows"][4];
    EXPECT_EQ(row["case"], "(ii)");
    EXPECT_EQ(row["r_k"], 3);
    EXPECT_TRUE(cmd_bound(5, 3).out["dualized"].get<bool>());
}

TEST(Commands, EnumerateAndDual) {
    CommandResult r = cmd_enumerate(5, 2, 3);
    EXPECT_EQ(r.out["Q_sign"], 1);
    EXPECT_EQ(r.out["pairs"].size(), 3u);
    CommandResult d = cmd_enumerate(5, 3, 3);
    EXPECT_EQ(d.out["Q_sign"], -1);
    ASSERT_EQ(d.out["pairs"].size(), 3u);
    for (size_t t = 0; t < 3; ++t) {
        const json& rec = d.out["pairs"][t];
        EXPECT_EQ(rec["Q_sign"], -1);
        EXPECT_EQ(rec["L"], rec["reduced"]["S"]);
        EXPECT_EQ(rec["S"], rec["reduced"]["L"]);
        EXPECT_EQ(rec["k"].get<size_t>() + rec["reduced"]["k"].get<size_t>(), 5u);
        json plain = r.out["pairs"][t];
        plain.erase("Q_sign");
        EXPECT_EQ(rec["reduced"], plain);
    }
}

TEST(Commands, VerifySubsetAndFailure) {
    RunOptions opt;
    opt.checks = {"unitary"};
    CommandResult r = cmd_verify(preset("u3-example"), opt);
    EXPECT_EQ(r.code, exit_code::ok);
    for (const auto& rep : r.out["reports"]) EXPECT_EQ(rep["check"].get<std::string>().rfind("unitary", 0), 0u);

    RunOptions exact_only;
    exact_only.checks = {"unitary", "splitting", "sij"};
    CommandResult b = cmd_verify(preset("broken-pattern"), exact_only);
    EXPECT_EQ(b.code, exit_code::check_failed);
    EXPECT_FALSE(b.out["pass"].get<bool>());
}

TEST(Commands, ModelOfSingleUniton) {
    // r = 1: W = alpha_1 at the point, one lambda-block.
    const char* text = R"({"n":3,"k":2,"array":[[[1,{"num":["0","1"]},0],[0,0,0],[0,0,0]]]})";
    CommandResult r = cmd_model(inline_scenario(text));
    ASSERT_EQ(r.code, exit_code::ok) << r.out.dump();
    EXPECT_EQ(r.out["model"]["blocks"], 1);
    EXPECT_EQ(r.out["model"]["dim"], 1);
    EXPECT_TRUE(r.out["equals_phi_hplus"].get<bool>());
}

TEST(Commands, RawModelNotShiftStable) {
    json raw = {{"n", 2},
                {"k", 1},
                {"blocks", 2},
                {"point", "1"},
                {"sections", json::array({json::array({json{{"num", {"0", "1"}}}, "0", "0", "0"})})}};
    CommandResult r = guarded([&] { return cmd_model_raw(raw); });
    EXPECT_EQ(r.code, exit_code::check_failed) << r.out.dump();
    EXPECT_TRUE(r.out["adapted"]["all"].get<bool>());
    EXPECT_FALSE(r.out["shift_stable"]["stable"].get<bool>());

    // W = span{e1, lambda e1} is closed under lambda modulo lambda^2.
    raw["sections"] = json::array({json::array({"1", "0", "0", "0"}), json::array({"0", "0", "1", "0"})});
    CommandResult ok = guarded([&] { return cmd_model_raw(raw); });
    EXPECT_EQ(ok.code, exit_code::ok) << ok.out.dump();
}
