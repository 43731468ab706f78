#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
};

Outcome run(const std::string& args, bool stderr_too = false) {
    std::string cmd = std::string(UNITONCTL_PATH) + " " + args + (stderr_too ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    Outcome r;
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json golden(const std::string& name) {
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
    return json::parse(in);
}

std::string temp_file(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("unitonctl_" + name);
    std::ofstream(path) << text;
    return path.string();
}

const char* kPresets[] = {"u3-example",  "c10-example", "f0dim2-example", "g2c5-case-a",   "g2c5-case-b",
                          "g2c5-case-c", "g4c8-stay",   "g3c8-max",       "broken-pattern"};

}  // namespace

TEST(Cli, BuildMatchesGoldens) {
    for (const char* p : kPresets) {
        Outcome r = run(std::string("build --quiet --preset ") + p);
        ASSERT_EQ(r.code, 0) << p;
        EXPECT_EQ(json::parse(r.out), golden(std::string("build-") + p + ".json")) << p;
    }
}

TEST(Cli, BoundAndEnumerateMatchGoldens) {
    Outcome b = run("bound 5 2 --quiet");
    ASSERT_EQ(b.code, 0);
    EXPECT_EQ(json::parse(b.out), golden("bound-5-2.json"));
    Outcome e = run("enumerate 5 2 3 --quiet");
    ASSERT_EQ(e.code, 0);
    EXPECT_EQ(json::parse(e.out), golden("enumerate-5-2-3.json"));
    Outcome d = run("enumerate 5 3 3 --quiet");
    ASSERT_EQ(d.code, 0);
    EXPECT_EQ(json::parse(d.out), golden("enumerate-5-3-3.json"));
}

TEST(Cli, PresetOutputFeedsBack) {
    Outcome shown = run("preset g2c5-case-b --quiet");
    ASSERT_EQ(shown.code, 0);
    std::string file = temp_file("case_b.json", shown.out);
    Outcome r = run("build --quiet --scenario " + file);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out), golden("build-g2c5-case-b.json"));
}

TEST(Cli, SummaryGoesToStderr) {
    Outcome loud = run("build --preset u3-example", true);
    EXPECT_NE(loud.out.find("rank alpha_i = (1, 2)"), std::string::npos) << loud.out;
    Outcome quiet = run("build --preset u3-example --quiet", true);
    EXPECT_EQ(quiet.out.find("rank alpha_i"), std::string::npos);
    EXPECT_NO_THROW(json::parse(quiet.out));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("build --preset no-such-preset").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("build --scenario " + temp_file("syntax.json", "{\"n\": 3,")).code, 2);
    std::string violation = temp_file(
        "violation.json",
        R"({"n":3,"k":1,"array":[[[1,0,0],[0,0,0],[0,0,0]],[[{"num":["0","1"]},0,0],[0,0,0],[0,0,0]]]})");
    Outcome v = run("build --scenario " + violation);
    EXPECT_EQ(v.code, 3);
    EXPECT_EQ(json::parse(v.out)["error"], "PatternViolation");
    EXPECT_EQ(run("verify --preset broken-pattern --checks unitary,splitting,sij").code, 5);
    EXPECT_EQ(run("verify --preset g2c5-case-a --checks unitary,sij,rank_formula").code, 0);
    EXPECT_EQ(run("model --preset broken-pattern").code, 5);
    EXPECT_EQ(run("verify --preset u3-example --checks nonsense").code, 2);
}

TEST(Cli, EmptyArray) {
    Outcome r = run("build --quiet --scenario " + temp_file("r0.json", R"({"n":5,"k":3,"Q_sign":1,"array":[]})"));
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["f_ranks"], json::array({3}));
    EXPECT_EQ(j["r"], 0);
}
