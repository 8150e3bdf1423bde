#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "exactq/cli.h"
#include "exactq/json_io.h"

using exactq::Json;

namespace {

struct Result {
    int code;
    Json doc;
    std::string raw;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "exactq");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = exactq::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    // Exactly one JSON document on stdout.
    Json doc = Json::parse(out.str());
    return {code, doc, out.str()};
}

}  // namespace

TEST(CliAnalyze, Builtins) {
    auto r = run({"analyze", "builtin:F3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.doc["sensitivity"], 3);
    EXPECT_EQ(r.doc["d_exact"], 3);
    EXPECT_EQ(r.doc["degree"], 2);
    EXPECT_EQ(r.doc["qe_lower"], 1);
    EXPECT_EQ(r.doc["complement_symmetric"], true);
    EXPECT_EQ(run({"analyze", "builtin:G4"}).doc["d_exact"], 4);
    auto c = run({"analyze", "builtin:const0:3"});
    EXPECT_EQ(c.doc["sensitivity"], 0);
    EXPECT_EQ(c.doc["degree"], 0);
    EXPECT_TRUE(run({"analyze", "builtin:G4", "--dcap", "3"}).doc["d_exact"].is_null());
}

TEST(CliAnalyze, MalformedInputIsUsageError) {
    auto path = (std::filesystem::temp_directory_path() / "exactq_cli_bad.json").string();
    std::ofstream(path) << R"({"n": 3, "table_hex": "4"})";
    auto r = run({"analyze", path});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.doc.contains("error"));
    EXPECT_EQ(run({"analyze", "builtin:H7"}).code, 2);
    EXPECT_EQ(run({"analyze"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliAnalyze, EnvironmentDefaults) {
    ::setenv("EXACTQ_DCAP", "3", 1);
    EXPECT_TRUE(run({"analyze", "builtin:G4"}).doc["d_exact"].is_null());
    EXPECT_EQ(run({"analyze", "builtin:G4", "--dcap", "4"}).doc["d_exact"], 4);
    ::setenv("EXACTQ_DCAP", "many", 1);
    EXPECT_EQ(run({"analyze", "builtin:G4"}).code, 2);
    ::unsetenv("EXACTQ_DCAP");
    ::setenv("EXACTQ_INTERP_MAX", "3", 1);
    EXPECT_EQ(run({"analyze", "builtin:G4"}).doc["degree_mode"], "mod-p");
    ::unsetenv("EXACTQ_INTERP_MAX");
    EXPECT_EQ(run({"analyze", "builtin:G4"}).doc["degree_mode"], "exact");
}

TEST(CliSimulate, Examples) {
    auto r = run({"simulate", "--alg", "builtin:a1", "--input", "011"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.doc["amplitudes"], (Json{"0", "-1", "0", "0"}));
    EXPECT_EQ(r.doc["outcome"], 0);
    EXPECT_EQ(r.doc["probability"], "1");
    auto g = run({"simulate", "--alg", "builtin:a2", "--input", "0101"});
    EXPECT_EQ(g.doc["outcome"], 1);
    EXPECT_EQ(g.doc["probability"], "1");
    EXPECT_EQ(run({"simulate", "--alg", "builtin:a1", "--input", "00"}).code, 2);
    EXPECT_EQ(run({"simulate", "--alg", "builtin:a1", "--input", "0a1"}).code, 2);
    EXPECT_EQ(run({"simulate", "--alg", "builtin:zz", "--input", "011"}).code, 2);
}

TEST(CliSimulate, TraceAndFloat) {
    auto r = run({"simulate", "--alg", "builtin:a1", "--input", "011", "--trace"});
    ASSERT_EQ(r.doc["trace"].size(), 6u);
    EXPECT_EQ(r.doc["trace"][2], (Json{"1/2", "0", "-1/2 r2", "-1/2"}));
    auto f = run({"simulate", "--alg", "builtin:a1", "--input", "011", "--float"});
    EXPECT_EQ(f.code, 0);
    EXPECT_NEAR(f.doc["amplitudes"][1].get<double>(), -1.0, 1e-12);
    EXPECT_EQ(f.doc["outcome"], 0);
}

TEST(CliVerify, Suites) {
    auto t1 = run({"verify", "--suite", "table1"});
    EXPECT_EQ(t1.code, 0);
    EXPECT_EQ(t1.doc["pass"], true);
    EXPECT_EQ(run({"verify", "--suite", "a1"}).code, 0);
    auto l2 = run({"verify", "--suite", "lemma2:3"});
    EXPECT_EQ(l2.code, 0);
    bool found = false;
    for (const auto &c : l2.doc["checks"]) {
        if (c["name"] == "degree") {
            found = true;
            EXPECT_EQ(c["actual"], "4");
            EXPECT_EQ(c["pass"], true);
        }
    }
    EXPECT_TRUE(found);
    for (const char *name : {"table2", "a2", "relabel3", "relabel4", "compose", "example1", "lemma1"}) {
        EXPECT_EQ(run({"verify", "--suite", name}).code, 0) << name;
    }
    EXPECT_EQ(run({"verify", "--suite", "lemma3:3,2"}).code, 0);
    EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "lemma2:4"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "lemma3:3"}).code, 2);
    EXPECT_EQ(run({"verify"}).code, 2);
}

TEST(CliConstruct, Reports) {
    auto f9 = run({"construct", "--family", "f9", "--emit", "report"});
    EXPECT_EQ(f9.code, 0);
    EXPECT_EQ(f9.doc["status"], "confirmed");
    EXPECT_EQ(f9.doc["computed_degree"], 4);
    EXPECT_EQ(f9.doc["witness_sensitivity"], 9);
    auto f21 = run({"construct", "--family", "f3k:7"});
    EXPECT_EQ(f21.code, 0);
    EXPECT_EQ(f21.doc["computed_degree"], 12);
    auto spread = run({"construct", "--family", "spread3k:3"});
    EXPECT_EQ(spread.code, 1);
    EXPECT_EQ(spread.doc["status"], "refuted");
    auto f45 = run({"construct", "--family", "f45"});
    EXPECT_EQ(f45.code, 1);
    EXPECT_EQ(f45.doc["status"], "unverified");
    auto modp = run({"construct", "--family", "f9", "--mod-p", "65537"});
    EXPECT_EQ(modp.doc["degree_mode"], "mod-p");
    EXPECT_EQ(modp.doc["prime"], 65537);
    EXPECT_EQ(run({"construct", "--family", "f9", "--mod-p", "65536"}).code, 2);
    EXPECT_EQ(run({"construct", "--family", "f3k:4"}).code, 2);
    EXPECT_EQ(run({"construct", "--family", "f3k:x"}).code, 2);
    EXPECT_EQ(run({"construct", "--family", "lemma3:2,1"}).code, 2);
    EXPECT_EQ(run({"construct", "--family", "f9", "--emit", "pdf"}).code, 2);
}

TEST(CliConstruct, TableAndPolynomial) {
    auto t = run({"construct", "--family", "f9", "--emit", "table"});
    EXPECT_EQ(t.code, 0);
    EXPECT_EQ(t.doc["n"], 9);
    EXPECT_EQ(t.doc["table_hex"].get<std::string>().size(), 128u);
    EXPECT_EQ(exactq::truth_table_from_json(t.doc), exactq::build_f3k(3).materialize());
    auto p = run({"construct", "--family", "f12", "--emit", "poly"});
    EXPECT_EQ(p.code, 0);
    EXPECT_EQ(exactq::polynomial_from_json(p.doc).degree(), 6);
    EXPECT_EQ(run({"construct", "--family", "lemma3:3,1", "--emit", "table"}).code, 2);
    EXPECT_EQ(run({"construct", "--family", "f21", "--emit", "poly", "--exact-ceiling", "12"}).code, 2);
}

TEST(CliFitCollapser, Modes) {
    auto v = run({"fit-collapser", "--values", "1,0,0,1"});
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.doc["text"], "1/2*z^2 - 3/2*z + 1");
    EXPECT_EQ(v.doc["degree"], 2);
    auto k = run({"fit-collapser", "--k", "5"});
    EXPECT_EQ(k.doc["degree"], 4);
    EXPECT_EQ(k.doc["values"][0], 1);
    EXPECT_EQ(k.doc["values"][1], 0);
    auto ref = run({"fit-collapser", "--reference-7"});
    EXPECT_EQ(ref.doc["usable"], false);
    EXPECT_EQ(ref.doc["degree"], 6);
    EXPECT_EQ(ref.doc["values"], (Json{"0", "0", "0", "1", "1", "0", "0", "0"}));
    EXPECT_EQ(run({"fit-collapser"}).code, 2);
    EXPECT_EQ(run({"fit-collapser", "--k", "4"}).code, 2);
    EXPECT_EQ(run({"fit-collapser", "--values", "1,,0"}).code, 2);
    EXPECT_EQ(run({"fit-collapser", "--values", "1", "--k", "3"}).code, 2);
}

TEST(CliProperty, DeterministicOutput) {
    for (std::vector<std::string> args : {std::vector<std::string>{"analyze", "builtin:table2:5"},
                                          {"verify", "--suite", "relabel3"},
                                          {"construct", "--family", "f12"},
                                          {"simulate", "--alg", "builtin:a2", "--input", "1100", "--trace"}}) {
        EXPECT_EQ(run(args).raw, run(args).raw);
    }
}
