#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "exactq/json_io.h"

using namespace exactq;

namespace {

std::string temp_file(const std::string &name, const std::string &content) {
    auto path = std::filesystem::temp_directory_path() / ("exactq_json_io_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST(TruthTableJson, KnownEncodings) {
    // F3 is 1 on 001 and 110: bits 01000010.
    EXPECT_EQ(truth_table_to_json(named_function("F3")), (Json{{"n", 3}, {"table_hex", "42"}}));
    EXPECT_EQ(truth_table_to_json(xor_function(2)), (Json{{"n", 2}, {"table_hex", "60"}}));
    EXPECT_EQ(truth_table_to_json(named_function("G4"))["table_hex"], "0660");
    EXPECT_EQ(truth_table_from_json(Json{{"n", 4}, {"table_hex", "0660"}}), named_function("G4"));
    EXPECT_EQ(truth_table_from_json(Json{{"n", 4}, {"table_hex", "0660"}}),
              truth_table_from_json(Json{{"n", 4}, {"table_hex", "0660"}}));
}

TEST(TruthTableJson, Rejections) {
    EXPECT_THROW(truth_table_from_json(Json{{"n", 2}, {"table_hex", "61"}}), FormatError);
    EXPECT_THROW(truth_table_from_json(Json{{"n", 4}, {"table_hex", "066"}}), FormatError);
    EXPECT_THROW(truth_table_from_json(Json{{"n", 4}, {"table_hex", "06g0"}}), FormatError);
    EXPECT_THROW(truth_table_from_json(Json{{"n", 0}, {"table_hex", "00"}}), FormatError);
    EXPECT_THROW(truth_table_from_json(Json{{"n", 28}, {"table_hex", "00"}}), FormatError);
    EXPECT_THROW(truth_table_from_json(Json{{"table_hex", "00"}}), FormatError);
    EXPECT_THROW(truth_table_from_json(Json{{"n", "3"}, {"table_hex", "42"}}), FormatError);
    EXPECT_THROW(truth_table_from_json(Json::array()), FormatError);
}

TEST(TruthTableJsonProperty, RoundTrip) {
    std::mt19937_64 rng(601);
    for (int trial = 0; trial < 100; trial++) {
        int n = 1 + trial % 14;
        auto f = BooleanFunction::from_index_fn(n, [&](uint64_t) { return rng() & 1; });
        auto j = truth_table_to_json(f);
        EXPECT_EQ(j["table_hex"].get<std::string>().size(), std::max<size_t>(2, f.size() / 4));
        EXPECT_EQ(truth_table_from_json(Json::parse(j.dump())), f);
    }
}

TEST(PolynomialJson, RoundTrip) {
    auto p = interpolate(named_function("F3"));
    auto j = polynomial_to_json(p);
    EXPECT_EQ(j["n"], 3);
    EXPECT_EQ(j["terms"][0], (Json{{"mask", 1}, {"num", "1"}, {"den", "1"}}));
    EXPECT_EQ(polynomial_from_json(j), p);
    EXPECT_THROW(polynomial_from_json(Json::parse(R"({"n": 2, "terms": [{"mask": 4, "num": "1", "den": "1"}]})")),
                 FormatError);
    EXPECT_THROW(polynomial_from_json(Json::parse(R"({"n": 2, "terms": [{"mask": 1, "num": "1", "den": "0"}]})")),
                 FormatError);
    auto r = range_polynomial_to_json(find_collapser(3).polynomial);
    EXPECT_EQ(r["coeffs"][1], (Json{{"num", "-3"}, {"den", "2"}}));
}

TEST(AlgorithmJson, RoundTripBuiltins) {
    for (const auto &alg : {a1(), a2()}) {
        auto back = algorithm_from_json(Json::parse(algorithm_to_json(alg).dump()));
        EXPECT_TRUE(back.exact_arithmetic());
        EXPECT_EQ(back.query_count(), 2);
        EXPECT_EQ(back.outputs(), alg.outputs());
        for (uint64_t i = 0; i < (uint64_t{1} << alg.n()); i++) {
            auto x = InputAssignment::from_index(alg.n(), i);
            EXPECT_EQ(simulate(back, x).amplitudes, simulate(alg, x).amplitudes);
        }
    }
    auto j = algorithm_to_json(a1());
    EXPECT_EQ(j["layers"][0]["unitary"][0][0], "1/2");
    EXPECT_EQ(j["layers"][2]["unitary"][1][1], "1/2 r2");
    EXPECT_EQ(j["layers"][1]["query"], (Json{0, 1, 0, 1}));
}

TEST(AlgorithmJson, NumbersMakeFloatMatrices) {
    auto j = Json::parse(R"({"dim": 2, "n": 1, "outputs": [0, 1],
        "layers": [{"unitary": [[0.6, -0.8], [0.8, 0.6]]}, {"query": [0, null]}]})");
    auto alg = algorithm_from_json(j);
    EXPECT_FALSE(alg.exact_arithmetic());
    auto s = simulate_float(alg, InputAssignment::parse("1"));
    EXPECT_NEAR(s.outcome_prob[1], 0.64, 1e-12);
}

TEST(AlgorithmJson, Rejections) {
    for (const char *doc : {
             R"({"dim": 2, "n": 1, "layers": [], "outputs": [0]})",
             R"({"dim": 2, "n": 1, "layers": [{"swap": 1}], "outputs": [0, 1]})",
             R"({"dim": 2, "n": 1, "layers": [{"unitary": [["1", "x"], ["0", "1"]]}], "outputs": [0, 1]})",
             R"({"dim": 2, "n": 1, "layers": [{"unitary": [["1", "0"]]}], "outputs": [0, 1]})",
             R"({"dim": 2, "n": 1, "layers": [{"query": [0, 3]}], "outputs": [0, 1]})",
             R"({"dim": 2, "n": 1, "layers": [{"query": [0, "a"]}], "outputs": [0, 1]})",
             R"({"dim": 2, "n": 1, "layers": [], "outputs": [0, 2]})",
         }) {
        EXPECT_THROW(algorithm_from_json(Json::parse(doc)), FormatError) << doc;
    }
}

TEST(Loaders, BuiltinsAndFiles) {
    EXPECT_EQ(load_function("builtin:G4"), named_function("G4"));
    EXPECT_THROW(load_function("builtin:nope"), std::invalid_argument);
    auto path = temp_file("f3.json", R"({"n": 3, "table_hex": "42"})");
    EXPECT_EQ(load_function(path), named_function("F3"));
    auto bad = temp_file("bad.json", "{not json");
    EXPECT_THROW(load_function(bad), FormatError);
    EXPECT_THROW(load_function("/nonexistent/exactq.json"), FormatError);
    EXPECT_EQ(load_algorithm("builtin:a2").n(), 4);
    EXPECT_THROW(load_algorithm("builtin:a3"), std::invalid_argument);
    auto alg_path = temp_file("a1.json", algorithm_to_json(a1()).dump());
    EXPECT_TRUE(is_exact(load_algorithm(alg_path), named_function("F3")));
}

TEST(ReportJson, Fields) {
    auto c = complexity_report_to_json(analyze(named_function("F3")));
    EXPECT_EQ(c["sensitivity"], 3);
    EXPECT_EQ(c["d_exact"], 3);
    EXPECT_EQ(c["degree"], 2);
    EXPECT_EQ(c["qe_lower"], 1);
    EXPECT_EQ(c["complement_symmetric"], true);
    EXPECT_EQ(c["degree_mode"], "exact");
    auto big = complexity_report_to_json(analyze(xor_function(13)));
    EXPECT_TRUE(big["d_exact"].is_null());
    EXPECT_EQ(big["d_lower"], 13);

    auto r = construction_report_to_json(certify(build_f3k(3), CertifyMode::Exact));
    for (const char *key : {"n", "family", "params", "claimed_degree", "computed_degree", "degree_mode",
                            "witness_input", "witness_sensitivity", "status"}) {
        EXPECT_TRUE(r.contains(key)) << key;
    }
    EXPECT_FALSE(r.contains("prime"));
    auto g = gap_report_to_json(verify_gap(and_function(2), named_function("F3"), a1()));
    EXPECT_EQ(g, (Json{{"max_queries", 4}, {"d_exact", 6}, {"ratio_num", 2}, {"ratio_den", 3}, {"correct", true}}));
}
