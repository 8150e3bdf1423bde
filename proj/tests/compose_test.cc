#include <gtest/gtest.h>

#include <random>

#include "exactq/compose.h"

using namespace exactq;

namespace {

BooleanFunction random_function(int n, std::mt19937_64 &rng) {
    return BooleanFunction::from_index_fn(n, [&](uint64_t) { return rng() & 1; });
}

}  // namespace

TEST(DecisionTree, Examples) {
    EXPECT_EQ(build_decision_tree(and_function(2)).depth(), 2);
    EXPECT_EQ(build_decision_tree(projection_function(1, 0)).depth(), 1);
    EXPECT_EQ(build_decision_tree(projection_function(4, 2)).depth(), 1);
    EXPECT_EQ(build_decision_tree(xor_function(3)).depth(), 3);
    EXPECT_EQ(build_decision_tree(constant_function(3, true)).depth(), 0);
    EXPECT_THROW(build_decision_tree(xor_function(13)), std::length_error);
}

TEST(DecisionTreeProperty, OptimalAndCorrect) {
    std::mt19937_64 rng(401);
    for (int trial = 0; trial < 80; trial++) {
        int n = 1 + trial % 8;
        auto h = random_function(n, rng);
        auto tree = build_decision_tree(h);
        EXPECT_EQ(tree.depth(), deterministic_complexity(h).value());
        EXPECT_TRUE(tree.read_once_paths());
        for (uint64_t i = 0; i < h.size(); i++) {
            auto x = InputAssignment::from_index(n, i);
            ASSERT_EQ(tree.evaluate(x), h.at(i));
        }
    }
}

TEST(Hybrid, Examples) {
    auto f3 = named_function("F3");
    HybridAlgorithm hy(build_decision_tree(and_function(2)), a1(), f3);
    auto r = hybrid_evaluate(hy, InputAssignment::parse("001001"));
    EXPECT_TRUE(r.value);
    EXPECT_EQ(r.queries_used, 4);
    r = hybrid_evaluate(hy, InputAssignment::parse("000111"));
    EXPECT_FALSE(r.value);
    EXPECT_EQ(r.queries_used, 2);
    EXPECT_THROW(hybrid_evaluate(hy, InputAssignment::parse("00100")), std::invalid_argument);

    HybridAlgorithm single(build_decision_tree(projection_function(1, 0)), a2(), named_function("G4"));
    r = hybrid_evaluate(single, InputAssignment::parse("0101"));
    EXPECT_TRUE(r.value);
    EXPECT_EQ(r.queries_used, 2);
}

TEST(Hybrid, Rejections) {
    auto f3 = named_function("F3");
    EXPECT_THROW(HybridAlgorithm(build_decision_tree(and_function(2)), a1(), f3.negated()), std::invalid_argument);
    EXPECT_THROW(HybridAlgorithm(build_decision_tree(projection_function(2, 0)), a1(), f3), std::invalid_argument);
}

TEST(VerifyGap, Table1WithAnd2) {
    for (int i = 1; i <= 8; i++) {
        auto f = named_function("table1:" + std::to_string(i));
        auto rep = verify_gap(and_function(2), f, relabel_outputs(a1(), f));
        EXPECT_TRUE(rep.correct) << i;
        EXPECT_EQ(rep.max_queries, 4) << i;
        EXPECT_EQ(rep.d_exact, 6) << i;
        EXPECT_EQ(rep.ratio, Rational(2, 3)) << i;
        EXPECT_TRUE(rep.query_multiples) << i;
        EXPECT_EQ(rep.inner_queries, 2);
        EXPECT_EQ(rep.outer_depth, 2);
    }
}

TEST(VerifyGap, Table2WithAnd2) {
    for (int i = 1; i <= 8; i++) {
        auto g = named_function("table2:" + std::to_string(i));
        auto rep = verify_gap(and_function(2), g, relabel_outputs(a2(), g));
        EXPECT_TRUE(rep.correct) << i;
        EXPECT_EQ(rep.max_queries, 4) << i;
        EXPECT_EQ(rep.d_exact, 8) << i;
        EXPECT_EQ(rep.ratio, Rational(1, 2)) << i;
        EXPECT_TRUE(rep.query_multiples) << i;
    }
}

TEST(VerifyGap, DegenerateOuter) {
    auto rep = verify_gap(projection_function(1, 0), named_function("F3"), a1());
    EXPECT_TRUE(rep.correct);
    EXPECT_EQ(rep.max_queries, 2);
    EXPECT_EQ(rep.d_exact, 3);
    EXPECT_EQ(rep.ratio, Rational(2, 3));
    EXPECT_THROW(verify_gap(and_function(4), named_function("G4"), a2()), std::length_error);
}

TEST(VerifyGapProperty, FullDepthOuterFunctions) {
    // Outer functions with D(h) = n: parities and ANDs/ORs of 1..3 variables.
    std::vector<BooleanFunction> outers{xor_function(2), xor_function(3), and_function(3), and_function(2).negated()};
    auto f3 = named_function("F3");
    for (const auto &h : outers) {
        auto rep = verify_gap(h, f3, a1());
        EXPECT_TRUE(rep.correct);
        EXPECT_EQ(rep.max_queries, 2 * h.n());
        EXPECT_TRUE(rep.query_multiples);
        EXPECT_EQ(rep.d_exact, 3 * h.n());
    }
}
