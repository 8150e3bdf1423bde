#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "exactq/lowdeg.h"
#include "exactq/polynomial.h"

using namespace exactq;

namespace {

InputAssignment ones_at(int n, std::initializer_list<int> one_based) {
    auto x = InputAssignment::zeros(n);
    for (int v : one_based) {
        x.set(v - 1, true);
    }
    return x;
}

// Degree by direct inclusion-exclusion over subsets (no transform).
int naive_degree(const ConstructedFunction &cf) {
    std::vector<uint8_t> table(uint64_t{1} << cf.n());
    cf.for_each_value([&](uint64_t i, bool v) { table[i] = v; });
    int deg = 0;
    for (uint64_t s = 0; s < table.size(); s++) {
        if (std::popcount(s) <= deg) {
            continue;
        }
        int64_t c = 0;
        for (uint64_t t = s;; t = (t - 1) & s) {
            c += ((std::popcount(s) - std::popcount(t)) % 2 ? -1 : 1) * table[t];
            if (t == 0) {
                break;
            }
        }
        if (c != 0) {
            deg = std::popcount(s);
        }
    }
    return deg;
}

int direct_sensitivity(const ConstructedFunction &cf, InputAssignment x) {
    bool v = cf(x);
    int s = 0;
    for (int i = 0; i < cf.n(); i++) {
        x.flip(i);
        s += cf(x) != v;
        x.flip(i);
    }
    return s;
}

int p4_formula(int a, int b, int c, int d) {
    return a * b + b * c + c * d + a * d - (a * b * c + a * b * d + a * c * d + b * c * d);
}

// Each index triangle {j, k+j, 2k+j} contributes 1 unless it is all-0 or all-1.
int triangle_value(const std::vector<uint8_t> &bits, int k) {
    int p = 0;
    for (int j = 0; j < k; j++) {
        int w = bits[j] + bits[k + j] + bits[2 * k + j];
        p += (w == 1 || w == 2);
    }
    return p;
}

InputAssignment random_input(int n, std::mt19937_64 &rng) {
    std::vector<uint8_t> bits(n);
    for (auto &b : bits) {
        b = rng() & 1;
    }
    return InputAssignment(bits);
}

}  // namespace

TEST(Connection, Examples) {
    auto part = GroupPartition::contiguous(3, 3, 3);
    auto fig = ones_at(9, {1, 2, 5, 6, 7});
    auto w = sorted_group_weights(fig, part);
    EXPECT_EQ(w.weight, (std::array<int, 3>{2, 2, 1}));
    EXPECT_EQ(connection_value(fig, part), 1);
    EXPECT_EQ(connection_pairs(fig, part).size(), 4u);
    EXPECT_EQ(connection_value(InputAssignment::zeros(9), part), 0);
    EXPECT_TRUE(connection_pairs(InputAssignment::zeros(9), part).empty());
    EXPECT_EQ(connection_value(InputAssignment::ones(9), part), 0);
    auto tri = ones_at(9, {2, 4, 9});
    EXPECT_EQ(connection_pairs(tri, part), (std::vector<std::pair<int, int>>{{1, 3}, {1, 8}, {3, 8}}));
    EXPECT_THROW(connection_value(InputAssignment::zeros(8), part), std::invalid_argument);
    EXPECT_THROW(GroupPartition({0, 1, 1}), std::invalid_argument);
    EXPECT_THROW(GroupPartition({0, 1, 3}), std::invalid_argument);
}

TEST(ConnectionProperty, LemmaOneBoundsAndIdentity) {
    std::mt19937_64 rng(501);
    auto check = [](const InputAssignment &x, const GroupPartition &part) {
        std::array<int, 3> w{};
        for (int v = 0; v < x.n(); v++) {
            w[part.group_of(v)] += x[v];
        }
        std::sort(w.begin(), w.end());
        int value = connection_value(x, part);
        auto pairs = connection_pairs(x, part);
        ASSERT_EQ(value, w[2] - w[0]);
        ASSERT_GE(value, 0);
        ASSERT_LE(value, part.largest_size());
        ASSERT_EQ(static_cast<int>(pairs.size()), 2 * w[0] + w[1]);
        ASSERT_EQ(hamming_weight(x) - static_cast<int>(pairs.size()), value);
        std::set<std::pair<int, int>> partner;
        for (auto [a, b] : pairs) {
            ASSERT_LT(a, b);
            ASSERT_TRUE(x[a] && x[b]);
            ASSERT_NE(part.group_of(a), part.group_of(b));
            ASSERT_TRUE(partner.insert({a, part.group_of(b)}).second);
            ASSERT_TRUE(partner.insert({b, part.group_of(a)}).second);
        }
    };
    for (int trial = 0; trial < 1000; trial++) {
        std::vector<int> groups{0, 1, 2};
        int extra = rng() % 10;
        for (int i = 0; i < extra; i++) {
            groups.push_back(rng() % 3);
        }
        std::shuffle(groups.begin(), groups.end(), rng);
        GroupPartition part(groups);
        check(random_input(part.n(), rng), part);
    }
    // Exhaustive up to 12 variables on a few unequal partitions.
    for (auto sizes : {std::array<int, 3>{3, 3, 3}, {5, 4, 3}, {1, 1, 10}, {2, 6, 4}}) {
        auto part = GroupPartition::contiguous(sizes[0], sizes[1], sizes[2]);
        for (uint64_t i = 0; i < (uint64_t{1} << part.n()); i++) {
            check(InputAssignment::from_index(part.n(), i), part);
        }
    }
}

TEST(MatchedPairs, DegreeTwoValue) {
    EXPECT_EQ(matched_pairs(3).size(), 9u);
    std::mt19937_64 rng(502);
    for (int k : {3, 5, 7}) {
        auto pairs = matched_pairs(k);
        for (int trial = 0; trial < 200; trial++) {
            auto x = random_input(3 * k, rng);
            int both = 0;
            for (auto [a, b] : pairs) {
                both += x[a] && x[b];
            }
            int v = matched_connection_value(x.bits(), k);
            ASSERT_EQ(v, hamming_weight(x) - both);
            ASSERT_EQ(v, triangle_value(x.bits(), k));
            ASSERT_GE(v, 0);
            ASSERT_LE(v, k);
        }
    }
}

TEST(P4, ExamplesAndRange) {
    std::array<uint8_t, 4> z{0, 0, 0, 0}, o{1, 1, 1, 1}, m{0, 1, 1, 1};
    EXPECT_EQ(p4_eval(z), 0);
    EXPECT_EQ(p4_eval(o), 0);
    EXPECT_EQ(p4_eval(m), 1);
    for (int i = 0; i < 16; i++) {
        std::array<uint8_t, 4> b{uint8_t(i >> 3 & 1), uint8_t(i >> 2 & 1), uint8_t(i >> 1 & 1), uint8_t(i & 1)};
        int p = p4_eval(b);
        EXPECT_EQ(p, p4_formula(b[0], b[1], b[2], b[3]));
        EXPECT_TRUE(p == 0 || p == 1);
    }
    auto p4 = build_p4();
    EXPECT_EQ(naive_degree(p4), 3);
    EXPECT_EQ(direct_sensitivity(p4, InputAssignment::ones(4)), 4);
}

TEST(F3k, Claims) {
    for (int k : {3, 5, 7}) {
        auto cf = build_f3k(k);
        EXPECT_EQ(cf.n(), 3 * k);
        EXPECT_EQ(cf.claimed_degree(), 2 * (k - 1));
        EXPECT_EQ(cf.claimed_d(), 3 * k);
        EXPECT_EQ(cf.witness(), InputAssignment::zeros(3 * k));
        EXPECT_EQ(cf.family(), "f3k");
    }
    EXPECT_THROW(build_f3k(4), std::invalid_argument);
    EXPECT_THROW(build_f3k(17), std::invalid_argument);
}

TEST(F3k, NineVariableInstance) {
    auto f9 = build_f3k(3);
    const int values[4] = {1, 0, 0, 1};
    for (uint64_t i = 0; i < 512; i++) {
        auto x = InputAssignment::from_index(9, i);
        ASSERT_EQ(f9(x), values[triangle_value(x.bits(), 3)] != 0) << x.str();
    }
    EXPECT_TRUE(f9(InputAssignment::zeros(9)));
    EXPECT_EQ(direct_sensitivity(f9, InputAssignment::zeros(9)), 9);
    EXPECT_EQ(naive_degree(f9), 4);
    auto rep = certify(f9, CertifyMode::Exact);
    EXPECT_EQ(rep.computed_degree, 4);
    EXPECT_EQ(rep.witness_input, "000000000");
    EXPECT_EQ(rep.witness_sensitivity, 9);
    EXPECT_EQ(rep.status, "confirmed");
    EXPECT_EQ(rep.qe_lower, 2);
    auto modp = certify(f9, CertifyMode::ModP);
    EXPECT_EQ(modp.computed_degree, 4);
    EXPECT_EQ(modp.prime, 1000003u);
    EXPECT_FALSE(modp.retried);
}

TEST(F3k, FifteenVariableInstance) {
    auto f15 = build_f3k(5);
    EXPECT_EQ(naive_degree(f15), 8);
    EXPECT_EQ(direct_sensitivity(f15, InputAssignment::zeros(15)), 15);
    EXPECT_EQ(certify(f15, CertifyMode::Exact).status, "confirmed");
}

TEST(F3k, SevenUsesSearchedCollapser) {
    auto choice = choose_collapser(7);
    EXPECT_EQ(choice.source, "search");
    EXPECT_EQ(choice.values, find_collapser(7).values);
    EXPECT_FALSE(choice.note.empty());
    auto f21 = build_f3k(7);
    EXPECT_EQ(sensitivity_at(f21, InputAssignment::zeros(21)), 21);
    EXPECT_EQ(choose_collapser(3).values, (std::vector<int>{1, 0, 0, 1}));
}

TEST(F3kProperty, GroupAndPositionPermutationInvariance) {
    std::mt19937_64 rng(503);
    for (int k : {3, 5, 7}) {
        auto cf = build_f3k(k);
        for (int trial = 0; trial < 300; trial++) {
            auto x = random_input(3 * k, rng);
            std::array<int, 3> gperm{0, 1, 2};
            std::shuffle(gperm.begin(), gperm.end(), rng);
            std::vector<int> pos(k);
            std::iota(pos.begin(), pos.end(), 0);
            std::shuffle(pos.begin(), pos.end(), rng);
            std::vector<uint8_t> y(3 * k);
            for (int g = 0; g < 3; g++) {
                for (int j = 0; j < k; j++) {
                    y[gperm[g] * k + pos[j]] = x[g * k + j];
                }
            }
            ASSERT_EQ(cf(x), cf(InputAssignment(y)));
        }
    }
}

TEST(Spread3kProperty, DependsOnlyOnSortedWeights) {
    std::mt19937_64 rng(504);
    auto cf = build_spread3k(3);
    for (int trial = 0; trial < 500; trial++) {
        auto x = random_input(9, rng);
        std::vector<uint8_t> y = x.bits();
        for (int g = 0; g < 3; g++) {
            std::shuffle(y.begin() + 3 * g, y.begin() + 3 * g + 3, rng);
        }
        ASSERT_EQ(cf(x), cf(InputAssignment(y)));
    }
    // The spread construction has higher degree than claimed.
    auto rep = certify(cf, CertifyMode::Exact);
    EXPECT_EQ(rep.computed_degree, 8);
    EXPECT_EQ(rep.status, "refuted");
}

TEST(F12, ClaimsAndCertificate) {
    auto f12 = build_f12();
    EXPECT_EQ(f12.n(), 12);
    EXPECT_EQ(f12.claimed_degree(), 6);
    EXPECT_EQ(f12.claimed_d(), 12);
    EXPECT_TRUE(f12(InputAssignment::ones(12)));
    EXPECT_EQ(direct_sensitivity(f12, InputAssignment::ones(12)), 12);
    EXPECT_EQ(naive_degree(f12), 6);
    auto rep = certify(f12, CertifyMode::Exact);
    EXPECT_EQ(rep.computed_degree, 6);
    EXPECT_EQ(rep.witness_input, "111111111111");
    EXPECT_EQ(rep.status, "confirmed");
}

TEST(IterateTriple, P4OneLevelIsF12) {
    auto it = iterate_triple(build_p4(), 1);
    auto f12 = build_f12();
    EXPECT_EQ(it.n(), 12);
    EXPECT_EQ(it.claimed_degree(), 6);
    EXPECT_EQ(it.claimed_d(), 12);
    for (uint64_t i = 0; i < 4096; i++) {
        auto x = InputAssignment::from_index(12, i);
        ASSERT_EQ(it(x), f12(x));
    }
    EXPECT_THROW(iterate_triple(build_p4(), 0), std::invalid_argument);
}

TEST(IterateTriple, LemmaThreeInstances) {
    auto l31 = build_lemma3(3, 1);
    EXPECT_EQ(l31.n(), 27);
    EXPECT_EQ(l31.claimed_degree(), 8);
    EXPECT_EQ(l31.claimed_d(), 27);
    EXPECT_EQ(l31.witness(), InputAssignment::zeros(27));
    EXPECT_NE(std::find(l31.notes().begin(), l31.notes().end(), "statement/proof range discrepancy"), l31.notes().end());
    EXPECT_EQ(sensitivity_at(l31, l31.witness()), 27);

    auto l32 = build_lemma3(3, 2);
    EXPECT_EQ(l32.n(), 81);
    EXPECT_EQ(l32.claimed_degree(), 16);
    EXPECT_TRUE(std::find(l32.notes().begin(), l32.notes().end(), "statement/proof range discrepancy") ==
                l32.notes().end());
    EXPECT_EQ(sensitivity_at(l32, l32.witness()), 81);

    // Two levels over f9 agree with nesting the level rule by hand.
    std::mt19937_64 rng(505);
    auto f9 = build_f3k(3);
    const int s[4] = {1, 0, 0, 1};
    for (int trial = 0; trial < 300; trial++) {
        auto x = random_input(81, rng);
        int outer = 0;
        for (int a = 0; a < 3; a++) {
            int inner = 0;
            for (int b = 0; b < 3; b++) {
                std::vector<uint8_t> block(x.bits().begin() + 27 * a + 9 * b, x.bits().begin() + 27 * a + 9 * b + 9);
                inner += f9(InputAssignment(block));
            }
            outer += s[inner];
        }
        ASSERT_EQ(l32(x), s[outer] != 0);
    }
}

TEST(Lemma3Params, Arithmetic) {
    auto p = lemma3_params(3, 1);
    EXPECT_EQ(p.variables, 27u);
    EXPECT_EQ(p.claimed_degree, 8u);
    EXPECT_EQ(p.ratio, Rational(27, 8));
    EXPECT_EQ(p.display_ratio, Rational(9, 4));
    p = lemma3_params(3, 2);
    EXPECT_EQ(p.variables, 81u);
    EXPECT_EQ(p.claimed_degree, 16u);
    p = lemma3_params(5, 1);
    EXPECT_EQ(p.variables, 45u);
    EXPECT_EQ(p.claimed_degree, 16u);
    EXPECT_THROW(lemma3_params(4, 1), std::invalid_argument);
    EXPECT_THROW(lemma3_params(1, 1), std::invalid_argument);
    EXPECT_THROW(lemma3_params(3, 0), std::invalid_argument);
}

TEST(Certify, StructuralBeyondScope) {
    auto f45 = build_f3k(15);
    auto rep = certify(f45, CertifyMode::Structural);
    EXPECT_FALSE(rep.computed_degree.has_value());
    EXPECT_EQ(rep.reason, "n=45 exceeds brute-force scope");
    EXPECT_EQ(rep.claimed_degree, 28);
    EXPECT_EQ(rep.claimed_d, 45);
    EXPECT_EQ(rep.status, "unverified");
    EXPECT_EQ(rep.witness_sensitivity, 45);
    auto mp = certify(f45, CertifyMode::ModP);
    EXPECT_FALSE(mp.computed_degree.has_value());
    auto ex = certify(build_f3k(9), CertifyMode::Exact);
    EXPECT_FALSE(ex.computed_degree.has_value());
    EXPECT_EQ(ex.status, "unverified");
}

TEST(ConstructedFunction, Materialize) {
    auto f9 = build_f3k(3);
    auto table = f9.materialize();
    for (uint64_t i = 0; i < 512; i++) {
        ASSERT_EQ(table.at(i), f9(InputAssignment::from_index(9, i)));
    }
    EXPECT_EQ(degree_of(table), 4);
    EXPECT_THROW(build_lemma3(3, 1).materialize(), std::length_error);
    EXPECT_THROW(f9(InputAssignment::zeros(8)), std::invalid_argument);
}
