#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "exactq/boolfn.h"

namespace exactq {

struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;
    /// Observations that are recorded but not judged.
    std::vector<std::string> notes;
    bool pass = false;
};

/// Runs one named suite: table1, table2, a1, a2, relabel3, relabel4, compose, lemma1, lemma2:k,
/// example1, lemma3:k,t, inequalities. Throws std::invalid_argument on an unknown name or bad
/// parameters.
SuiteReport run_suite(std::string_view name);

std::vector<std::string> suite_names();

/// All 2^(2^(n-1)) complement-symmetric functions on n variables, in table order.
std::vector<BooleanFunction> all_complement_symmetric(int n);

/// Connection-value property checks over `samples` random partitions/inputs plus every 9-variable input
/// on three equal groups. Each violated property becomes a failing check.
SuiteReport lemma1_properties(int samples, uint64_t seed);

/// s <= D, deg <= D and qe_lower == ⌈deg/2⌉ over `samples` random functions with n in 3..10.
SuiteReport inequality_properties(int samples, uint64_t seed);

}  // namespace exactq
