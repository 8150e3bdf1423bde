#pragma once

#include <optional>
#include <string>

#include "exactq/boolfn.h"
#include "exactq/polynomial.h"

namespace exactq {

struct ComplexityReport {
    int n = 0;
    int sensitivity = 0;
    /// Present iff n <= the decision-tree cap.
    std::optional<int> d_exact;
    /// max(sensitivity, degree).
    int d_lower = 0;
    int degree = 0;
    /// "exact", or "mod-p" when n exceeds the interpolation ceiling.
    std::string degree_mode;
    /// ⌈degree / 2⌉.
    int qe_lower = 0;
    bool complement_symmetric = false;
};

struct AnalyzeOptions {
    int d_cap = kDefaultDCap;
    int interpolation_ceiling = kDefaultInterpolationCeiling;
    uint64_t prime = 1000003;
};

ComplexityReport analyze(const BooleanFunction &f, const AnalyzeOptions &opts = {});

}  // namespace exactq
