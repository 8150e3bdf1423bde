#include "exactq/analysis.h"

#include <algorithm>

namespace exactq {

ComplexityReport analyze(const BooleanFunction &f, const AnalyzeOptions &opts) {
    ComplexityReport r;
    r.n = f.n();
    r.sensitivity = sensitivity(f);
    r.d_exact = deterministic_complexity(f, opts.d_cap);
    if (f.n() <= opts.interpolation_ceiling) {
        r.degree = degree_of(f, opts.interpolation_ceiling);
        r.degree_mode = "exact";
    } else {
        r.degree = degree_mod_p(f, opts.prime);
        r.degree_mode = "mod-p";
    }
    r.d_lower = std::max(r.sensitivity, r.degree);
    r.qe_lower = qe_lower_bound_from_degree(r.degree);
    r.complement_symmetric = complement_symmetric(f);
    return r;
}

}  // namespace exactq
