#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "exactq/analysis.h"
#include "exactq/boolfn.h"
#include "exactq/compose.h"
#include "exactq/lowdeg.h"
#include "exactq/polynomial.h"
#include "exactq/qsim.h"

namespace exactq {

using Json = nlohmann::json;

/// Raised on malformed interchange documents.
class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// {"n": int, "table_hex": string}: table bits packed index 0 first, most significant bit of each
/// byte first, zero padded to a whole byte.
Json truth_table_to_json(const BooleanFunction &f);
BooleanFunction truth_table_from_json(const Json &j);

/// {"n": int, "terms": [{"mask": int, "num": string, "den": string}]}, masks ascending.
Json polynomial_to_json(const MultilinearPolynomial &p);
MultilinearPolynomial polynomial_from_json(const Json &j);

/// {"coeffs": [{"num": string, "den": string}]}, ascending power.
Json range_polynomial_to_json(const RangePolynomial &p);

/// {"dim", "n", "layers": [{"unitary": [[scalar]]} | {"query": [int|null]}], "outputs"}.
/// Exact entries are strings ("1/2", "-1/2 r2"); JSON numbers are accepted and make the matrix
/// floating-point only.
Json algorithm_to_json(const QueryAlgorithm &alg);
QueryAlgorithm algorithm_from_json(const Json &j);

Json amplitudes_to_json(const std::vector<ExactScalar> &amps);

Json complexity_report_to_json(const ComplexityReport &r);
Json construction_report_to_json(const ConstructionReport &r);
Json gap_report_to_json(const GapReport &r);

/// "builtin:<name>" (see named_function) or a path to a truth-table JSON file.
BooleanFunction load_function(std::string_view source);
/// "builtin:a1", "builtin:a2" or a path to an algorithm JSON file.
QueryAlgorithm load_algorithm(std::string_view source);

Json read_json_file(const std::string &path);

}  // namespace exactq
