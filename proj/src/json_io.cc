#include "exactq/json_io.h"

#include <fstream>
#include <sstream>

namespace exactq {

namespace {

constexpr std::string_view kBuiltinPrefix = "builtin:";

Json rational_json(const Rational &q) {
    return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() ||
        !j["den"].is_string()) {
        throw FormatError("rational must be {\"num\": string, \"den\": string}");
    }
    try {
        return parse_rational(j["num"].get<std::string>() + "/" + j["den"].get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
    }
    return -1;
}

int require_int(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
        throw FormatError(std::string("missing integer field '") + key + "'");
    }
    return j[key].get<int>();
}

}  // namespace

Json truth_table_to_json(const BooleanFunction &f) {
    const uint64_t bytes = std::max<uint64_t>(1, f.size() / 8);
    static const char *digits = "0123456789abcdef";
    std::string hex;
    hex.reserve(bytes * 2);
    for (uint64_t b = 0; b < bytes; b++) {
        unsigned byte = 0;
        for (int k = 0; k < 8; k++) {
            uint64_t i = b * 8 + k;
            if (i < f.size() && f.at(i)) {
                byte |= 0x80u >> k;
            }
        }
        hex.push_back(digits[byte >> 4]);
        hex.push_back(digits[byte & 15]);
    }
    return Json{{"n", f.n()}, {"table_hex", hex}};
}

BooleanFunction truth_table_from_json(const Json &j) {
    int n = require_int(j, "n");
    if (n < 1 || n > kMaxTableVariables) {
        throw FormatError("n must be in 1.." + std::to_string(kMaxTableVariables));
    }
    if (!j.contains("table_hex") || !j["table_hex"].is_string()) {
        throw FormatError("missing string field 'table_hex'");
    }
    const auto &hex = j["table_hex"].get_ref<const std::string &>();
    BooleanFunction f(n);
    const uint64_t bytes = std::max<uint64_t>(1, f.size() / 8);
    if (hex.size() != bytes * 2) {
        throw FormatError("table_hex must hold " + std::to_string(bytes * 2) + " hex digits");
    }
    for (uint64_t b = 0; b < bytes; b++) {
        int hi = hex_digit(hex[2 * b]);
        int lo = hex_digit(hex[2 * b + 1]);
        if (hi < 0 || lo < 0) {
            throw FormatError("table_hex contains a non-hex character");
        }
        unsigned byte = static_cast<unsigned>(hi * 16 + lo);
        for (int k = 0; k < 8; k++) {
            uint64_t i = b * 8 + k;
            bool bit = (byte >> (7 - k)) & 1;
            if (i < f.size()) {
                f.set(i, bit);
            } else if (bit) {
                throw FormatError("padding bits in table_hex must be zero");
            }
        }
    }
    return f;
}

Json polynomial_to_json(const MultilinearPolynomial &p) {
    Json terms = Json::array();
    for (const auto &[mask, c] : p.terms()) {
        Json t = rational_json(c);
        t["mask"] = mask;
        terms.push_back(std::move(t));
    }
    return Json{{"n", p.n()}, {"terms", std::move(terms)}};
}

MultilinearPolynomial polynomial_from_json(const Json &j) {
    int n = require_int(j, "n");
    if (n < 1 || n > 63) {
        throw FormatError("n out of range");
    }
    if (!j.contains("terms") || !j["terms"].is_array()) {
        throw FormatError("missing array field 'terms'");
    }
    MultilinearPolynomial p(n);
    for (const auto &t : j["terms"]) {
        if (!t.contains("mask") || !t["mask"].is_number_unsigned()) {
            throw FormatError("term mask must be a non-negative integer");
        }
        uint64_t mask = t["mask"].get<uint64_t>();
        if (n < 64 && (mask >> n) != 0) {
            throw FormatError("term mask names a variable beyond n");
        }
        p.add_term(mask, rational_from_json(t));
    }
    return p;
}

Json range_polynomial_to_json(const RangePolynomial &p) {
    Json coeffs = Json::array();
    for (const auto &c : p.coeffs()) {
        coeffs.push_back(rational_json(c));
    }
    return Json{{"coeffs", std::move(coeffs)}};
}

Json algorithm_to_json(const QueryAlgorithm &alg) {
    Json layers = Json::array();
    for (const auto &layer : alg.layers()) {
        if (const auto *u = std::get_if<UnitaryMatrix>(&layer)) {
            Json rows = Json::array();
            for (size_t r = 0; r < u->dim(); r++) {
                Json row = Json::array();
                for (size_t c = 0; c < u->dim(); c++) {
                    if (u->is_exact()) {
                        row.push_back(u->at(r, c).str());
                    } else {
                        row.push_back(u->approx(r, c));
                    }
                }
                rows.push_back(std::move(row));
            }
            layers.push_back(Json{{"unitary", std::move(rows)}});
        } else {
            Json q = Json::array();
            for (const auto &v : std::get<QueryLayer>(layer).assignment) {
                q.push_back(v ? Json(*v) : Json(nullptr));
            }
            layers.push_back(Json{{"query", std::move(q)}});
        }
    }
    return Json{{"dim", alg.dim()}, {"n", alg.n()}, {"layers", std::move(layers)}, {"outputs", alg.outputs()}};
}

QueryAlgorithm algorithm_from_json(const Json &j) {
    int dim = require_int(j, "dim");
    int n = require_int(j, "n");
    if (dim < 1 || dim > 4096 || n < 1 || n > kMaxTableVariables) {
        throw FormatError("dim or n out of range");
    }
    if (!j.contains("layers") || !j["layers"].is_array()) {
        throw FormatError("missing array field 'layers'");
    }
    std::vector<Layer> layers;
    for (const auto &l : j["layers"]) {
        if (l.contains("unitary")) {
            const auto &rows = l["unitary"];
            if (!rows.is_array() || rows.size() != static_cast<size_t>(dim)) {
                throw FormatError("unitary must have dim rows");
            }
            bool exact = true;
            for (const auto &row : rows) {
                if (!row.is_array() || row.size() != static_cast<size_t>(dim)) {
                    throw FormatError("unitary rows must have dim entries");
                }
                for (const auto &e : row) {
                    if (e.is_number()) {
                        exact = false;
                    } else if (!e.is_string()) {
                        throw FormatError("matrix entries must be strings or numbers");
                    }
                }
            }
            if (exact) {
                std::vector<ExactScalar> entries;
                for (const auto &row : rows) {
                    for (const auto &e : row) {
                        try {
                            entries.push_back(ExactScalar::parse(e.get<std::string>()));
                        } catch (const std::invalid_argument &err) {
                            throw FormatError(err.what());
                        }
                    }
                }
                layers.emplace_back(UnitaryMatrix(dim, std::move(entries)));
            } else {
                std::vector<double> entries;
                for (const auto &row : rows) {
                    for (const auto &e : row) {
                        entries.push_back(e.is_number() ? e.get<double>()
                                                        : ExactScalar::parse(e.get<std::string>()).to_double());
                    }
                }
                layers.emplace_back(UnitaryMatrix::from_doubles(dim, std::move(entries)));
            }
        } else if (l.contains("query")) {
            const auto &q = l["query"];
            if (!q.is_array()) {
                throw FormatError("query must be an array");
            }
            QueryLayer layer;
            for (const auto &v : q) {
                if (v.is_null()) {
                    layer.assignment.emplace_back(std::nullopt);
                } else if (v.is_number_integer()) {
                    layer.assignment.emplace_back(v.get<int>());
                } else {
                    throw FormatError("query entries must be integers or null");
                }
            }
            layers.emplace_back(std::move(layer));
        } else {
            throw FormatError("layer must hold 'unitary' or 'query'");
        }
    }
    if (!j.contains("outputs") || !j["outputs"].is_array()) {
        throw FormatError("missing array field 'outputs'");
    }
    std::vector<uint8_t> outputs;
    for (const auto &o : j["outputs"]) {
        if (!o.is_number_integer()) {
            throw FormatError("outputs must be 0 or 1");
        }
        outputs.push_back(static_cast<uint8_t>(o.get<int>()));
    }
    try {
        return QueryAlgorithm(dim, n, std::move(layers), std::move(outputs));
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
}

Json amplitudes_to_json(const std::vector<ExactScalar> &amps) {
    Json a = Json::array();
    for (const auto &v : amps) {
        a.push_back(v.str());
    }
    return a;
}

Json complexity_report_to_json(const ComplexityReport &r) {
    return Json{
        {"n", r.n},
        {"sensitivity", r.sensitivity},
        {"d_exact", r.d_exact ? Json(*r.d_exact) : Json(nullptr)},
        {"d_lower", r.d_lower},
        {"degree", r.degree},
        {"degree_mode", r.degree_mode},
        {"qe_lower", r.qe_lower},
        {"complement_symmetric", r.complement_symmetric},
    };
}

Json construction_report_to_json(const ConstructionReport &r) {
    Json j{
        {"n", r.n},
        {"family", r.family},
        {"params", r.params},
        {"claimed_degree", r.claimed_degree},
        {"claimed_d", r.claimed_d},
        {"computed_degree", r.computed_degree ? Json(*r.computed_degree) : Json(nullptr)},
        {"degree_mode", r.degree_mode},
        {"witness_input", r.witness_input},
        {"witness_sensitivity", r.witness_sensitivity},
        {"qe_lower", r.qe_lower},
        {"status", r.status},
        {"notes", r.notes},
    };
    if (r.prime) {
        j["prime"] = *r.prime;
        j["retried"] = r.retried;
    }
    if (!r.reason.empty()) {
        j["reason"] = r.reason;
    }
    return j;
}

Json gap_report_to_json(const GapReport &r) {
    return Json{
        {"max_queries", r.max_queries},
        {"d_exact", r.d_exact ? Json(*r.d_exact) : Json(nullptr)},
        {"ratio_num", r.ratio.get_num().get_si()},
        {"ratio_den", r.ratio.get_den().get_si()},
        {"correct", r.correct},
    };
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw FormatError("'" + path + "' is not valid JSON: " + e.what());
    }
}

BooleanFunction load_function(std::string_view source) {
    if (source.substr(0, kBuiltinPrefix.size()) == kBuiltinPrefix) {
        return named_function(source.substr(kBuiltinPrefix.size()));
    }
    return truth_table_from_json(read_json_file(std::string(source)));
}

QueryAlgorithm load_algorithm(std::string_view source) {
    if (source == "builtin:a1") {
        return a1();
    }
    if (source == "builtin:a2") {
        return a2();
    }
    if (source.substr(0, kBuiltinPrefix.size()) == kBuiltinPrefix) {
        throw std::invalid_argument("unknown builtin algorithm '" + std::string(source) + "'");
    }
    return algorithm_from_json(read_json_file(std::string(source)));
}

}  // namespace exactq
