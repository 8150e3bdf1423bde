#include "exactq/cli.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "exactq/analysis.h"
#include "exactq/json_io.h"
#include "exactq/lowdeg.h"
#include "exactq/polynomial.h"
#include "exactq/qsim.h"
#include "exactq/suites.h"

namespace exactq {

namespace {

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

std::optional<int> env_int(const char *name, int lo, int hi) {
    const char *raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    std::string_view text(raw);
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || v < lo || v > hi) {
        throw UsageError(std::string(name) + " must be an integer in " + std::to_string(lo) + ".." + std::to_string(hi));
    }
    return v;
}

std::vector<int> int_list(std::string_view text, std::string_view what) {
    std::vector<int> out;
    while (true) {
        auto comma = text.find(',');
        auto part = text.substr(0, comma);
        int v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
            throw UsageError("malformed " + std::string(what) + " '" + std::string(part) + "'");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        text = text.substr(comma + 1);
    }
    return out;
}

ConstructedFunction build_family(const std::string &family) {
    auto single = [&](std::string_view prefix) -> std::optional<int> {
        if (!family.starts_with(prefix)) {
            return std::nullopt;
        }
        auto v = int_list(std::string_view(family).substr(prefix.size()), "family parameter");
        if (v.size() != 1) {
            throw UsageError("family " + family + " takes one parameter");
        }
        return v[0];
    };
    try {
        if (family == "f9") {
            return build_f3k(3);
        }
        if (family == "f12") {
            return build_f12();
        }
        if (family == "f15") {
            return build_f3k(5);
        }
        if (family == "f21") {
            return build_f3k(7);
        }
        if (family == "f45") {
            return build_f3k(15);
        }
        if (family == "p4") {
            return build_p4();
        }
        if (auto k = single("f3k:")) {
            return build_f3k(*k);
        }
        if (auto k = single("spread3k:")) {
            return build_spread3k(*k);
        }
        if (family.starts_with("lemma3:")) {
            auto v = int_list(std::string_view(family).substr(7), "family parameter");
            if (v.size() != 2) {
                throw UsageError("family lemma3 takes k,t");
            }
            auto params = lemma3_params(v[0], v[1]);
            if (params.variables > 100000) {
                throw UsageError("lemma3 instance has " + std::to_string(params.variables) + " variables; limit is 100000");
            }
            return build_lemma3(v[0], v[1]);
        }
    } catch (const UsageError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown family '" + family + "'");
}

Json suite_report_json(const SuiteReport &r) {
    Json checks = Json::array();
    for (const auto &c : r.checks) {
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
    }
    return Json{{"suite", r.suite}, {"pass", r.pass}, {"checks", std::move(checks)}, {"notes", r.notes}};
}

struct Options {
    std::string function;
    std::optional<int> dcap;

    std::string alg;
    std::string input;
    bool trace = false;
    bool use_float = false;

    std::string suite;

    std::string family;
    std::string emit = "report";
    std::optional<uint64_t> mod_p;
    std::optional<int> exact_ceiling;

    std::string values;
    std::optional<int> k;
    bool reference = false;
};

int cmd_analyze(const Options &o, Json &doc, std::ostream &err) {
    AnalyzeOptions opts;
    if (auto v = env_int("EXACTQ_DCAP", 0, 16)) {
        opts.d_cap = *v;
    }
    if (auto v = env_int("EXACTQ_INTERP_MAX", 1, kMaxTableVariables)) {
        opts.interpolation_ceiling = *v;
    }
    if (o.dcap) {
        opts.d_cap = *o.dcap;
    }
    BooleanFunction f = [&] {
        try {
            return load_function(o.function);
        } catch (const FormatError &e) {
            throw UsageError(e.what());
        }
    }();
    auto r = analyze(f, opts);
    doc = complexity_report_to_json(r);
    err << "analyze: n=" << r.n << " s=" << r.sensitivity << " deg=" << r.degree << " D="
        << (r.d_exact ? std::to_string(*r.d_exact) : std::string("?")) << "\n";
    return kExitOk;
}

int cmd_simulate(const Options &o, Json &doc, std::ostream &err) {
    auto alg = load_algorithm(o.alg);
    auto x = InputAssignment::parse(o.input);
    if (x.n() != alg.n()) {
        throw UsageError("input has " + std::to_string(x.n()) + " bits, algorithm expects " + std::to_string(alg.n()));
    }
    if (o.use_float) {
        auto s = simulate_float(alg, x, o.trace);
        int outcome = s.outcome();
        doc = Json{{"amplitudes", s.amplitudes},
                   {"outcome", outcome},
                   {"probability", s.outcome_prob[outcome]},
                   {"outcome_probabilities", s.outcome_prob},
                   {"arithmetic", "float"}};
        if (o.trace) {
            doc["trace"] = s.trace;
        }
    } else {
        if (!alg.exact_arithmetic()) {
            throw UsageError("algorithm has floating-point entries; rerun with --float");
        }
        auto s = simulate(alg, x, o.trace);
        int outcome = s.outcome();
        doc = Json{{"amplitudes", amplitudes_to_json(s.amplitudes)},
                   {"outcome", outcome},
                   {"probability", s.outcome_prob[outcome].str()},
                   {"outcome_probabilities", Json::array({s.outcome_prob[0].str(), s.outcome_prob[1].str()})},
                   {"arithmetic", "exact"}};
        if (o.trace) {
            Json t = Json::array();
            for (const auto &state : s.trace) {
                t.push_back(amplitudes_to_json(state));
            }
            doc["trace"] = std::move(t);
        }
    }
    err << "simulate: input " << x.str() << " -> outcome " << doc["outcome"].get<int>() << "\n";
    return kExitOk;
}

int cmd_verify(const Options &o, Json &doc, std::ostream &err) {
    SuiteReport r = [&] {
        try {
            return run_suite(o.suite);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }();
    doc = suite_report_json(r);
    size_t passed = std::count_if(r.checks.begin(), r.checks.end(), [](const SuiteCheck &c) { return c.pass; });
    err << "verify " << r.suite << ": " << passed << "/" << r.checks.size() << " checks passed, "
        << (r.pass ? "pass" : "FAIL") << "\n";
    return r.pass ? kExitOk : kExitFailed;
}

int cmd_construct(const Options &o, Json &doc, std::ostream &err) {
    CertifyOptions copts;
    if (auto v = env_int("EXACTQ_INTERP_MAX", 1, kDefaultInterpolationCeiling)) {
        copts.exact_ceiling = *v;
    }
    if (o.exact_ceiling) {
        copts.exact_ceiling = *o.exact_ceiling;
    }
    if (o.mod_p) {
        if (*o.mod_p <= 2 || *o.mod_p >= (uint64_t{1} << 31) || !is_prime(*o.mod_p)) {
            throw UsageError("--mod-p must be a prime in (2, 2^31)");
        }
        copts.prime = *o.mod_p;
    }
    auto cf = build_family(o.family);
    if (o.emit == "table") {
        if (cf.n() > kDefaultInterpolationCeiling) {
            throw UsageError("table emission needs n <= 24, family has n=" + std::to_string(cf.n()));
        }
        doc = truth_table_to_json(cf.materialize());
        err << "construct " << o.family << ": table over " << cf.n() << " variables\n";
        return kExitOk;
    }
    if (o.emit == "poly") {
        if (cf.n() > copts.exact_ceiling) {
            throw UsageError("polynomial emission needs n <= " + std::to_string(copts.exact_ceiling) +
                             ", family has n=" + std::to_string(cf.n()));
        }
        auto p = interpolate(cf.materialize(), copts.exact_ceiling);
        doc = polynomial_to_json(p);
        err << "construct " << o.family << ": polynomial with " << p.terms().size() << " terms, degree "
            << p.degree() << "\n";
        return kExitOk;
    }
    CertifyMode mode = CertifyMode::Structural;
    if (o.mod_p) {
        mode = CertifyMode::ModP;
    } else if (cf.n() <= copts.exact_ceiling) {
        mode = CertifyMode::Exact;
    }
    auto rep = certify(cf, mode, copts);
    doc = construction_report_to_json(rep);
    err << "construct " << o.family << ": claimed degree " << rep.claimed_degree << ", computed "
        << (rep.computed_degree ? std::to_string(*rep.computed_degree) : std::string("none")) << " ("
        << rep.degree_mode << "), " << rep.status << "\n";
    return rep.status == "confirmed" ? kExitOk : kExitFailed;
}

int cmd_fit_collapser(const Options &o, Json &doc, std::ostream &err) {
    int given = (!o.values.empty()) + o.k.has_value() + o.reference;
    if (given != 1) {
        throw UsageError("fit-collapser needs exactly one of --values, --k, --reference-7");
    }
    if (o.reference) {
        auto p = reference_collapser_7();
        auto c = check_collapser(p, 7);
        Json values = Json::array();
        for (const auto &v : c.values) {
            values.push_back(rational_str(v));
        }
        doc = Json{{"polynomial", range_polynomial_to_json(p)},
                   {"text", p.str()},
                   {"values", std::move(values)},
                   {"boolean_valued", c.boolean_valued},
                   {"degree", c.degree},
                   {"first_pair_differs", c.first_pair_differs},
                   {"usable", c.usable}};
        err << "reference 7-range collapser: " << (c.usable ? "usable" : "not usable") << "\n";
        return kExitOk;
    }
    if (o.k) {
        Collapser c = [&] {
            try {
                return find_collapser(*o.k);
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
        }();
        doc = Json{{"k", c.k},
                   {"values", c.values},
                   {"polynomial", range_polynomial_to_json(c.polynomial)},
                   {"text", c.polynomial.str()},
                   {"degree", c.polynomial.degree()}};
        err << "collapser " << c.k << ": " << c.polynomial.str() << "\n";
        return kExitOk;
    }
    auto values = int_list(o.values, "value");
    if (values.size() < 2) {
        throw UsageError("--values needs at least two entries");
    }
    auto p = fit_range_polynomial(std::span<const int>(values));
    doc = Json{{"values", values},
               {"polynomial", range_polynomial_to_json(p)},
               {"text", p.str()},
               {"degree", p.degree()}};
    err << "fit: " << p.str() << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact quantum query algorithms and low-degree Boolean function constructions", "exactq"};
    app.require_subcommand(1);
    Options o;

    auto *analyze_cmd = app.add_subcommand("analyze", "Complexity measures of a Boolean function");
    analyze_cmd->add_option("function", o.function, "builtin:NAME or truth-table JSON file")->required();
    analyze_cmd->add_option("--dcap", o.dcap, "Largest arity for exact decision-tree search")->check(CLI::Range(0, 16));

    auto *simulate_cmd = app.add_subcommand("simulate", "Run a query algorithm on one input");
    simulate_cmd->add_option("--alg", o.alg, "builtin:a1, builtin:a2 or algorithm JSON file")->required();
    simulate_cmd->add_option("--input", o.input, "Input bits, x1 first")->required();
    simulate_cmd->add_flag("--trace", o.trace, "Include the state after every layer");
    simulate_cmd->add_flag("--float", o.use_float, "Use floating-point arithmetic");

    auto *verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", o.suite, "Suite name")->required();

    auto *construct_cmd = app.add_subcommand("construct", "Build and certify a constructed function");
    construct_cmd->add_option("--family", o.family, "f9, f12, f15, f21, f45, p4, f3k:k, spread3k:k or lemma3:k,t")
        ->required();
    construct_cmd->add_option("--emit", o.emit, "table, poly or report")
        ->check(CLI::IsMember({"table", "poly", "report"}));
    construct_cmd->add_option("--mod-p", o.mod_p, "Certify the degree modulo this prime");
    construct_cmd->add_option("--exact-ceiling", o.exact_ceiling, "Largest arity for exact interpolation")
        ->check(CLI::Range(1, kDefaultInterpolationCeiling));

    auto *fit_cmd = app.add_subcommand("fit-collapser", "Fit or search a range-collapsing polynomial");
    fit_cmd->add_option("--values", o.values, "Comma-separated values at 0..k");
    fit_cmd->add_option("--k", o.k, "Search the canonical collapser for odd k");
    fit_cmd->add_flag("--reference-7", o.reference, "Check the published 7-range polynomial");

    Json doc;
    int code = kExitOk;
    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp &) {
            out << Json{{"usage", app.help()}}.dump(2) << "\n";
            return kExitOk;
        } catch (const CLI::CallForAllHelp &) {
            out << Json{{"usage", app.help("", CLI::AppFormatMode::All)}}.dump(2) << "\n";
            return kExitOk;
        } catch (const CLI::ParseError &e) {
            throw UsageError(e.what());
        }
        if (analyze_cmd->parsed()) {
            code = cmd_analyze(o, doc, err);
        } else if (simulate_cmd->parsed()) {
            code = cmd_simulate(o, doc, err);
        } else if (verify_cmd->parsed()) {
            code = cmd_verify(o, doc, err);
        } else if (construct_cmd->parsed()) {
            code = cmd_construct(o, doc, err);
        } else {
            code = cmd_fit_collapser(o, doc, err);
        }
    } catch (const VerificationError &e) {
        err << "error: " << e.what() << "\n";
        doc = Json{{"error", e.what()}};
        code = kExitFailed;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        doc = Json{{"error", e.what()}};
        code = kExitUsage;
    } catch (const std::length_error &e) {
        err << "error: " << e.what() << "\n";
        doc = Json{{"error", e.what()}};
        code = kExitUsage;
    } catch (const FormatError &e) {
        err << "error: " << e.what() << "\n";
        doc = Json{{"error", e.what()}};
        code = kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        doc = Json{{"error", e.what()}};
        code = kExitFailed;
    }
    out << doc.dump(2) << "\n";
    return code;
}

}  // namespace exactq
