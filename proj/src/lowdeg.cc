#include "exactq/lowdeg.h"

#include <algorithm>
#include <memory>

#include "exactq/polynomial.h"

namespace exactq {

namespace {

// S(z) = z^2/2 - 3z/2 + 1 on 0..3.
constexpr std::array<int, 4> kTripleCollapser = {1, 0, 0, 1};

void require_odd_k(int k) {
    if (k < 3 || k > 15 || k % 2 == 0) {
        throw std::invalid_argument("k must be odd and in [3, 15]");
    }
}

std::string join_values(const std::vector<int> &v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); i++) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
}

bool triple_level(const ConstructedFunction::Evaluator &base, std::span<const uint8_t> bits, int level) {
    if (level == 0) {
        return base(bits);
    }
    const size_t third = bits.size() / 3;
    int sum = 0;
    for (size_t b = 0; b < 3; b++) {
        sum += triple_level(base, bits.subspan(b * third, third), level - 1);
    }
    return kTripleCollapser[sum] != 0;
}

}  // namespace

GroupPartition::GroupPartition(std::vector<int> group_of) : group_of_(std::move(group_of)) {
    for (int g : group_of_) {
        if (g < 0 || g > 2) {
            throw std::invalid_argument("group ids must be 0, 1 or 2");
        }
        sizes_[g]++;
    }
    for (int s : sizes_) {
        if (s == 0) {
            throw std::invalid_argument("every group needs at least one variable");
        }
    }
}

GroupPartition GroupPartition::contiguous(int n1, int n2, int n3) {
    std::vector<int> g;
    g.insert(g.end(), n1, 0);
    g.insert(g.end(), n2, 1);
    g.insert(g.end(), n3, 2);
    return GroupPartition(std::move(g));
}

int GroupPartition::largest_size() const {
    return *std::max_element(sizes_.begin(), sizes_.end());
}

SortedWeights sorted_group_weights(const InputAssignment &x, const GroupPartition &part) {
    if (x.n() != part.n()) {
        throw std::invalid_argument("partition covers " + std::to_string(part.n()) + " variables, input has " +
                                    std::to_string(x.n()));
    }
    std::array<int, 3> w{};
    for (int v = 0; v < x.n(); v++) {
        w[part.group_of(v)] += x[v];
    }
    SortedWeights s;
    s.group = {0, 1, 2};
    std::stable_sort(s.group.begin(), s.group.end(), [&](int a, int b) { return w[a] > w[b]; });
    for (int i = 0; i < 3; i++) {
        s.weight[i] = w[s.group[i]];
    }
    return s;
}

int connection_value(const InputAssignment &x, const GroupPartition &part) {
    auto s = sorted_group_weights(x, part);
    return s.weight[0] - s.weight[2];
}

std::vector<std::pair<int, int>> connection_pairs(const InputAssignment &x, const GroupPartition &part) {
    auto s = sorted_group_weights(x, part);
    std::array<std::vector<int>, 3> points;  // 1-points by rank (largest weight first)
    for (int v = 0; v < x.n(); v++) {
        if (x[v]) {
            int rank = static_cast<int>(std::find(s.group.begin(), s.group.end(), part.group_of(v)) - s.group.begin());
            points[rank].push_back(v);
        }
    }
    std::vector<std::pair<int, int>> pairs;
    auto add = [&](int a, int b) { pairs.emplace_back(std::min(a, b), std::max(a, b)); };
    for (size_t t = 0; t < points[2].size(); t++) {
        add(points[2][t], points[0][t]);
        add(points[2][t], points[1][t]);
    }
    for (size_t t = 0; t < points[1].size(); t++) {
        add(points[1][t], points[0][t]);
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::vector<std::pair<int, int>> matched_pairs(int k) {
    std::vector<std::pair<int, int>> s;
    for (int j = 0; j < k; j++) {
        s.emplace_back(j, k + j);
        s.emplace_back(j, 2 * k + j);
        s.emplace_back(k + j, 2 * k + j);
    }
    std::sort(s.begin(), s.end());
    return s;
}

int matched_connection_value(std::span<const uint8_t> bits, int k) {
    int p = 0;
    for (int j = 0; j < k; j++) {
        int a = bits[j];
        int b = bits[k + j];
        int c = bits[2 * k + j];
        p += a + b + c - a * b - a * c - b * c;
    }
    return p;
}

int p4_eval(std::span<const uint8_t> x) {
    int pairs = x[0] * x[1] + x[1] * x[2] + x[2] * x[3] + x[0] * x[3];
    int triples = x[0] * x[1] * x[2] + x[0] * x[1] * x[3] + x[0] * x[2] * x[3] + x[1] * x[2] * x[3];
    return pairs - triples;
}

ConstructedFunction::ConstructedFunction(int n, Evaluator eval, std::string family, std::vector<int> params,
                                         int claimed_degree, int claimed_d, InputAssignment witness)
    : n_(n),
      eval_(std::move(eval)),
      family_(std::move(family)),
      params_(std::move(params)),
      claimed_degree_(claimed_degree),
      claimed_d_(claimed_d),
      witness_(std::move(witness)) {
    if (witness_.n() != n_) {
        throw std::invalid_argument("witness arity does not match function arity");
    }
}

bool ConstructedFunction::operator()(const InputAssignment &x) const {
    if (x.n() != n_) {
        throw std::invalid_argument("input arity does not match function arity");
    }
    return eval_(x.bits());
}

BooleanFunction ConstructedFunction::materialize(int ceiling) const {
    if (n_ > ceiling) {
        throw std::length_error("n = " + std::to_string(n_) + " exceeds materialization ceiling " +
                                std::to_string(ceiling));
    }
    BooleanFunction f(n_);
    for_each_value([&](uint64_t i, bool v) {
        if (v) {
            f.set(i, true);
        }
    });
    return f;
}

CollapserChoice choose_collapser(int k) {
    require_odd_k(k);
    CollapserChoice c;
    if (k == 7) {
        auto check = check_collapser(reference_collapser_7(), 7);
        if (check.usable) {
            for (const auto &v : check.values) {
                c.values.push_back(static_cast<int>(v.get_num().get_si()));
            }
            c.source = "reference";
            return c;
        }
        c.note = "reference k=7 collapser not usable (boolean=" + std::string(check.boolean_valued ? "yes" : "no") +
                 ", degree=" + std::to_string(check.degree) +
                 ", v0!=v1=" + std::string(check.first_pair_differs ? "yes" : "no") + "); using searched collapser";
    }
    c.values = find_collapser(k).values;
    c.source = "search";
    return c;
}

ConstructedFunction build_f3k(int k) {
    auto choice = choose_collapser(k);
    auto values = std::make_shared<std::vector<int>>(choice.values);
    ConstructedFunction cf(
        3 * k,
        [values, k](std::span<const uint8_t> bits) { return (*values)[matched_connection_value(bits, k)] != 0; },
        "f3k", {k}, 2 * (k - 1), 3 * k, InputAssignment::zeros(3 * k));
    cf.add_note("collapser " + choice.source + " " + join_values(choice.values));
    if (!choice.note.empty()) {
        cf.add_note(choice.note);
    }
    return cf;
}

ConstructedFunction build_spread3k(int k) {
    auto choice = choose_collapser(k);
    auto values = std::make_shared<std::vector<int>>(choice.values);
    auto part = std::make_shared<GroupPartition>(GroupPartition::contiguous(k, k, k));
    ConstructedFunction cf(
        3 * k,
        [values, part](std::span<const uint8_t> bits) {
            InputAssignment x(std::vector<uint8_t>(bits.begin(), bits.end()));
            return (*values)[connection_value(x, *part)] != 0;
        },
        "spread3k", {k}, 2 * (k - 1), 3 * k, InputAssignment::zeros(3 * k));
    cf.add_note("collapser " + choice.source + " " + join_values(choice.values));
    return cf;
}

ConstructedFunction build_p4() {
    return ConstructedFunction(
        4, [](std::span<const uint8_t> bits) { return p4_eval(bits) != 0; }, "p4", {}, 3, 4, InputAssignment::ones(4));
}

ConstructedFunction build_f12() {
    return ConstructedFunction(
        12,
        [](std::span<const uint8_t> bits) {
            int sum = p4_eval(bits.subspan(0, 4)) + p4_eval(bits.subspan(4, 4)) + p4_eval(bits.subspan(8, 4));
            return kTripleCollapser[sum] != 0;
        },
        "f12", {}, 6, 12, InputAssignment::ones(12));
}

ConstructedFunction iterate_triple(const ConstructedFunction &base, int t) {
    if (t < 1) {
        throw std::invalid_argument("iteration count must be at least 1");
    }
    int n = base.n();
    int degree = base.claimed_degree();
    int d = base.claimed_d();
    for (int level = 0; level < t; level++) {
        if (n > (1 << 28) / 3) {
            throw std::length_error("iterated arity too large");
        }
        n *= 3;
        degree *= 2;
        d *= 3;
    }
    std::vector<uint8_t> witness;
    witness.reserve(n);
    while (static_cast<int>(witness.size()) < n) {
        witness.insert(witness.end(), base.witness().bits().begin(), base.witness().bits().end());
    }
    auto inner = std::make_shared<ConstructedFunction::Evaluator>(base.evaluator());
    const int r = base.n();
    std::vector<int> params = base.params();
    params.push_back(t);
    ConstructedFunction cf(
        n, [inner, t](std::span<const uint8_t> bits) { return triple_level(*inner, bits, t); },
        "iterate(" + base.family() + ")", std::move(params), degree, d, InputAssignment(std::move(witness)));
    cf.add_note("base arity " + std::to_string(r) + ", " + std::to_string(t) + " triple level(s)");
    return cf;
}

ConstructedFunction build_lemma3(int k, int t) {
    ConstructedFunction base = build_f3k(k);
    ConstructedFunction it = iterate_triple(base, t);
    ConstructedFunction cf(it.n(), it.evaluator(), "lemma3", {k, t}, it.claimed_degree(), it.claimed_d(),
                           it.witness());
    for (const auto &note : base.notes()) {
        cf.add_note(note);
    }
    if (t == 1) {
        cf.add_note("statement/proof range discrepancy");
    }
    return cf;
}

Lemma3Params lemma3_params(int k, int t) {
    if (k <= 1 || k % 2 == 0) {
        throw std::invalid_argument("k must be odd and greater than 1");
    }
    if (t < 1 || t > 30) {
        throw std::invalid_argument("t must be in [1, 30]");
    }
    uint64_t pow3 = 1;
    uint64_t pow2 = 1;
    for (int i = 0; i < t; i++) {
        pow3 *= 3;
        pow2 *= 2;
    }
    Lemma3Params p;
    p.variables = 3 * pow3 * static_cast<uint64_t>(k);
    p.claimed_degree = 2 * pow2 * static_cast<uint64_t>(k - 1);
    p.ratio = Rational(mpz_class(std::to_string(p.variables)), mpz_class(std::to_string(p.claimed_degree)));
    p.ratio.canonicalize();
    p.display_ratio = Rational(mpz_class(std::to_string(pow3 * k)), mpz_class(std::to_string(pow2 * (k - 1))));
    p.display_ratio.canonicalize();
    return p;
}

int sensitivity_at(const ConstructedFunction &cf, const InputAssignment &x) {
    if (x.n() != cf.n()) {
        throw std::invalid_argument("input arity does not match function arity");
    }
    std::vector<uint8_t> bits = x.bits();
    const bool v = cf.eval_bits(bits);
    int s = 0;
    for (int i = 0; i < cf.n(); i++) {
        bits[i] ^= 1;
        s += cf.eval_bits(bits) != v;
        bits[i] ^= 1;
    }
    return s;
}

ConstructionReport certify(const ConstructedFunction &cf, CertifyMode mode, const CertifyOptions &opts) {
    ConstructionReport rep;
    rep.n = cf.n();
    rep.family = cf.family();
    rep.params = cf.params();
    rep.claimed_degree = cf.claimed_degree();
    rep.claimed_d = cf.claimed_d();
    rep.notes = cf.notes();
    rep.witness_input = cf.witness().str();
    rep.witness_sensitivity = sensitivity_at(cf, cf.witness());

    switch (mode) {
        case CertifyMode::Exact:
            rep.degree_mode = "exact";
            if (cf.n() > opts.exact_ceiling) {
                rep.reason = "n=" + std::to_string(cf.n()) + " exceeds exact interpolation ceiling " +
                             std::to_string(opts.exact_ceiling);
            } else {
                std::vector<int64_t> a(uint64_t{1} << cf.n());
                cf.for_each_value([&](uint64_t i, bool v) { a[i] = v; });
                mobius_transform(a);
                rep.computed_degree = max_nonzero_popcount(a);
            }
            break;
        case CertifyMode::ModP: {
            rep.degree_mode = "mod-p";
            rep.prime = opts.prime;
            if (cf.n() > kMaxTableVariables) {
                rep.reason = "n=" + std::to_string(cf.n()) + " exceeds brute-force scope";
                break;
            }
            auto probe = [&](uint64_t prime) {
                return degree_mod_p(
                    cf.n(),
                    [&, bits = std::vector<uint8_t>(cf.n(), 0), next = uint64_t{0}](uint64_t i) mutable {
                        // Indices arrive in order, so the bit vector advances like a counter.
                        while (next < i) {
                            for (int v = cf.n() - 1; v >= 0; v--) {
                                if ((bits[v] ^= 1) != 0) {
                                    break;
                                }
                            }
                            next++;
                        }
                        return cf.eval_bits(bits);
                    },
                    prime);
            };
            int d = probe(opts.prime);
            if (d < cf.claimed_degree()) {
                // Mod-p degree is a lower bound; a second prime rules out an unlucky divisor.
                uint64_t second = next_prime(opts.prime);
                d = std::max(d, probe(second));
                rep.retried = true;
                rep.notes.push_back("retried with prime " + std::to_string(second));
            }
            rep.computed_degree = d;
            break;
        }
        case CertifyMode::Structural:
            rep.degree_mode = "structural";
            rep.reason = "n=" + std::to_string(cf.n()) + " exceeds brute-force scope";
            break;
    }
    if (mode == CertifyMode::Structural && cf.n() <= kMaxTableVariables) {
        rep.reason = "structural mode requested";
    }

    rep.qe_lower = qe_lower_bound_from_degree(rep.computed_degree.value_or(cf.claimed_degree()));
    if (!rep.computed_degree) {
        rep.status = "unverified";
    } else if (*rep.computed_degree == cf.claimed_degree() && rep.witness_sensitivity == cf.n()) {
        rep.status = "confirmed";
    } else {
        rep.status = "refuted";
    }
    return rep;
}

}  // namespace exactq
