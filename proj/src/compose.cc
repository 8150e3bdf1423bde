#include "exactq/compose.h"

#include <algorithm>
#include <functional>
#include <string>

namespace exactq {

DecisionTree::DecisionTree(int n, std::vector<Node> nodes, int root) : n_(n), nodes_(std::move(nodes)), root_(root) {
}

int DecisionTree::depth() const {
    std::function<int(int)> rec = [&](int id) -> int {
        const Node &nd = nodes_[id];
        if (nd.var < 0) {
            return 0;
        }
        return 1 + std::max(rec(nd.child[0]), rec(nd.child[1]));
    };
    return rec(root_);
}

bool DecisionTree::evaluate(const InputAssignment &x) const {
    if (x.n() != n_) {
        throw std::invalid_argument("input arity does not match tree arity");
    }
    int id = root_;
    while (nodes_[id].var >= 0) {
        id = nodes_[id].child[x[nodes_[id].var]];
    }
    return nodes_[id].leaf_value;
}

bool DecisionTree::read_once_paths() const {
    std::vector<bool> seen(n_, false);
    std::function<bool(int)> rec = [&](int id) -> bool {
        const Node &nd = nodes_[id];
        if (nd.var < 0) {
            return true;
        }
        if (seen[nd.var]) {
            return false;
        }
        seen[nd.var] = true;
        bool ok = rec(nd.child[0]) && rec(nd.child[1]);
        seen[nd.var] = false;
        return ok;
    };
    return rec(root_);
}

DecisionTree build_decision_tree(const BooleanFunction &h) {
    if (h.n() > kDefaultDCap) {
        throw std::length_error("decision tree construction limited to 12 variables");
    }
    const int n = h.n();
    auto table = minimax_table(h);
    std::vector<uint64_t> pow3(n + 1, 1);
    for (int j = 1; j <= n; j++) {
        pow3[j] = pow3[j - 1] * 3;
    }
    std::vector<DecisionTree::Node> nodes;
    std::function<int(uint64_t)> grow = [&](uint64_t code) -> int {
        DecisionTree::Node nd;
        if (table.constant[code] >= 0) {
            nd.leaf_value = table.constant[code] == 1;
            nodes.push_back(nd);
            return static_cast<int>(nodes.size()) - 1;
        }
        int bit = table.best_bit[code];
        int lo = grow(code - 2 * pow3[bit]);
        int hi = grow(code - pow3[bit]);
        nd.var = n - 1 - bit;
        nd.child[0] = lo;
        nd.child[1] = hi;
        nodes.push_back(nd);
        return static_cast<int>(nodes.size()) - 1;
    };
    int root = grow(table.root());
    return DecisionTree(n, std::move(nodes), root);
}

HybridAlgorithm::HybridAlgorithm(DecisionTree outer, QueryAlgorithm inner, const BooleanFunction &inner_target)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!is_exact(inner_, inner_target)) {
        throw std::invalid_argument("inner algorithm is not exact for its target function");
    }
    if (outer_.depth() != outer_.n()) {
        throw std::invalid_argument("outer function must have D(h) equal to its arity");
    }
}

HybridResult hybrid_evaluate(const HybridAlgorithm &hy, const InputAssignment &x) {
    if (x.n() != hy.arity()) {
        throw std::invalid_argument("input has " + std::to_string(x.n()) + " bits, hybrid expects " +
                                    std::to_string(hy.arity()));
    }
    const int m = hy.block_width();
    const int k1 = hy.inner().query_count();
    const auto &nodes = hy.outer().nodes();
    HybridResult r;
    int id = hy.outer().root();
    while (nodes[id].var >= 0) {
        int block = nodes[id].var;
        std::vector<uint8_t> bits(x.bits().begin() + block * m, x.bits().begin() + (block + 1) * m);
        // Exactness makes the measured label deterministic.
        int measured = simulate(hy.inner(), InputAssignment(std::move(bits))).outcome();
        r.queries_used += k1;
        id = nodes[id].child[measured];
    }
    r.value = nodes[id].leaf_value;
    return r;
}

GapReport verify_gap(const BooleanFunction &h, const BooleanFunction &f1, const QueryAlgorithm &inner) {
    if (h.n() * f1.n() > kDefaultDCap) {
        throw std::length_error("exhaustive gap check limited to n·m <= 12");
    }
    HybridAlgorithm hy(build_decision_tree(h), inner, f1);
    BooleanFunction composite = compose_function(h, f1);
    GapReport rep;
    rep.inner_queries = inner.query_count();
    rep.outer_depth = hy.outer().depth();
    rep.correct = true;
    rep.query_multiples = true;
    for (uint64_t i = 0; i < composite.size(); i++) {
        auto res = hybrid_evaluate(hy, InputAssignment::from_index(composite.n(), i));
        rep.correct = rep.correct && res.value == composite.at(i);
        rep.query_multiples = rep.query_multiples && res.queries_used % rep.inner_queries == 0;
        rep.max_queries = std::max(rep.max_queries, res.queries_used);
    }
    rep.d_exact = deterministic_complexity(composite);
    if (rep.d_exact && *rep.d_exact > 0) {
        rep.ratio = Rational(rep.max_queries, *rep.d_exact);
        rep.ratio.canonicalize();
    }
    return rep;
}

}  // namespace exactq
