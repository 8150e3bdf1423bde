#pragma once

#include <optional>
#include <vector>

#include "exactq/boolfn.h"
#include "exactq/exact_scalar.h"
#include "exactq/qsim.h"

namespace exactq {

/// Binary decision tree over variables 0..n-1 (variable v is x_{v+1}).
class DecisionTree {
   public:
    struct Node {
        /// -1 on a leaf.
        int var = -1;
        int child[2] = {-1, -1};
        bool leaf_value = false;
    };

    DecisionTree(int n, std::vector<Node> nodes, int root);

    int n() const {
        return n_;
    }
    const std::vector<Node> &nodes() const {
        return nodes_;
    }
    int root() const {
        return root_;
    }
    int depth() const;
    bool evaluate(const InputAssignment &x) const;
    /// No variable is read twice along any root-to-leaf path.
    bool read_once_paths() const;

   private:
    int n_;
    std::vector<Node> nodes_;
    int root_;
};

/// An optimal-depth tree for h (depth == D(h)). Throws std::length_error when h.n() > 12.
DecisionTree build_decision_tree(const BooleanFunction &h);

/// Outer decision tree whose reads are answered by running an exact inner algorithm on a block of
/// m inputs.
class HybridAlgorithm {
   public:
    /// Throws std::invalid_argument when `inner` is not exact for `inner_target`, or the outer tree
    /// is shallower than its arity (the gap arithmetic needs D(outer) = n).
    HybridAlgorithm(DecisionTree outer, QueryAlgorithm inner, const BooleanFunction &inner_target);

    const DecisionTree &outer() const {
        return outer_;
    }
    const QueryAlgorithm &inner() const {
        return inner_;
    }
    int block_width() const {
        return inner_.n();
    }
    int arity() const {
        return outer_.n() * inner_.n();
    }

   private:
    DecisionTree outer_;
    QueryAlgorithm inner_;
};

struct HybridResult {
    bool value = false;
    int queries_used = 0;
};

/// Throws std::invalid_argument when x.n() != n·m.
HybridResult hybrid_evaluate(const HybridAlgorithm &hy, const InputAssignment &x);

struct GapReport {
    int max_queries = 0;
    std::optional<int> d_exact;
    /// max_queries / d_exact when d_exact is known.
    Rational ratio;
    bool correct = false;
    /// Every per-input query count is a multiple of the inner query count.
    bool query_multiples = false;
    int inner_queries = 0;
    int outer_depth = 0;
};

/// Exhaustive check of hybrid(h, inner) against compose_function(h, f1). Requires n·m <= 12.
GapReport verify_gap(const BooleanFunction &h, const BooleanFunction &f1, const QueryAlgorithm &inner);

}  // namespace exactq
