#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "exactq/boolfn.h"
#include "exactq/exact_scalar.h"

namespace exactq {

/// Tolerance used by floating-point simulation when comparing probabilities.
constexpr double kFloatTolerance = 1e-9;

/// Raised when an algorithm's final state fails a determinism or consistency requirement.
class VerificationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A real dim×dim matrix, row-major. Matrices built from ExactScalar entries carry exact values;
/// matrices built from doubles only support floating-point simulation.
class UnitaryMatrix {
   public:
    UnitaryMatrix(size_t dim, std::vector<ExactScalar> entries);
    static UnitaryMatrix from_doubles(size_t dim, std::vector<double> entries);
    static UnitaryMatrix identity(size_t dim);

    size_t dim() const {
        return dim_;
    }
    bool is_exact() const {
        return exact_.has_value();
    }
    /// Throws std::logic_error on a floating-point matrix.
    const ExactScalar &at(size_t row, size_t col) const;
    double approx(size_t row, size_t col) const {
        return approx_[row * dim_ + col];
    }

   private:
    UnitaryMatrix() = default;

    size_t dim_ = 0;
    std::optional<std::vector<ExactScalar>> exact_;
    std::vector<double> approx_;
};

/// Exact matrices: Mᵀ·M == I with zero tolerance. Floating-point matrices: within `tolerance`.
bool check_unitary(const UnitaryMatrix &m, double tolerance = kFloatTolerance);

/// A sign query. Amplitude i is negated when the variable assigned to it is 1; unassigned
/// amplitudes are left alone.
struct QueryLayer {
    std::vector<std::optional<int>> assignment;

    size_t dim() const {
        return assignment.size();
    }
    /// (-1)^{x_v} per amplitude, +1 where unassigned.
    std::vector<int> signs(const InputAssignment &x) const;
};

using Layer = std::variant<UnitaryMatrix, QueryLayer>;

/// U0 -> Q -> U1 -> ... sequence with a 0/1 label on every basis output.
class QueryAlgorithm {
   public:
    /// Throws std::invalid_argument when any layer's dimension differs from `dim`, a query assigns a
    /// variable outside 0..n-1, or `outputs` is not dim labels in {0, 1}.
    QueryAlgorithm(int dim, int n, std::vector<Layer> layers, std::vector<uint8_t> outputs);

    int dim() const {
        return dim_;
    }
    int n() const {
        return n_;
    }
    const std::vector<Layer> &layers() const {
        return layers_;
    }
    const std::vector<uint8_t> &outputs() const {
        return outputs_;
    }
    int query_count() const;
    /// True when every unitary layer carries exact entries.
    bool exact_arithmetic() const;

    QueryAlgorithm with_outputs(std::vector<uint8_t> outputs) const;

   private:
    int dim_;
    int n_;
    std::vector<Layer> layers_;
    std::vector<uint8_t> outputs_;
};

struct FinalState {
    std::vector<ExactScalar> amplitudes;
    /// Probability mass on outputs labeled 0 and 1.
    std::array<ExactScalar, 2> outcome_prob;
    /// State after each layer, filled when tracing.
    std::vector<std::vector<ExactScalar>> trace;

    /// Label carrying the larger probability (0 on a tie).
    int outcome() const;
};

struct FloatFinalState {
    std::vector<double> amplitudes;
    std::array<double, 2> outcome_prob{};
    std::vector<std::vector<double>> trace;

    int outcome() const;
};

/// Runs the algorithm from basis state 0 in exact arithmetic. Throws std::invalid_argument on an
/// arity mismatch and std::domain_error when a layer has no exact entries.
FinalState simulate(const QueryAlgorithm &alg, const InputAssignment &x, bool trace = false);
FloatFinalState simulate_float(const QueryAlgorithm &alg, const InputAssignment &x, bool trace = false);

/// Every input puts probability exactly 1 on outputs labeled f(x).
bool is_exact(const QueryAlgorithm &alg, const BooleanFunction &f);
/// Floating-point variant for algorithms with inexact entries.
bool is_exact_float(const QueryAlgorithm &alg, const BooleanFunction &f, double tolerance = kFloatTolerance);

/// Basis output reached with probability exactly 1, or nullopt if the final state is spread.
std::optional<int> deterministic_output(const FinalState &s);

/// The dim-4, 2-query algorithm for F3: U0, Q(x1,x2,x1,x2), U1, Q(x3,x1,x2,x3), U1, U0.
QueryAlgorithm a1();
/// A dim-4, 2-query algorithm for G4 whose final basis index is 2·(x1⊕x2) + (x3⊕x4).
QueryAlgorithm a2();

/// Where each complement class {x, x̄} ends up. Classes are keyed by their member with x1 = 0.
struct ComplementClassMap {
    std::vector<uint64_t> representatives;
    std::vector<int> final_index;
    /// No two classes share a basis index.
    bool injective = false;
};

/// Simulates every input; throws VerificationError when some input is not basis-deterministic or
/// x and x̄ land on different indices.
ComplementClassMap classify_final(const QueryAlgorithm &alg);

/// Same layers, outputs chosen so that each reachable index reports f on the classes landing there.
/// Throws std::invalid_argument when f is not complement-symmetric or arities differ, and
/// VerificationError when classes sharing an index disagree on f.
QueryAlgorithm relabel_outputs(const QueryAlgorithm &alg, const BooleanFunction &f);

}  // namespace exactq
