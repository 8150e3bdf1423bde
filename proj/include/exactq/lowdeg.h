#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "exactq/boolfn.h"
#include "exactq/exact_scalar.h"

namespace exactq {

/// Assignment of each variable to one of three groups.
class GroupPartition {
   public:
    /// Throws std::invalid_argument when a group id is outside 0..2 or a group is empty.
    explicit GroupPartition(std::vector<int> group_of);
    /// Contiguous groups of the given sizes: x1..x_{n1}, then n2 variables, then n3.
    static GroupPartition contiguous(int n1, int n2, int n3);

    int n() const {
        return static_cast<int>(group_of_.size());
    }
    int group_of(int var) const {
        return group_of_[var];
    }
    const std::array<int, 3> &sizes() const {
        return sizes_;
    }
    int largest_size() const;

   private:
    std::vector<int> group_of_;
    std::array<int, 3> sizes_{};
};

/// Per-group Hamming weights sorted descending (k1 >= k2 >= k3), with the group each came from.
struct SortedWeights {
    std::array<int, 3> weight{};
    std::array<int, 3> group{};
};
SortedWeights sorted_group_weights(const InputAssignment &x, const GroupPartition &part);

/// k1 - k3 over the sorted group weights. Throws std::invalid_argument on arity mismatch.
int connection_value(const InputAssignment &x, const GroupPartition &part);

/// A maximal legal pairing of the 1-points: no pair inside a group, at most one partner per other
/// group. Pairs are (lower, higher) 0-based variable indices in ascending order; partners are taken
/// in ascending index order. Always 2·k3 + k2 pairs.
std::vector<std::pair<int, int>> connection_pairs(const InputAssignment &x, const GroupPartition &part);

/// The fixed pair set {j, k+j}, {j, 2k+j}, {k+j, 2k+j} for j < k over three contiguous groups of k.
std::vector<std::pair<int, int>> matched_pairs(int k);

/// |x| minus the number of matched pairs with both ends set. A degree-2 polynomial in x whose
/// value lies in 0..k. Requires x.n() == 3k.
int matched_connection_value(std::span<const uint8_t> bits, int k);

/// The cubic on four variables: (x1x2 + x2x3 + x3x4 + x1x4) - (x1x2x3 + x1x2x4 + x1x3x4 + x2x3x4).
int p4_eval(std::span<const uint8_t> bits);

/// A Boolean function known through an evaluator, plus what its construction claims about it.
class ConstructedFunction {
   public:
    using Evaluator = std::function<bool(std::span<const uint8_t>)>;

    ConstructedFunction(int n, Evaluator eval, std::string family, std::vector<int> params, int claimed_degree,
                        int claimed_d, InputAssignment witness);

    int n() const {
        return n_;
    }
    const std::string &family() const {
        return family_;
    }
    const std::vector<int> &params() const {
        return params_;
    }
    int claimed_degree() const {
        return claimed_degree_;
    }
    int claimed_d() const {
        return claimed_d_;
    }
    const InputAssignment &witness() const {
        return witness_;
    }
    const std::vector<std::string> &notes() const {
        return notes_;
    }
    void add_note(std::string note) {
        notes_.push_back(std::move(note));
    }
    const Evaluator &evaluator() const {
        return eval_;
    }

    /// Throws std::invalid_argument on arity mismatch.
    bool operator()(const InputAssignment &x) const;
    bool eval_bits(std::span<const uint8_t> bits) const {
        return eval_(bits);
    }

    /// Calls sink(index, value) for every truth-table index in order. Requires n <= 27.
    template <typename Sink>
    void for_each_value(Sink &&sink) const {
        if (n_ > kMaxTableVariables) {
            throw std::length_error("enumeration limited to 27 variables");
        }
        std::vector<uint8_t> bits(n_, 0);
        const uint64_t size = uint64_t{1} << n_;
        for (uint64_t i = 0;;) {
            sink(i, eval_(bits));
            if (++i == size) {
                break;
            }
            for (int v = n_ - 1; v >= 0; v--) {
                if ((bits[v] ^= 1) != 0) {
                    break;
                }
            }
        }
    }

    /// Throws std::length_error when n exceeds `ceiling`.
    BooleanFunction materialize(int ceiling = 24) const;

   private:
    int n_;
    Evaluator eval_;
    std::string family_;
    std::vector<int> params_;
    int claimed_degree_;
    int claimed_d_;
    InputAssignment witness_;
    std::vector<std::string> notes_;
};

/// 0/1 values of a collapser on 0..k and where they came from.
struct CollapserChoice {
    std::vector<int> values;
    /// "search" or "reference".
    std::string source;
    std::string note;
};
/// find_collapser(k)'s vector, except that k = 7 first tries the reference polynomial.
CollapserChoice choose_collapser(int k);

/// 3k-variable function collapser_k(matched_connection_value(x)); claims deg 2(k-1), D 3k.
/// Requires odd k in [3, 15].
ConstructedFunction build_f3k(int k);
/// Same collapser applied to the sorted-weight spread k1 - k3 instead.
ConstructedFunction build_spread3k(int k);
/// p4 viewed as a 4-variable Boolean function (deg 3, D 4, witness 1111).
ConstructedFunction build_p4();
/// S(p4(x1..x4) + p4(x5..x8) + p4(x9..x12)) with S(z) = z^2/2 - 3z/2 + 1.
ConstructedFunction build_f12();

/// t levels of x -> S(P0(first third) + P0(second third) + P0(last third)), S as in build_f12.
/// Claims deg 2^t·d and D 3^t·D(base); the witness is the base witness repeated 3^t times.
ConstructedFunction iterate_triple(const ConstructedFunction &base, int t);
/// iterate_triple(build_f3k(k), t).
ConstructedFunction build_lemma3(int k, int t);

struct Lemma3Params {
    uint64_t variables = 0;
    uint64_t claimed_degree = 0;
    /// variables / claimed_degree.
    Rational ratio;
    /// 3^t k / (2^t (k-1)), the closed form as printed; differs from `ratio` by 3/2.
    Rational display_ratio;
};
/// Throws std::invalid_argument unless k is odd and > 1 and 1 <= t <= 30.
Lemma3Params lemma3_params(int k, int t);

enum class CertifyMode { Exact, ModP, Structural };

struct CertifyOptions {
    int exact_ceiling = 21;
    uint64_t prime = 1000003;
};

struct ConstructionReport {
    int n = 0;
    std::string family;
    std::vector<int> params;
    int claimed_degree = 0;
    int claimed_d = 0;
    std::optional<int> computed_degree;
    /// "exact", "mod-p" or "structural".
    std::string degree_mode;
    std::optional<uint64_t> prime;
    bool retried = false;
    std::string reason;
    std::string witness_input;
    int witness_sensitivity = 0;
    int qe_lower = 0;
    /// "confirmed", "refuted" or "unverified".
    std::string status;
    std::vector<std::string> notes;
};

/// Certification never throws on a failed claim; the outcome lives in `status`.
ConstructionReport certify(const ConstructedFunction &cf, CertifyMode mode, const CertifyOptions &opts = {});

/// Sensitivity at one input using n + 1 evaluator calls.
int sensitivity_at(const ConstructedFunction &cf, const InputAssignment &x);

}  // namespace exactq
