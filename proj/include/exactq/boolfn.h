#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exactq {

/// Largest arity that is ever materialized as a truth table (2^27 bits = 16 MiB).
constexpr int kMaxTableVariables = 27;

/// Default arity cap for the exact decision-tree search (3^12 partial assignments).
constexpr int kDefaultDCap = 12;

/// An input x1..xn. Index i of the bit vector holds x_{i+1}.
class InputAssignment {
   public:
    InputAssignment() = default;
    explicit InputAssignment(std::vector<uint8_t> bits);

    /// Parses "0110"; the first character is x1. Throws std::invalid_argument on other characters.
    static InputAssignment parse(std::string_view text);
    /// Truth-table index convention: x1 is the most significant of the n bits.
    static InputAssignment from_index(int n, uint64_t index);
    static InputAssignment zeros(int n);
    static InputAssignment ones(int n);

    int n() const {
        return static_cast<int>(bits_.size());
    }
    uint8_t operator[](int var) const {
        return bits_[var];
    }
    void set(int var, bool value) {
        bits_[var] = value ? 1 : 0;
    }
    void flip(int var) {
        bits_[var] ^= 1;
    }
    const std::vector<uint8_t> &bits() const {
        return bits_;
    }
    /// Requires n <= 63.
    uint64_t index() const;
    InputAssignment complement() const;
    std::string str() const;

    bool operator==(const InputAssignment &) const = default;

   private:
    std::vector<uint8_t> bits_;
};

int hamming_weight(const InputAssignment &x);

/// A packed truth table over n <= 27 variables. Bit i is f(x) where i's binary digits,
/// most significant first, are x1 x2 ... xn.
class BooleanFunction {
   public:
    /// The constant-0 function on n variables.
    explicit BooleanFunction(int n);

    /// Builds a table by calling `fn(index)` for every index.
    template <typename Fn>
    static BooleanFunction from_index_fn(int n, Fn &&fn) {
        BooleanFunction f(n);
        for (uint64_t i = 0; i < f.size(); i++) {
            if (fn(i)) {
                f.set(i, true);
            }
        }
        return f;
    }
    /// Builds a function from its 1-set, written as input strings ("001", "110").
    static BooleanFunction from_ones(int n, const std::vector<std::string> &ones);
    /// Builds a function from a string of 2^n '0'/'1' characters, index 0 first.
    static BooleanFunction from_bit_string(std::string_view table);

    int n() const {
        return n_;
    }
    uint64_t size() const {
        return uint64_t{1} << n_;
    }
    bool at(uint64_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    void set(uint64_t index, bool value) {
        uint64_t m = uint64_t{1} << (index & 63);
        if (value) {
            words_[index >> 6] |= m;
        } else {
            words_[index >> 6] &= ~m;
        }
    }
    /// Throws std::invalid_argument when x.n() != n().
    bool operator()(const InputAssignment &x) const;

    BooleanFunction negated() const;
    std::vector<uint64_t> ones() const;
    uint64_t count_ones() const;
    std::string bit_string() const;

    bool operator==(const BooleanFunction &o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    /// Orders by arity, then lexicographically by table read from index 0.
    bool operator<(const BooleanFunction &o) const;

   private:
    int n_;
    std::vector<uint64_t> words_;
};

bool evaluate(const BooleanFunction &f, const InputAssignment &x);

/// Named functions: "F3", "G4", "table1:i", "table2:i" (i in 1..8), and "const0:n", "const1:n",
/// "and:n", "xor:n" (n in 1..27).
/// Throws std::invalid_argument for any other name.
BooleanFunction named_function(std::string_view name);

/// Handy constructions used by tests and the CLI.
BooleanFunction constant_function(int n, bool value);
BooleanFunction projection_function(int n, int var);
BooleanFunction and_function(int n);
BooleanFunction xor_function(int n);

/// f(x) == f(x̄) for every x.
bool complement_symmetric(const BooleanFunction &f);

int sensitivity_at(const BooleanFunction &f, const InputAssignment &x);
int sensitivity_at_index(const BooleanFunction &f, uint64_t index);
int sensitivity(const BooleanFunction &f);

/// Exact D(f) by minimax over partial assignments, or nullopt when f.n() > cap.
std::optional<int> deterministic_complexity(const BooleanFunction &f, int cap = kDefaultDCap);

/// Per-partial-assignment minimax data, indexed by ternary code (digit j refers to
/// truth-table bit j; digit value 2 means free). Shared with the decision-tree builder.
struct MinimaxTable {
    int n = 0;
    std::vector<uint8_t> depth;
    /// Truth-table bit to query next, or -1 when the restriction is constant.
    std::vector<int8_t> best_bit;
    /// 0/1 when the restriction is constant, -1 otherwise.
    std::vector<int8_t> constant;
    uint64_t root() const;
};
MinimaxTable minimax_table(const BooleanFunction &f);

/// All complement-symmetric functions on n in {3, 4} variables with D(f) = n, sorted.
std::vector<BooleanFunction> enumerate_complement_symmetric_full_d(int n);

/// h(f1(block 1), ..., f1(block n)) over n·m variables, block j = x_{(j-1)m+1..jm}.
/// Throws std::length_error when n·m > 27.
BooleanFunction compose_function(const BooleanFunction &h, const BooleanFunction &f1);

}  // namespace exactq
