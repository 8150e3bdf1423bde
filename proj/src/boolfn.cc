#include "exactq/boolfn.h"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace exactq {

namespace {

// Columns of the 3-variable complement-symmetric functions with a 2 vs 3 gap, rows 000..111.
constexpr std::array<const char *, 8> kTable1Rows = {
    "10001110",  // 000
    "01001101",  // 001
    "00101011",  // 010
    "00010111",  // 011
    "00010111",  // 100
    "00101011",  // 101
    "01001101",  // 110
    "10001110",  // 111
};

// Same for the 4-variable set with a 2 vs 4 gap, rows 0000..1111.
constexpr std::array<const char *, 16> kTable2Rows = {
    "00011110",  // 0000
    "01001011",  // 0001
    "01001011",  // 0010
    "00011110",  // 0011
    "00101101",  // 0100
    "10000111",  // 0101
    "10000111",  // 0110
    "00101101",  // 0111
    "00101101",  // 1000
    "10000111",  // 1001
    "10000111",  // 1010
    "00101101",  // 1011
    "00011110",  // 1100
    "01001011",  // 1101
    "01001011",  // 1110
    "00011110",  // 1111
};

template <size_t Rows>
BooleanFunction table_column(const std::array<const char *, Rows> &rows, int n, int column) {
    return BooleanFunction::from_index_fn(n, [&](uint64_t i) { return rows[i][column] == '1'; });
}

void require_arity(int n) {
    if (n < 1 || n > kMaxTableVariables) {
        throw std::length_error("arity " + std::to_string(n) + " outside 1.." + std::to_string(kMaxTableVariables));
    }
}

}  // namespace

InputAssignment::InputAssignment(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (auto &b : bits_) {
        b = b ? 1 : 0;
    }
}

InputAssignment InputAssignment::parse(std::string_view text) {
    std::vector<uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("input must be a string of 0/1, got '" + std::string(text) + "'");
        }
        bits.push_back(c == '1');
    }
    return InputAssignment(std::move(bits));
}

InputAssignment InputAssignment::from_index(int n, uint64_t index) {
    std::vector<uint8_t> bits(n);
    for (int v = 0; v < n; v++) {
        bits[v] = (index >> (n - 1 - v)) & 1;
    }
    return InputAssignment(std::move(bits));
}

InputAssignment InputAssignment::zeros(int n) {
    return InputAssignment(std::vector<uint8_t>(n, 0));
}

InputAssignment InputAssignment::ones(int n) {
    return InputAssignment(std::vector<uint8_t>(n, 1));
}

uint64_t InputAssignment::index() const {
    if (n() > 63) {
        throw std::length_error("input too wide for an index");
    }
    uint64_t r = 0;
    for (uint8_t b : bits_) {
        r = (r << 1) | b;
    }
    return r;
}

InputAssignment InputAssignment::complement() const {
    InputAssignment r = *this;
    for (auto &b : r.bits_) {
        b ^= 1;
    }
    return r;
}

std::string InputAssignment::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (uint8_t b : bits_) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

int hamming_weight(const InputAssignment &x) {
    return static_cast<int>(std::count(x.bits().begin(), x.bits().end(), 1));
}

BooleanFunction::BooleanFunction(int n) : n_(n) {
    require_arity(n);
    words_.assign(std::max<uint64_t>(1, size() / 64), 0);
}

BooleanFunction BooleanFunction::from_ones(int n, const std::vector<std::string> &ones) {
    BooleanFunction f(n);
    for (const auto &s : ones) {
        auto x = InputAssignment::parse(s);
        if (x.n() != n) {
            throw std::invalid_argument("input '" + s + "' does not have " + std::to_string(n) + " bits");
        }
        f.set(x.index(), true);
    }
    return f;
}

BooleanFunction BooleanFunction::from_bit_string(std::string_view table) {
    if (table.empty() || !std::has_single_bit(table.size())) {
        throw std::invalid_argument("table length must be a power of two");
    }
    int n = std::countr_zero(table.size());
    BooleanFunction f(n);
    for (uint64_t i = 0; i < table.size(); i++) {
        if (table[i] != '0' && table[i] != '1') {
            throw std::invalid_argument("table must contain only 0/1");
        }
        f.set(i, table[i] == '1');
    }
    return f;
}

bool BooleanFunction::operator()(const InputAssignment &x) const {
    if (x.n() != n_) {
        throw std::invalid_argument(
            "input has " + std::to_string(x.n()) + " bits, function has " + std::to_string(n_) + " variables");
    }
    return at(x.index());
}

BooleanFunction BooleanFunction::negated() const {
    BooleanFunction r = *this;
    for (auto &w : r.words_) {
        w = ~w;
    }
    if (n_ < 6) {
        r.words_[0] &= (uint64_t{1} << size()) - 1;
    }
    return r;
}

std::vector<uint64_t> BooleanFunction::ones() const {
    std::vector<uint64_t> r;
    for (uint64_t i = 0; i < size(); i++) {
        if (at(i)) {
            r.push_back(i);
        }
    }
    return r;
}

uint64_t BooleanFunction::count_ones() const {
    uint64_t c = 0;
    for (uint64_t w : words_) {
        c += std::popcount(w);
    }
    return c;
}

std::string BooleanFunction::bit_string() const {
    std::string s(size(), '0');
    for (uint64_t i = 0; i < size(); i++) {
        if (at(i)) {
            s[i] = '1';
        }
    }
    return s;
}

bool BooleanFunction::operator<(const BooleanFunction &o) const {
    if (n_ != o.n_) {
        return n_ < o.n_;
    }
    for (size_t w = 0; w < words_.size(); w++) {
        if (words_[w] != o.words_[w]) {
            // Lowest differing index decides; the side holding 0 there is smaller.
            uint64_t diff = words_[w] ^ o.words_[w];
            return ((o.words_[w] >> std::countr_zero(diff)) & 1) != 0;
        }
    }
    return false;
}

bool evaluate(const BooleanFunction &f, const InputAssignment &x) {
    return f(x);
}

BooleanFunction named_function(std::string_view name) {
    if (name == "F3") {
        // ¬(x1 ⊕ x2) ∧ (x1 ⊕ x3)
        return BooleanFunction::from_index_fn(3, [](uint64_t i) {
            auto x = InputAssignment::from_index(3, i);
            return !(x[0] ^ x[1]) && (x[0] ^ x[2]);
        });
    }
    if (name == "G4") {
        // (x1 ⊕ x2) ∧ (x3 ⊕ x4)
        return BooleanFunction::from_index_fn(4, [](uint64_t i) {
            auto x = InputAssignment::from_index(4, i);
            return (x[0] ^ x[1]) && (x[2] ^ x[3]);
        });
    }
    auto column = [&](std::string_view prefix) -> int {
        if (name.substr(0, prefix.size()) != prefix || name.size() != prefix.size() + 1) {
            return -1;
        }
        char c = name.back();
        return (c >= '1' && c <= '8') ? c - '1' : -1;
    };
    if (int c = column("table1:"); c >= 0) {
        return table_column(kTable1Rows, 3, c);
    }
    if (int c = column("table2:"); c >= 0) {
        return table_column(kTable2Rows, 4, c);
    }
    auto arity = [&](std::string_view prefix) -> int {
        if (name.substr(0, prefix.size()) != prefix) {
            return -1;
        }
        auto digits = name.substr(prefix.size());
        if (digits.empty() || digits.size() > 2 ||
            !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
            return -1;
        }
        int n = std::stoi(std::string(digits));
        return (n >= 1 && n <= kMaxTableVariables) ? n : -1;
    };
    if (int n = arity("const0:"); n > 0) {
        return constant_function(n, false);
    }
    if (int n = arity("const1:"); n > 0) {
        return constant_function(n, true);
    }
    if (int n = arity("and:"); n > 0) {
        return and_function(n);
    }
    if (int n = arity("xor:"); n > 0) {
        return xor_function(n);
    }
    throw std::invalid_argument("unknown function name '" + std::string(name) + "'");
}

BooleanFunction constant_function(int n, bool value) {
    BooleanFunction f(n);
    return value ? f.negated() : f;
}

BooleanFunction projection_function(int n, int var) {
    if (var < 0 || var >= n) {
        throw std::out_of_range("projection variable out of range");
    }
    return BooleanFunction::from_index_fn(n, [&](uint64_t i) { return (i >> (n - 1 - var)) & 1; });
}

BooleanFunction and_function(int n) {
    BooleanFunction f(n);
    f.set(f.size() - 1, true);
    return f;
}

BooleanFunction xor_function(int n) {
    return BooleanFunction::from_index_fn(n, [](uint64_t i) { return std::popcount(i) & 1; });
}

bool complement_symmetric(const BooleanFunction &f) {
    uint64_t all = f.size() - 1;
    for (uint64_t i = 0; i < f.size() / 2; i++) {
        if (f.at(i) != f.at(i ^ all)) {
            return false;
        }
    }
    return true;
}

int sensitivity_at_index(const BooleanFunction &f, uint64_t index) {
    bool v = f.at(index);
    int s = 0;
    for (int b = 0; b < f.n(); b++) {
        s += f.at(index ^ (uint64_t{1} << b)) != v;
    }
    return s;
}

int sensitivity_at(const BooleanFunction &f, const InputAssignment &x) {
    if (x.n() != f.n()) {
        throw std::invalid_argument("input arity does not match function arity");
    }
    return sensitivity_at_index(f, x.index());
}

int sensitivity(const BooleanFunction &f) {
    int best = 0;
    for (uint64_t i = 0; i < f.size() && best < f.n(); i++) {
        best = std::max(best, sensitivity_at_index(f, i));
    }
    return best;
}

uint64_t MinimaxTable::root() const {
    return depth.size() - 1;
}

MinimaxTable minimax_table(const BooleanFunction &f) {
    const int n = f.n();
    std::vector<uint64_t> pow3(n + 1, 1);
    for (int j = 1; j <= n; j++) {
        pow3[j] = pow3[j - 1] * 3;
    }
    MinimaxTable t;
    t.n = n;
    t.depth.assign(pow3[n], 0);
    t.best_bit.assign(pow3[n], -1);
    t.constant.assign(pow3[n], -1);

    // Replacing a free digit (2) by 0 or 1 lowers the code, so ascending order visits children first.
    std::vector<uint8_t> digit(n, 0);
    for (uint64_t code = 0; code < pow3[n]; code++) {
        int first_free = -1;
        uint64_t index = 0;
        for (int j = n - 1; j >= 0; j--) {
            if (digit[j] == 2) {
                first_free = j;
            } else {
                index |= uint64_t{digit[j]} << j;
            }
        }
        if (first_free < 0) {
            t.constant[code] = f.at(index);
        } else {
            int8_t c0 = t.constant[code - 2 * pow3[first_free]];
            int8_t c1 = t.constant[code - pow3[first_free]];
            if (c0 >= 0 && c0 == c1) {
                t.constant[code] = c0;
            } else {
                int best = 255;
                for (int j = 0; j < n; j++) {
                    if (digit[j] != 2) {
                        continue;
                    }
                    int d = 1 + std::max(t.depth[code - 2 * pow3[j]], t.depth[code - pow3[j]]);
                    if (d < best) {
                        best = d;
                        t.best_bit[code] = static_cast<int8_t>(j);
                    }
                }
                t.depth[code] = static_cast<uint8_t>(best);
            }
        }
        for (int j = 0; j < n; j++) {
            if (++digit[j] < 3) {
                break;
            }
            digit[j] = 0;
        }
    }
    return t;
}

std::optional<int> deterministic_complexity(const BooleanFunction &f, int cap) {
    if (f.n() > cap) {
        return std::nullopt;
    }
    auto t = minimax_table(f);
    return t.depth[t.root()];
}

std::vector<BooleanFunction> enumerate_complement_symmetric_full_d(int n) {
    if (n != 3 && n != 4) {
        throw std::invalid_argument("enumeration supports n = 3 or 4 only");
    }
    const uint64_t half = uint64_t{1} << (n - 1);
    const uint64_t all = (uint64_t{1} << n) - 1;
    std::vector<BooleanFunction> result;
    // Indices below `half` have x1 = 0, so they are the smaller member of each complement pair.
    for (uint64_t choice = 0; choice < (uint64_t{1} << half); choice++) {
        BooleanFunction f(n);
        for (uint64_t i = 0; i < half; i++) {
            bool v = (choice >> i) & 1;
            f.set(i, v);
            f.set(i ^ all, v);
        }
        if (deterministic_complexity(f, n) == n) {
            result.push_back(std::move(f));
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

BooleanFunction compose_function(const BooleanFunction &h, const BooleanFunction &f1) {
    const int n = h.n();
    const int m = f1.n();
    if (n * m > kMaxTableVariables) {
        throw std::length_error("composed arity " + std::to_string(n * m) + " exceeds table limit");
    }
    const int total = n * m;
    const uint64_t block_mask = (uint64_t{1} << m) - 1;
    return BooleanFunction::from_index_fn(total, [&](uint64_t i) {
        uint64_t outer = 0;
        for (int j = 0; j < n; j++) {
            uint64_t block = (i >> (total - (j + 1) * m)) & block_mask;
            outer = (outer << 1) | static_cast<uint64_t>(f1.at(block));
        }
        return h.at(outer);
    });
}

}  // namespace exactq
