#include "exactq/polynomial.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace exactq {

MultilinearPolynomial MultilinearPolynomial::constant(int n, const Rational &c) {
    MultilinearPolynomial p(n);
    p.add_term(0, c);
    return p;
}

MultilinearPolynomial MultilinearPolynomial::literal(int n, int var) {
    if (var < 0 || var >= n) {
        throw std::out_of_range("variable index out of range");
    }
    MultilinearPolynomial p(n);
    p.add_term(p.mask_of_var(var), 1);
    return p;
}

MultilinearPolynomial MultilinearPolynomial::complement_literal(int n, int var) {
    return constant(n, 1) - literal(n, var);
}

void MultilinearPolynomial::add_term(uint64_t mask, const Rational &c) {
    if (sgn(c) == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

int MultilinearPolynomial::degree() const {
    int d = 0;
    for (const auto &[mask, c] : terms_) {
        d = std::max(d, std::popcount(mask));
    }
    return d;
}

Rational MultilinearPolynomial::evaluate_index(uint64_t index) const {
    Rational r = 0;
    for (const auto &[mask, c] : terms_) {
        if ((index & mask) == mask) {
            r += c;
        }
    }
    return r;
}

Rational MultilinearPolynomial::evaluate(const InputAssignment &x) const {
    if (x.n() != n_) {
        throw std::invalid_argument("input arity does not match polynomial arity");
    }
    return evaluate_index(x.index());
}

void MultilinearPolynomial::require_same_n(const MultilinearPolynomial &o) const {
    if (o.n_ != n_) {
        throw std::invalid_argument("polynomials over different variable counts");
    }
}

MultilinearPolynomial &MultilinearPolynomial::operator+=(const MultilinearPolynomial &o) {
    require_same_n(o);
    for (const auto &[mask, c] : o.terms_) {
        add_term(mask, c);
    }
    return *this;
}

MultilinearPolynomial &MultilinearPolynomial::operator-=(const MultilinearPolynomial &o) {
    require_same_n(o);
    for (const auto &[mask, c] : o.terms_) {
        add_term(mask, -c);
    }
    return *this;
}

MultilinearPolynomial &MultilinearPolynomial::operator*=(const Rational &c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[mask, v] : terms_) {
        v *= c;
    }
    return *this;
}

MultilinearPolynomial operator*(const MultilinearPolynomial &a, const MultilinearPolynomial &b) {
    a.require_same_n(b);
    MultilinearPolynomial r(a.n());
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            r.add_term(ma | mb, ca * cb);
        }
    }
    return r;
}

std::string MultilinearPolynomial::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[mask, c] : terms_) {
        std::string monomial;
        for (int v = 0; v < n_; v++) {
            if (mask & mask_of_var(v)) {
                monomial += (monomial.empty() ? "x" : "*x") + std::to_string(v + 1);
            }
        }
        Rational mag = abs(c);
        std::string term;
        if (monomial.empty()) {
            term = rational_str(mag);
        } else if (mag == 1) {
            term = monomial;
        } else {
            term = rational_str(mag) + "*" + monomial;
        }
        if (out.empty()) {
            out = sgn(c) < 0 ? "-" + term : term;
        } else {
            out += (sgn(c) < 0 ? " - " : " + ") + term;
        }
    }
    return out;
}

void mobius_transform(std::span<int64_t> values) {
    const uint64_t size = values.size();
    for (uint64_t bit = 1; bit < size; bit <<= 1) {
        for (uint64_t base = 0; base < size; base += bit << 1) {
            for (uint64_t i = base; i < base + bit; i++) {
                values[i | bit] -= values[i];
            }
        }
    }
}

void zeta_transform(std::span<int64_t> values) {
    const uint64_t size = values.size();
    for (uint64_t bit = 1; bit < size; bit <<= 1) {
        for (uint64_t base = 0; base < size; base += bit << 1) {
            for (uint64_t i = base; i < base + bit; i++) {
                values[i | bit] += values[i];
            }
        }
    }
}

void mobius_transform_mod(std::span<uint32_t> values, uint32_t prime) {
    const uint64_t size = values.size();
    for (uint64_t bit = 1; bit < size; bit <<= 1) {
        for (uint64_t base = 0; base < size; base += bit << 1) {
            for (uint64_t i = base; i < base + bit; i++) {
                uint32_t hi = values[i | bit];
                uint32_t lo = values[i];
                values[i | bit] = hi >= lo ? hi - lo : hi + (prime - lo);
            }
        }
    }
}

namespace {

template <typename T>
int max_popcount_impl(std::span<const T> coefficients) {
    int best = 0;
    for (uint64_t i = 0; i < coefficients.size(); i++) {
        if (coefficients[i] != 0) {
            best = std::max(best, std::popcount(i));
        }
    }
    return best;
}

}  // namespace

int max_nonzero_popcount(std::span<const int64_t> coefficients) {
    return max_popcount_impl(coefficients);
}

int max_nonzero_popcount(std::span<const uint32_t> coefficients) {
    return max_popcount_impl(coefficients);
}

MultilinearPolynomial interpolate(const BooleanFunction &f, int ceiling) {
    if (f.n() > ceiling) {
        throw std::length_error(
            "arity " + std::to_string(f.n()) + " exceeds interpolation ceiling " + std::to_string(ceiling));
    }
    std::vector<int64_t> a(f.size());
    for (uint64_t i = 0; i < a.size(); i++) {
        a[i] = f.at(i);
    }
    mobius_transform(a);
    MultilinearPolynomial p(f.n());
    for (uint64_t mask = 0; mask < a.size(); mask++) {
        if (a[mask] != 0) {
            p.add_term(mask, Rational(static_cast<long>(a[mask])));
        }
    }
    return p;
}

int degree(const MultilinearPolynomial &p) {
    return p.degree();
}

int degree_of(const BooleanFunction &f, int ceiling) {
    return exact_degree(f.n(), [&](uint64_t i) { return f.at(i); }, ceiling);
}

bool is_prime(uint64_t v) {
    if (v < 2) {
        return false;
    }
    for (uint64_t d = 2; d * d <= v; d++) {
        if (v % d == 0) {
            return false;
        }
    }
    return true;
}

uint64_t next_prime(uint64_t v) {
    uint64_t c = v + 1;
    while (!is_prime(c)) {
        c++;
    }
    return c;
}

void require_degree_prime(uint64_t prime, int n) {
    if (prime <= 2 || prime >= (uint64_t{1} << 31) || !is_prime(prime)) {
        throw std::invalid_argument("modulus must be a prime in (2, 2^31), got " + std::to_string(prime));
    }
    if (n < 1 || n > kMaxTableVariables) {
        throw std::length_error("arity " + std::to_string(n) + " outside 1.." + std::to_string(kMaxTableVariables));
    }
}

int degree_mod_p(const BooleanFunction &f, uint64_t prime) {
    return degree_mod_p(f.n(), [&](uint64_t i) { return f.at(i); }, prime);
}

bool verify_represents(const MultilinearPolynomial &p, const BooleanFunction &f) {
    if (p.n() != f.n()) {
        throw std::invalid_argument("polynomial and function arities differ");
    }
    for (uint64_t i = 0; i < f.size(); i++) {
        if (p.evaluate_index(i) != Rational(f.at(i) ? 1 : 0)) {
            return false;
        }
    }
    return true;
}

int qe_lower_bound_from_degree(int degree) {
    return (degree + 1) / 2;
}

int qe_lower_bound(const BooleanFunction &f) {
    return qe_lower_bound_from_degree(degree_of(f));
}

RangePolynomial::RangePolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto &c : coeffs_) {
        c.canonicalize();
    }
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

Rational RangePolynomial::operator()(const Rational &z) const {
    Rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        r = r * z + *it;
    }
    return r;
}

std::string RangePolynomial::str() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (int d = degree(); d >= 0; d--) {
        const Rational &c = coeffs_[d];
        if (sgn(c) == 0) {
            continue;
        }
        Rational mag = abs(c);
        std::string power = d == 0 ? "" : (d == 1 ? "z" : "z^" + std::to_string(d));
        std::string term;
        if (power.empty()) {
            term = rational_str(mag);
        } else if (mag == 1) {
            term = power;
        } else {
            term = rational_str(mag) + "*" + power;
        }
        if (out.empty()) {
            out = sgn(c) < 0 ? "-" + term : term;
        } else {
            out += (sgn(c) < 0 ? " - " : " + ") + term;
        }
    }
    return out;
}

RangePolynomial fit_range_polynomial(std::span<const Rational> values) {
    if (values.size() < 2) {
        throw std::invalid_argument("need at least two sample values");
    }
    const size_t count = values.size();
    // Forward differences at 0 give the Newton form sum_j Δ^j v_0 · C(z, j).
    std::vector<Rational> diff(values.begin(), values.end());
    std::vector<Rational> leading(count);
    for (size_t j = 0; j < count; j++) {
        leading[j] = diff[0];
        for (size_t i = 0; i + 1 < count - j; i++) {
            diff[i] = diff[i + 1] - diff[i];
        }
    }
    std::vector<Rational> result(count, 0);
    // falling holds the coefficients of z(z-1)...(z-j+1) / j!.
    std::vector<Rational> falling{1};
    for (size_t j = 0; j < count; j++) {
        for (size_t d = 0; d < falling.size(); d++) {
            result[d] += leading[j] * falling[d];
        }
        std::vector<Rational> next(falling.size() + 1, 0);
        for (size_t d = 0; d < falling.size(); d++) {
            next[d + 1] += falling[d];
            next[d] -= falling[d] * static_cast<long>(j);
        }
        for (auto &c : next) {
            c /= static_cast<long>(j + 1);
        }
        falling = std::move(next);
    }
    return RangePolynomial(std::move(result));
}

RangePolynomial fit_range_polynomial(std::span<const int> values) {
    std::vector<Rational> q;
    q.reserve(values.size());
    for (int v : values) {
        q.emplace_back(v);
    }
    return fit_range_polynomial(std::span<const Rational>(q));
}

Rational kth_difference(std::span<const int> values) {
    const long k = static_cast<long>(values.size()) - 1;
    mpz_class binom = 1;
    Rational r = 0;
    for (long i = 0; i <= k; i++) {
        if (i > 0) {
            binom = binom * (k - i + 1) / i;
        }
        Rational term(binom * values[i]);
        r += ((k - i) % 2 == 0) ? term : Rational(-term);
    }
    return r;
}

Collapser find_collapser(int k) {
    if (k < 3 || k > 15 || k % 2 == 0) {
        throw std::invalid_argument("collapser range must be an odd k in [3, 15]");
    }
    // Enumerate v_2..v_k as a binary counter, v_2 most significant, so the first hit is
    // lexicographically smallest among vectors starting (1, 0).
    const int free_bits = k - 1;
    for (uint32_t code = 0; code < (uint32_t{1} << free_bits); code++) {
        std::vector<int> v(k + 1);
        v[0] = 1;
        v[1] = 0;
        for (int i = 2; i <= k; i++) {
            v[i] = (code >> (k - i)) & 1;
        }
        if (sgn(kth_difference(v)) != 0) {
            continue;
        }
        RangePolynomial p = fit_range_polynomial(std::span<const int>(v));
        if (p.degree() == k - 1) {
            return Collapser{k, std::move(v), std::move(p)};
        }
    }
    throw std::logic_error("no collapser found for k = " + std::to_string(k));
}

RangePolynomial reference_collapser_7() {
    return RangePolynomial({
        Rational(0),
        Rational(2) + Rational(11, 12),
        -(Rational(5) + Rational(31, 36)),
        Rational(3) + Rational(15, 16),
        -(Rational(1) + Rational(19, 144)),
        Rational(7, 48),
        Rational(-1, 144),
    });
}

CollapserCheck check_collapser(const RangePolynomial &p, int k) {
    CollapserCheck c;
    c.degree = p.degree();
    c.boolean_valued = true;
    for (int i = 0; i <= k; i++) {
        Rational v = p(Rational(i));
        if (v != 0 && v != 1) {
            c.boolean_valued = false;
        }
        c.values.push_back(std::move(v));
    }
    c.first_pair_differs = c.values[0] != c.values[1];
    c.usable = c.boolean_valued && c.degree == k - 1 && c.first_pair_differs;
    return c;
}

}  // namespace exactq
