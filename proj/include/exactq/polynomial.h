#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactq/boolfn.h"
#include "exactq/exact_scalar.h"

namespace exactq {

/// Arity ceiling for exact interpolation (one int64 per input: 2^24 · 8 bytes = 128 MiB).
constexpr int kDefaultInterpolationCeiling = 24;

/// Multilinear polynomial over n variables, stored as monomial mask -> coefficient.
///
/// Masks use the truth-table bit layout: x1 is bit n-1, xn is bit 0. The monomial with mask m
/// evaluates to 1 at index i exactly when (i & m) == m.
class MultilinearPolynomial {
   public:
    explicit MultilinearPolynomial(int n) : n_(n) {
    }

    static MultilinearPolynomial constant(int n, const Rational &c);
    /// x_{var+1}.
    static MultilinearPolynomial literal(int n, int var);
    /// 1 - x_{var+1}.
    static MultilinearPolynomial complement_literal(int n, int var);

    int n() const {
        return n_;
    }
    const std::map<uint64_t, Rational> &terms() const {
        return terms_;
    }
    uint64_t mask_of_var(int var) const {
        return uint64_t{1} << (n_ - 1 - var);
    }

    /// Adds c to the coefficient of `mask`, dropping it if the sum is zero.
    void add_term(uint64_t mask, const Rational &c);
    int degree() const;
    Rational evaluate_index(uint64_t index) const;
    Rational evaluate(const InputAssignment &x) const;

    MultilinearPolynomial &operator+=(const MultilinearPolynomial &o);
    MultilinearPolynomial &operator-=(const MultilinearPolynomial &o);
    MultilinearPolynomial &operator*=(const Rational &c);
    friend MultilinearPolynomial operator+(MultilinearPolynomial a, const MultilinearPolynomial &b) {
        return a += b;
    }
    friend MultilinearPolynomial operator-(MultilinearPolynomial a, const MultilinearPolynomial &b) {
        return a -= b;
    }
    friend MultilinearPolynomial operator*(MultilinearPolynomial a, const Rational &c) {
        return a *= c;
    }
    friend MultilinearPolynomial operator*(const Rational &c, MultilinearPolynomial a) {
        return a *= c;
    }
    /// Product with x_i^2 reduced to x_i.
    friend MultilinearPolynomial operator*(const MultilinearPolynomial &a, const MultilinearPolynomial &b);

    bool operator==(const MultilinearPolynomial &) const = default;

    /// Human-readable form, e.g. "x1 + x2 - 2*x1*x2".
    std::string str() const;

   private:
    void require_same_n(const MultilinearPolynomial &o) const;

    int n_;
    std::map<uint64_t, Rational> terms_;
};

/// In-place subset (Möbius) transform: values[S] becomes sum_{T ⊆ S} (-1)^{|S|-|T|} values[T].
void mobius_transform(std::span<int64_t> values);
/// Inverse (zeta) transform: values[S] becomes sum_{T ⊆ S} values[T].
void zeta_transform(std::span<int64_t> values);
/// Möbius transform with entries reduced modulo `prime` (entries must already be < prime).
void mobius_transform_mod(std::span<uint32_t> values, uint32_t prime);

/// Largest popcount among indices holding a nonzero entry; 0 when all are zero.
int max_nonzero_popcount(std::span<const int64_t> coefficients);
int max_nonzero_popcount(std::span<const uint32_t> coefficients);

/// The unique representing polynomial of f. Throws std::length_error when f.n() > ceiling.
MultilinearPolynomial interpolate(const BooleanFunction &f, int ceiling = kDefaultInterpolationCeiling);

int degree(const MultilinearPolynomial &p);
/// deg(f) straight from the transform, without building the term map.
int degree_of(const BooleanFunction &f, int ceiling = kDefaultInterpolationCeiling);

/// Exact degree of a function given by its value at each truth-table index.
template <typename ValueAt>
int exact_degree(int n, ValueAt &&value_at, int ceiling = kDefaultInterpolationCeiling) {
    if (n > ceiling) {
        throw std::length_error("arity " + std::to_string(n) + " exceeds interpolation ceiling " + std::to_string(ceiling));
    }
    std::vector<int64_t> a(uint64_t{1} << n);
    for (uint64_t i = 0; i < a.size(); i++) {
        a[i] = value_at(i) ? 1 : 0;
    }
    mobius_transform(a);
    return max_nonzero_popcount(a);
}

void require_degree_prime(uint64_t prime, int n);

/// Degree of the transform taken modulo `prime`. A lower bound on deg(f), equal to it unless some
/// nonzero integer coefficient of top size is divisible by `prime`.
/// Throws std::invalid_argument when prime <= 2, prime is composite or prime >= 2^31, and
/// std::length_error when n > 27.
template <typename ValueAt>
int degree_mod_p(int n, ValueAt &&value_at, uint64_t prime) {
    require_degree_prime(prime, n);
    std::vector<uint32_t> a(uint64_t{1} << n);
    for (uint64_t i = 0; i < a.size(); i++) {
        a[i] = value_at(i) ? 1 : 0;
    }
    mobius_transform_mod(a, static_cast<uint32_t>(prime));
    return max_nonzero_popcount(std::span<const uint32_t>(a));
}

int degree_mod_p(const BooleanFunction &f, uint64_t prime);

bool is_prime(uint64_t v);
/// Smallest prime strictly greater than v.
uint64_t next_prime(uint64_t v);

/// p(x) == f(x) on all 2^n inputs. Throws std::invalid_argument on arity mismatch.
bool verify_represents(const MultilinearPolynomial &p, const BooleanFunction &f);

/// ⌈deg(f)/2⌉, the exact-quantum lower bound.
int qe_lower_bound(const BooleanFunction &f);
int qe_lower_bound_from_degree(int degree);

/// Univariate polynomial c0 + c1 z + ... + cd z^d with rational coefficients.
class RangePolynomial {
   public:
    RangePolynomial() = default;
    explicit RangePolynomial(std::vector<Rational> coeffs);

    const std::vector<Rational> &coeffs() const {
        return coeffs_;
    }
    /// -1 for the zero polynomial.
    int degree() const {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    Rational operator()(const Rational &z) const;

    bool operator==(const RangePolynomial &) const = default;
    /// e.g. "1/2*z^2 - 3/2*z + 1".
    std::string str() const;

   private:
    std::vector<Rational> coeffs_;
};

/// The unique polynomial of degree <= k through (i, values[i]) for i = 0..k.
/// Throws std::invalid_argument when fewer than two values are given.
RangePolynomial fit_range_polynomial(std::span<const Rational> values);
RangePolynomial fit_range_polynomial(std::span<const int> values);

/// sum_i (-1)^{k-i} C(k,i) v_i over values v_0..v_k.
Rational kth_difference(std::span<const int> values);

struct Collapser {
    int k = 0;
    std::vector<int> values;
    RangePolynomial polynomial;
};

/// Lexicographically smallest 0/1 vector v_0..v_k with v_0 = 1, v_1 = 0 and a vanishing k-th
/// difference whose fit has degree exactly k-1. Requires odd k in [3, 15].
Collapser find_collapser(int k);

/// The 7-range collapser as published, mixed numbers read as integer plus fraction
/// (-1/144 z^6 + 7/48 z^5 - 163/144 z^4 + 63/16 z^3 - 211/36 z^2 + 35/12 z).
RangePolynomial reference_collapser_7();

struct CollapserCheck {
    std::vector<Rational> values;
    bool boolean_valued = false;
    int degree = -1;
    bool first_pair_differs = false;
    /// Boolean on 0..k, degree k-1 and v0 != v1: fit for the zero-input sensitivity argument.
    bool usable = false;
};
CollapserCheck check_collapser(const RangePolynomial &p, int k);

}  // namespace exactq
