#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace exactq {

using Rational = mpq_class;

/// Canonical "num/den" text for a rational; integers print without a denominator.
std::string rational_str(const Rational &q);

/// Parses "num" or "num/den". Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// An element a + b·√2 of the field Q(√2), exact in both components.
///
/// Every matrix entry used by the built-in algorithms ({0, ±1, ±1/2, ±1/√2}) lives here, so
/// "probability exactly 1" is a plain component-wise comparison.
class ExactScalar {
   public:
    ExactScalar() = default;
    ExactScalar(long v) : a_(v) {
    }
    ExactScalar(Rational a, Rational b = 0);

    static ExactScalar sqrt2() {
        return ExactScalar(0, 1);
    }
    /// 1/√2 = (1/2)·√2.
    static ExactScalar inv_sqrt2() {
        return ExactScalar(0, Rational(1, 2));
    }

    const Rational &rational_part() const {
        return a_;
    }
    const Rational &sqrt2_part() const {
        return b_;
    }

    bool is_zero() const {
        return sgn(a_) == 0 && sgn(b_) == 0;
    }
    bool is_rational() const {
        return sgn(b_) == 0;
    }
    /// Exact sign of a + b·√2: -1, 0 or 1.
    int sign() const;

    ExactScalar operator-() const;
    ExactScalar &operator+=(const ExactScalar &o);
    ExactScalar &operator-=(const ExactScalar &o);
    ExactScalar &operator*=(const ExactScalar &o);

    friend ExactScalar operator+(ExactScalar x, const ExactScalar &y) {
        return x += y;
    }
    friend ExactScalar operator-(ExactScalar x, const ExactScalar &y) {
        return x -= y;
    }
    friend ExactScalar operator*(ExactScalar x, const ExactScalar &y) {
        return x *= y;
    }
    friend bool operator==(const ExactScalar &x, const ExactScalar &y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    /// Square of a real amplitude, which is what measurement needs.
    ExactScalar squared() const {
        return *this * *this;
    }

    double to_double() const;

    /// "0", "1/2", "1/2 r2", "-1 + 1/2 r2". The r2 suffix marks the √2 component.
    std::string str() const;

    /// Inverse of str(). Accepts "a", "b r2", "a + b r2" and "a - b r2".
    static ExactScalar parse(std::string_view text);

   private:
    Rational a_ = 0;
    Rational b_ = 0;
};

}  // namespace exactq
