#include "exactq/exact_scalar.h"

#include <cmath>
#include <stdexcept>

namespace exactq {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

// Parses one term, returning (value, carries_r2).
std::pair<Rational, bool> parse_term(std::string_view s) {
    s = trim(s);
    bool r2 = false;
    if (s.size() >= 2 && s.substr(s.size() - 2) == "r2") {
        r2 = true;
        s = trim(s.substr(0, s.size() - 2));
        if (s.empty() || s == "+") {
            return {Rational(1), true};
        }
        if (s == "-") {
            return {Rational(-1), true};
        }
    }
    return {parse_rational(s), r2};
}

}  // namespace

std::string rational_str(const Rational &value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    num = trim(num);
    den = trim(den);
    if (!num.empty() && num.front() == '+') {
        num.remove_prefix(1);
    }
    if (!is_integer_text(num) || !is_integer_text(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n{std::string(num)};
    mpz_class d{std::string(den)};
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

ExactScalar::ExactScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
}

ExactScalar ExactScalar::operator-() const {
    return ExactScalar(-a_, -b_);
}

ExactScalar &ExactScalar::operator+=(const ExactScalar &o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

ExactScalar &ExactScalar::operator-=(const ExactScalar &o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

ExactScalar &ExactScalar::operator*=(const ExactScalar &o) {
    // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

int ExactScalar::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sa == 0 || sb == 0 || sa == sb) {
        return sa != 0 ? sa : sb;
    }
    // Opposite signs: compare a^2 with 2 b^2.
    int cmp_ab = cmp(a_ * a_, 2 * b_ * b_);
    return cmp_ab > 0 ? sa : (cmp_ab < 0 ? sb : 0);
}

double ExactScalar::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(2.0);
}

std::string ExactScalar::str() const {
    if (sgn(b_) == 0) {
        return rational_str(a_);
    }
    std::string r2 = rational_str(abs(b_)) + " r2";
    if (sgn(a_) == 0) {
        return sgn(b_) < 0 ? "-" + r2 : r2;
    }
    return rational_str(a_) + (sgn(b_) < 0 ? " - " : " + ") + r2;
}

ExactScalar ExactScalar::parse(std::string_view text) {
    text = trim(text);
    if (text.empty()) {
        throw std::invalid_argument("empty scalar");
    }
    // Split on a binary '+' or '-' that is surrounded by spaces.
    for (size_t i = 1; i + 1 < text.size(); i++) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] == ' ' && text[i + 1] == ' ') {
            auto [lhs, lhs_r2] = parse_term(text.substr(0, i));
            auto [rhs, rhs_r2] = parse_term(text.substr(i + 1));
            if (lhs_r2 || !rhs_r2) {
                throw std::invalid_argument("scalar must read 'a + b r2': '" + std::string(text) + "'");
            }
            if (text[i] == '-') {
                rhs = -rhs;
            }
            return ExactScalar(lhs, rhs);
        }
    }
    auto [v, r2] = parse_term(text);
    return r2 ? ExactScalar(0, v) : ExactScalar(v, 0);
}

}  // namespace exactq
