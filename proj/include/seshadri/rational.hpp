#pragma once

// Exact rationals over arbitrary-precision integers.

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace seshadri {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

/// floor(sqrt(n)) for n >= 0.
inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

inline BigInt parse_bigint(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed integer literal: " + s);
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("malformed integer literal: " + s);
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s);
}

/// p/q with q > 0 and gcd(|p|, q) = 1. Zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(implicit)
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(std::int64_t n, std::int64_t d) : Rational(BigInt(n), BigInt(d)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    BigInt floor() const {
        BigInt q = num_ / den_;  // truncates toward zero
        if (num_ < 0 && q * den_ != num_) q -= 1;
        return q;
    }
    BigInt ceil() const {
        BigInt q = num_ / den_;
        if (num_ > 0 && q * den_ != num_) q += 1;
        return q;
    }

    Rational operator-() const { return Rational(BigInt(-num_), den_, raw_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("division by zero rational");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt l = a.num_ * b.den_;
        const BigInt r = b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    /// Accepts "p", "-p", "p/q".
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_bigint(text));
        BigInt d = parse_bigint(text.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator in rational literal");
        return Rational(parse_bigint(text.substr(0, slash)), std::move(d));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    struct raw_tag {};
    Rational(BigInt n, BigInt d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(abs_big(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

/// Largest integer n >= 0 with n^2 <= x, for x >= 0.
inline BigInt floor_sqrt(const Rational& x) {
    if (x.sign() < 0) throw std::domain_error("floor_sqrt of negative rational");
    return isqrt(x.floor());
}

/// Smallest integer n >= 0 with n^2 >= x.
inline BigInt ceil_sqrt(const Rational& x) {
    if (x.sign() <= 0) return 0;
    BigInt n = floor_sqrt(x);
    if (Rational(n * n) < x) n += 1;
    return n;
}

}  // namespace seshadri
