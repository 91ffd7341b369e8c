#pragma once

// Numbers of the form q * sqrt(s), q rational, s square-free.
//
// Every Seshadri-type quantity handled by the library (upper bounds,
// thresholds, catalog quotients) is a single radical-rational, so the type
// is closed under products and exact comparison without a general
// algebraic-number package.

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "seshadri/rational.hpp"

namespace seshadri {

enum class Cmp { lt, eq, gt };

inline const char* to_string(Cmp c) {
    switch (c) {
        case Cmp::lt: return "<";
        case Cmp::eq: return "=";
        case Cmp::gt: return ">";
    }
    return "?";
}

inline Cmp compare(const Rational& a, const Rational& b) {
    const auto o = a <=> b;
    if (o < 0) return Cmp::lt;
    if (o > 0) return Cmp::gt;
    return Cmp::eq;
}

/// Splits n >= 0 into (k, s) with n = k^2 * s and s square-free.
inline std::pair<BigInt, BigInt> split_square_factor(BigInt n) {
    if (n < 0) throw std::domain_error("negative radicand");
    if (n == 0) return {0, 1};
    BigInt k = 1;
    BigInt s = 1;
    for (BigInt p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) k *= p;
        if (e % 2 == 1) s *= p;
    }
    s *= n;  // leftover prime (or 1)
    return {k, s};
}

class RadicalRational {
public:
    RadicalRational() : coeff_(0), radicand_(1) {}
    RadicalRational(Rational q) : coeff_(std::move(q)), radicand_(1) {}  // NOLINT(implicit)
    RadicalRational(std::int64_t n) : coeff_(n), radicand_(1) {}  // NOLINT(implicit)

    /// Pulls square factors of `radicand` into `coeff`; a zero value becomes (0, 1).
    static RadicalRational normalize(const Rational& coeff, const BigInt& radicand) {
        if (radicand < 0) throw std::domain_error("negative radicand");
        RadicalRational r;
        if (coeff.is_zero() || radicand == 0) return r;
        auto [k, s] = split_square_factor(radicand);
        r.coeff_ = coeff * Rational(k);
        r.radicand_ = std::move(s);
        return r;
    }

    /// sqrt(q) for rational q >= 0: sqrt(p/d) = (1/d) * sqrt(p*d).
    static RadicalRational sqrt_of(const Rational& q) {
        if (q.sign() < 0) throw std::domain_error("sqrt of negative rational");
        return normalize(Rational(BigInt(1), q.den()), q.num() * q.den());
    }

    const Rational& coeff() const { return coeff_; }
    const BigInt& radicand() const { return radicand_; }

    int sign() const { return coeff_.sign(); }
    bool is_rational() const { return radicand_ == 1; }

    /// coeff^2 * radicand; exact square of the represented value.
    Rational square() const { return coeff_ * coeff_ * Rational(radicand_); }

    RadicalRational operator-() const { return normalize(-coeff_, radicand_); }

    friend RadicalRational operator*(const RadicalRational& a, const RadicalRational& b) {
        return normalize(a.coeff_ * b.coeff_, a.radicand_ * b.radicand_);
    }

    friend bool operator==(const RadicalRational& a, const RadicalRational& b) {
        return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
    }

    friend Cmp cmp(const RadicalRational& a, const RadicalRational& b) {
        const int sa = a.sign();
        const int sb = b.sign();
        if (sa != sb) return sa < sb ? Cmp::lt : Cmp::gt;
        if (sa == 0) return Cmp::eq;
        const Cmp mag = compare(a.square(), b.square());
        if (sa > 0) return mag;
        return mag == Cmp::lt ? Cmp::gt : (mag == Cmp::gt ? Cmp::lt : Cmp::eq);
    }

    friend std::strong_ordering operator<=>(const RadicalRational& a, const RadicalRational& b) {
        switch (cmp(a, b)) {
            case Cmp::lt: return std::strong_ordering::less;
            case Cmp::gt: return std::strong_ordering::greater;
            case Cmp::eq: break;
        }
        return std::strong_ordering::equal;
    }

    /// Human-readable: "3/2", "√3", "2·√5", "(1/2)·√2", "-√3".
    std::string str() const {
        if (radicand_ == 1) return coeff_.str();
        const std::string root = "√" + radicand_.str();
        if (coeff_ == Rational(1)) return root;
        if (coeff_ == Rational(-1)) return "-" + root;
        if (coeff_.is_integer()) return coeff_.str() + "·" + root;
        return "(" + coeff_.str() + ")·" + root;
    }

    /// Machine-readable input form: "p/q" or "p/q*sqrt(s)".
    std::string expr() const {
        if (radicand_ == 1) return coeff_.str();
        return coeff_.str() + "*sqrt(" + radicand_.str() + ")";
    }

    /// Rounded to `places` decimals (round half away from zero), no floating point.
    std::string decimal(unsigned places = 6) const {
        BigInt scale = 1;
        for (unsigned i = 0; i < places; ++i) scale *= 10;
        // floor(2|x|*10^p) = isqrt(floor(4 x^2 10^{2p})); rounding = floor((that + 1) / 2).
        const Rational four_sq = square() * Rational(BigInt(4) * scale * scale);
        const BigInt twice = isqrt(four_sq.floor());
        const BigInt rounded = (twice + 1) / 2;
        std::string digits = rounded.str();
        if (places > 0) {
            if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
            digits.insert(digits.size() - places, ".");
        }
        if (sign() < 0 && rounded != 0) digits.insert(0, "-");
        return digits;
    }

    /// Grammar: "p", "p/q", "sqrt(s)", "p/q*sqrt(s)" (whitespace ignored).
    static RadicalRational parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (c != ' ' && c != '\t') s.push_back(c);
        if (s.empty()) throw std::invalid_argument("empty number literal");
        const auto pos = s.find("sqrt(");
        if (pos == std::string::npos) return RadicalRational(Rational::parse(s));
        if (s.back() != ')') throw std::invalid_argument("malformed radical literal: " + s);
        const BigInt radicand = parse_bigint(std::string_view(s).substr(pos + 5, s.size() - pos - 6));
        if (radicand < 0) throw std::invalid_argument("negative radicand: " + s);
        Rational coeff(1);
        if (pos > 0) {
            if (s[pos - 1] != '*') throw std::invalid_argument("malformed radical literal: " + s);
            const std::string head = s.substr(0, pos - 1);
            coeff = head == "-" ? Rational(-1) : Rational::parse(head);
        }
        return normalize(coeff, radicand);
    }

    friend std::ostream& operator<<(std::ostream& os, const RadicalRational& r) { return os << r.str(); }

private:
    Rational coeff_;
    BigInt radicand_;
};

inline RadicalRational rr_normalize(const Rational& coeff, const BigInt& radicand) {
    return RadicalRational::normalize(coeff, radicand);
}
inline Cmp rr_cmp(const RadicalRational& a, const RadicalRational& b) { return cmp(a, b); }
inline RadicalRational rr_mul(const RadicalRational& a, const RadicalRational& b) { return a * b; }
inline Rational rr_square(const RadicalRational& a) { return a.square(); }

}  // namespace seshadri
