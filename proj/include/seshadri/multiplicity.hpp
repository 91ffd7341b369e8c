#pragma once

// Multiplicity vectors (m_1 >= ... >= m_r >= 0) and the two numerical lemmas
// the bounds engine rests on: Xu's self-intersection floor for moving curves
// and Kuechle's inequality.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "seshadri/rational.hpp"

namespace seshadri {

class MultiplicityVector {
public:
    MultiplicityVector() = default;

    /// Throws std::invalid_argument unless non-empty, non-increasing, non-negative, not all zero.
    explicit MultiplicityVector(std::vector<std::int64_t> m) : m_(std::move(m)) {
        if (m_.empty()) throw std::invalid_argument("multiplicity vector must have at least one entry");
        for (std::size_t i = 0; i < m_.size(); ++i) {
            if (m_[i] < 0) throw std::invalid_argument("multiplicities must be non-negative");
            if (i && m_[i] > m_[i - 1]) throw std::invalid_argument("multiplicities must be non-increasing");
        }
        if (m_.front() == 0) throw std::invalid_argument("multiplicity vector is all zero");
    }
    MultiplicityVector(std::initializer_list<std::int64_t> m) : MultiplicityVector(std::vector<std::int64_t>(m)) {}

    /// Sorts `m` non-increasingly first.
    static MultiplicityVector from_unsorted(std::vector<std::int64_t> m) {
        std::sort(m.begin(), m.end(), std::greater<>());
        return MultiplicityVector(std::move(m));
    }

    std::size_t points() const { return m_.size(); }
    std::span<const std::int64_t> values() const { return m_; }
    std::int64_t operator[](std::size_t i) const { return m_[i]; }

    /// Number of strictly positive entries (they form a prefix).
    std::size_t support() const {
        return static_cast<std::size_t>(std::count_if(m_.begin(), m_.end(), [](auto v) { return v > 0; }));
    }
    MultiplicityVector positive_part() const {
        return MultiplicityVector(std::vector<std::int64_t>(m_.begin(), m_.begin() + support()));
    }
    BigInt sum() const {
        BigInt s = 0;
        for (auto v : m_) s += v;
        return s;
    }
    BigInt sum_squares() const {
        BigInt s = 0;
        for (auto v : m_) s += BigInt(v) * v;
        return s;
    }
    /// Smallest positive entry.
    std::int64_t min_positive() const { return m_[support() - 1]; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < m_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(m_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
    friend auto operator<=>(const MultiplicityVector& a, const MultiplicityVector& b) { return a.m_ <=> b.m_; }

private:
    std::vector<std::int64_t> m_;
};

/// Lower bound for C_t^2 of a non-trivial moving family with multiplicities m at
/// the moving points, evaluated on the positive support:
///   one point, m = 1        -> 0 (a moving curve is nef)
///   one point, m >= 2       -> m(m-1) + 1
///   two or more points      -> sum m_i^2 - min m_i
inline BigInt xu_floor(const MultiplicityVector& m) {
    const std::size_t s = m.support();
    if (s == 0) throw std::invalid_argument("xu_floor of an all-zero vector");
    if (s == 1) {
        const BigInt m1 = m[0];
        return m1 == 1 ? BigInt(0) : BigInt(m1 * (m1 - 1) + 1);
    }
    return m.sum_squares() - m.min_positive();
}

class KuechleHypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// (r+1) sum m_i^2 > (sum m_i)^2 + m_r (r+1), evaluated in `Int`.
/// Caller guarantees the lemma's hypotheses and that `Int` cannot overflow.
template <typename Int>
bool kuechle_inequality(std::span<const std::int64_t> m) {
    const Int r = static_cast<Int>(m.size());
    Int sum = 0;
    Int sum_sq = 0;
    for (auto v : m) {
        sum += static_cast<Int>(v);
        sum_sq += static_cast<Int>(v) * static_cast<Int>(v);
    }
    const Int last = static_cast<Int>(m.back());
    return (r + 1) * sum_sq > sum * sum + last * (r + 1);
}

/// Throws KuechleHypothesisError when r < 2, m_r < 1 or m_1 < 2.
inline bool kuechle_holds(const MultiplicityVector& m) {
    if (m.points() < 2) throw KuechleHypothesisError("Kuechle's lemma needs r >= 2");
    if (m[m.points() - 1] < 1) throw KuechleHypothesisError("Kuechle's lemma needs m_r >= 1");
    if (m[0] < 2) throw KuechleHypothesisError("Kuechle's lemma needs m_1 >= 2");
    return kuechle_inequality<BigInt>(m.values());
}

struct KuechleScan {
    std::size_t r_max = 0;
    std::int64_t m_max = 0;
    std::uint64_t cases = 0;
    std::vector<MultiplicityVector> violations;
};

/// Every non-increasing vector with 2 <= r <= r_max, 1 <= m_i <= m_max, m_1 >= 2.
inline KuechleScan kuechle_scan(std::size_t r_max, std::int64_t m_max) {
    if (r_max < 2 || m_max < 2) throw std::invalid_argument("kuechle_scan needs r_max >= 2 and m_max >= 2");
    KuechleScan scan{r_max, m_max, 0, {}};
    // (r+1) r m_max^2 bounds every intermediate; fall back to BigInt if it may overflow int64.
    const long double worst = static_cast<long double>(r_max + 1) * static_cast<long double>(r_max) *
                              static_cast<long double>(m_max) * static_cast<long double>(m_max) * 4.0L;
    const bool fits = worst < static_cast<long double>(std::numeric_limits<std::int64_t>::max());

    std::vector<std::int64_t> m;
    auto visit = [&](auto&& self, std::size_t len, std::int64_t cap) -> void {
        for (std::int64_t v = cap; v >= 1; --v) {
            m.push_back(v);
            if (m.size() == len) {
                if (m.front() >= 2) {
                    ++scan.cases;
                    const bool ok = fits ? kuechle_inequality<std::int64_t>(m) : kuechle_inequality<BigInt>(m);
                    if (!ok) scan.violations.emplace_back(m);
                }
            } else {
                self(self, len, v);
            }
            m.pop_back();
        }
    };
    for (std::size_t r = 2; r <= r_max; ++r) visit(visit, r, m_max);
    std::sort(scan.violations.begin(), scan.violations.end());
    return scan;
}

}  // namespace seshadri
