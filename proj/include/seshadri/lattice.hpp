#pragma once

// Neron-Severi lattices: Gram matrices of signature (1, n-1), divisor
// classes in a fixed basis, blow-ups at r points, and the Hodge-index and
// adjunction arithmetic used throughout the bounds engine.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seshadri/rational.hpp"

namespace seshadri {

class LatticeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public LatticeError {
public:
    DimensionMismatch(std::size_t expected, std::size_t got)
        : LatticeError("class has " + std::to_string(got) + " coordinates, lattice rank is " +
                       std::to_string(expected)) {}
};

/// Coordinates of a divisor class in the lattice basis.
class DivisorClass {
public:
    DivisorClass() = default;
    explicit DivisorClass(std::vector<BigInt> coords) : coords_(std::move(coords)) {}
    DivisorClass(std::initializer_list<std::int64_t> coords) {
        coords_.reserve(coords.size());
        for (auto c : coords) coords_.emplace_back(c);
    }

    static DivisorClass zero(std::size_t rank) { return DivisorClass(std::vector<BigInt>(rank, 0)); }
    static DivisorClass basis(std::size_t rank, std::size_t i) {
        auto c = zero(rank);
        c.coords_.at(i) = 1;
        return c;
    }

    std::size_t size() const { return coords_.size(); }
    const std::vector<BigInt>& coords() const { return coords_; }
    const BigInt& operator[](std::size_t i) const { return coords_[i]; }
    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
        check_same(a, b);
        DivisorClass r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r.coords_[i] += b.coords_[i];
        return r;
    }
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
        check_same(a, b);
        DivisorClass r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r.coords_[i] -= b.coords_[i];
        return r;
    }
    friend DivisorClass operator*(const BigInt& k, const DivisorClass& a) {
        DivisorClass r = a;
        for (auto& c : r.coords_) c *= k;
        return r;
    }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ",";
            s += coords_[i].str();
        }
        return s + ")";
    }

private:
    static void check_same(const DivisorClass& a, const DivisorClass& b) {
        if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
    }
    std::vector<BigInt> coords_;
};

struct SignatureReport {
    bool ok = false;
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    std::string details;
};

class IntersectionLattice {
public:
    using Matrix = std::vector<std::vector<BigInt>>;

    IntersectionLattice() = default;

    /// Throws LatticeError unless `gram` is square, non-empty and symmetric.
    explicit IntersectionLattice(Matrix gram) : gram_(std::move(gram)) {
        const std::size_t n = gram_.size();
        if (n == 0) throw LatticeError("lattice rank must be positive");
        for (const auto& row : gram_)
            if (row.size() != n) throw LatticeError("Gram matrix is not square");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (gram_[i][j] != gram_[j][i])
                    throw LatticeError("Gram matrix is not symmetric at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
    }

    /// diag(1, -1, ..., -1) of the given rank (the blown-up plane).
    static IntersectionLattice odd_unimodular(std::size_t rank) {
        Matrix g(rank, std::vector<BigInt>(rank, 0));
        for (std::size_t i = 0; i < rank; ++i) g[i][i] = i == 0 ? 1 : -1;
        return IntersectionLattice(std::move(g));
    }

    std::size_t rank() const { return gram_.size(); }
    const Matrix& gram() const { return gram_; }

    BigInt intersect(const DivisorClass& a, const DivisorClass& b) const {
        if (a.size() != rank()) throw DimensionMismatch(rank(), a.size());
        if (b.size() != rank()) throw DimensionMismatch(rank(), b.size());
        BigInt total = 0;
        for (std::size_t i = 0; i < rank(); ++i) {
            if (a[i] == 0) continue;
            BigInt row = 0;
            for (std::size_t j = 0; j < rank(); ++j) row += gram_[i][j] * b[j];
            total += a[i] * row;
        }
        return total;
    }
    BigInt square(const DivisorClass& a) const { return intersect(a, a); }

    friend bool operator==(const IntersectionLattice&, const IntersectionLattice&) = default;

private:
    Matrix gram_;
};

inline BigInt intersect(const IntersectionLattice& lattice, const DivisorClass& a, const DivisorClass& b) {
    return lattice.intersect(a, b);
}

/// Inertia of a symmetric rational matrix by congruence diagonalization.
inline std::vector<Rational> congruence_diagonal(const std::vector<std::vector<Rational>>& input) {
    auto a = input;
    const std::size_t n = a.size();
    std::vector<Rational> diag;
    diag.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k].is_zero()) {
            // Prefer a later non-zero diagonal entry; otherwise add a coupled row/column.
            std::size_t pivot = n;
            for (std::size_t j = k + 1; j < n && pivot == n; ++j)
                if (!a[j][j].is_zero()) pivot = j;
            if (pivot != n) {
                std::swap(a[k], a[pivot]);
                for (auto& row : a) std::swap(row[k], row[pivot]);
            } else {
                std::size_t partner = n;
                for (std::size_t j = k + 1; j < n && partner == n; ++j)
                    if (!a[k][j].is_zero()) partner = j;
                if (partner != n) {
                    // row_k += row_j; col_k += col_j  gives a_kk = 2 a_kj (a_jj = 0).
                    for (std::size_t c = 0; c < n; ++c) a[k][c] += a[partner][c];
                    for (std::size_t r = 0; r < n; ++r) a[r][k] += a[r][partner];
                }
            }
        }
        const Rational pivot = a[k][k];
        diag.push_back(pivot);
        if (pivot.is_zero()) continue;  // whole row is zero: a null direction
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            const Rational f = a[i][k] / pivot;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            for (std::size_t j = k; j < n; ++j) a[j][i] = a[i][j];
        }
    }
    return diag;
}

inline SignatureReport check_signature(const IntersectionLattice& lattice) {
    std::vector<std::vector<Rational>> a(lattice.rank(), std::vector<Rational>(lattice.rank()));
    for (std::size_t i = 0; i < lattice.rank(); ++i)
        for (std::size_t j = 0; j < lattice.rank(); ++j) a[i][j] = Rational(lattice.gram()[i][j]);
    SignatureReport rep;
    for (const auto& d : congruence_diagonal(a)) {
        if (d.sign() > 0) ++rep.positive;
        else if (d.sign() < 0) ++rep.negative;
        else ++rep.zero;
    }
    rep.ok = rep.positive == 1 && rep.zero == 0;
    rep.details = "signature (" + std::to_string(rep.positive) + "," + std::to_string(rep.negative) + ")";
    if (rep.zero) rep.details += " with " + std::to_string(rep.zero) + " null direction(s)";
    if (!rep.ok) rep.details += "; expected (1," + std::to_string(lattice.rank() - 1) + ")";
    return rep;
}

/// True iff L2 * C2 <= LC^2, i.e. the triple is consistent with the Hodge index theorem.
inline bool hodge_filter(const BigInt& L2, const BigInt& LC, const BigInt& C2) {
    if (L2 <= 0) throw std::invalid_argument("hodge_filter requires L^2 > 0");
    return L2 * C2 <= LC * LC;
}

/// Blow-up of r points: base classes lifted by zero-padding, E_i appended with E_i.E_j = -delta_ij.
class BlowupExtension {
public:
    BlowupExtension(IntersectionLattice base, std::size_t points) : base_(std::move(base)), points_(points) {
        if (points == 0) throw std::invalid_argument("blow-up needs at least one point");
        const std::size_t n = base_.rank();
        IntersectionLattice::Matrix g(n + points, std::vector<BigInt>(n + points, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g[i][j] = base_.gram()[i][j];
        for (std::size_t i = 0; i < points; ++i) g[n + i][n + i] = -1;
        extended_ = IntersectionLattice(std::move(g));
    }

    const IntersectionLattice& base() const { return base_; }
    const IntersectionLattice& extended() const { return extended_; }
    std::size_t points() const { return points_; }

    DivisorClass lift(const DivisorClass& v) const {
        if (v.size() != base_.rank()) throw DimensionMismatch(base_.rank(), v.size());
        auto c = v.coords();
        c.resize(extended_.rank(), 0);
        return DivisorClass(std::move(c));
    }
    DivisorClass exceptional(std::size_t i) const {
        if (i >= points_) throw std::out_of_range("exceptional divisor index");
        return DivisorClass::basis(extended_.rank(), base_.rank() + i);
    }
    DivisorClass exceptional_sum() const {
        auto s = DivisorClass::zero(extended_.rank());
        for (std::size_t i = 0; i < points_; ++i) s = s + exceptional(i);
        return s;
    }
    /// K_Y = f^*K_X + sum E_i.
    DivisorClass canonical(const DivisorClass& K) const { return lift(K) + exceptional_sum(); }

    /// f^*L - lambda * sum E_i scaled by the denominator of lambda so it stays integral.
    DivisorClass pullback_minus(const DivisorClass& L, const BigInt& lambda_num, const BigInt& lambda_den) const {
        return lambda_den * lift(L) - lambda_num * exceptional_sum();
    }

private:
    IntersectionLattice base_;
    std::size_t points_;
    IntersectionLattice extended_;
};

inline BlowupExtension blowup_extend(const IntersectionLattice& lattice, std::size_t points) {
    auto sig = check_signature(lattice);
    if (!sig.ok) throw LatticeError("blow-up of a lattice with bad " + sig.details);
    return BlowupExtension(lattice, points);
}

/// Nefness against a finite list of curve classes. Always partial evidence.
struct NefCheck {
    enum class Kind { partial_nef, violator };
    Kind kind = Kind::partial_nef;
    std::optional<DivisorClass> violator;  // catalog class with D.C < 0, or D itself when D^2 < 0
    BigInt product = 0;                    // D.C (or D^2) at the violator
    static constexpr const char* label = "PARTIAL";
};

inline NefCheck is_nef_against(const std::vector<DivisorClass>& catalog, const DivisorClass& D,
                               const IntersectionLattice& lattice) {
    NefCheck res;
    for (const auto& c : catalog) {
        BigInt p = lattice.intersect(D, c);
        if (p < 0) {
            res.kind = NefCheck::Kind::violator;
            res.violator = c;
            res.product = std::move(p);
            return res;
        }
    }
    BigInt sq = lattice.square(D);
    if (sq < 0) {
        res.kind = NefCheck::Kind::violator;
        res.violator = D;
        res.product = std::move(sq);
    }
    return res;
}

/// p_a(C) = (C^2 + C.K)/2 + 1.
inline Rational arithmetic_genus(const DivisorClass& C, const DivisorClass& K, const IntersectionLattice& lattice) {
    return Rational(lattice.square(C) + lattice.intersect(C, K), BigInt(2)) + Rational(1);
}

/// Calls `visit` for every integer vector x != 0 with x^T Q x <= bound, Q positive definite.
/// Fincke-Pohst enumeration over the exact LDL^T form of Q.
inline void enumerate_short_vectors(const std::vector<std::vector<Rational>>& Q, const Rational& bound,
                                    const std::function<void(const std::vector<BigInt>&)>& visit) {
    const std::size_t n = Q.size();
    auto q = Q;
    for (std::size_t i = 0; i < n; ++i) {
        if (q[i][i].sign() <= 0) throw LatticeError("form is not positive definite");
        for (std::size_t j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] = q[i][j] / q[i][i];
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
    // Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
    std::vector<BigInt> x(n, 0);
    std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level, const Rational& budget) {
        const std::size_t i = level - 1;
        Rational centre(0);
        for (std::size_t j = i + 1; j < n; ++j) centre -= q[i][j] * Rational(x[j]);
        const Rational span = budget / q[i][i];  // (x_i - centre)^2 <= span
        const BigInt reach = ceil_sqrt(span);
        const BigInt lo = (centre - Rational(reach)).floor();
        const BigInt hi = (centre + Rational(reach)).ceil();
        for (BigInt v = lo; v <= hi; ++v) {
            const Rational off = Rational(v) - centre;
            const Rational used = q[i][i] * off * off;
            if (used > budget) continue;
            x[i] = v;
            if (i == 0) {
                bool nonzero = false;
                for (const auto& c : x) nonzero = nonzero || c != 0;
                if (nonzero) visit(x);
            } else {
                descend(i, budget - used);
            }
        }
        x[i] = 0;
    };
    if (n > 0 && bound.sign() >= 0) descend(n, bound);
}

/// All integral classes C with L.C == degree and C^2 >= min_square. Finite because
/// L^perp is negative definite; searched through the positive form 2(L.x)^2 - L^2 x^2.
inline std::vector<DivisorClass> classes_of_degree(const IntersectionLattice& lattice, const DivisorClass& L,
                                                   const BigInt& degree, const BigInt& min_square) {
    const BigInt L2 = lattice.square(L);
    if (L2 <= 0) throw std::invalid_argument("classes_of_degree needs L^2 > 0");
    const std::size_t n = lattice.rank();
    std::vector<BigInt> l_dot(n);
    for (std::size_t i = 0; i < n; ++i) l_dot[i] = lattice.intersect(L, DivisorClass::basis(n, i));
    std::vector<std::vector<Rational>> form(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) form[i][j] = Rational(2 * l_dot[i] * l_dot[j] - L2 * lattice.gram()[i][j]);
    const Rational bound(2 * degree * degree - L2 * min_square);
    std::vector<DivisorClass> out;
    if (bound.sign() < 0) return out;
    auto check = [&](const std::vector<BigInt>& coords) {
        DivisorClass c(coords);
        if (lattice.intersect(L, c) == degree && lattice.square(c) >= min_square) out.push_back(std::move(c));
    };
    enumerate_short_vectors(form, bound, check);
    if (degree == 0 && min_square <= 0) out.push_back(DivisorClass::zero(n));
    return out;
}

}  // namespace seshadri
