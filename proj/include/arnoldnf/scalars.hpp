// Exact arithmetic over Q and over towers of radical extensions
// Q(r1^(1/n1))(r2^(1/n2))...
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arnoldnf {

using Rational = mpq_class;

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Exact rational n-th root if one exists.
std::optional<Rational> rational_root(const Rational& q, int n);

class AlgebraicScalar;

namespace detail {
struct TowerLevel;
}

/// An ordered list of radical adjunctions over Q.  Level k is the quotient of
/// level k-1's polynomial ring by t_k^n_k - r_k.  Immutable; copies share
/// structure.
class FieldTower {
public:
    FieldTower() = default;  // the rational field

    std::size_t depth() const noexcept;
    /// Dimension over Q (product of all indices).
    std::size_t degree() const noexcept;
    bool is_rational() const noexcept { return !top_; }

    /// Index n_k and radicand r_k of level k (0-based, bottom first).
    int index(std::size_t level) const;
    AlgebraicScalar radicand(std::size_t level) const;
    /// The adjoined root t_k of level k, as an element of this tower.
    AlgebraicScalar generator(std::size_t level) const;

    FieldTower prefix(std::size_t depth) const;
    /// True if every level of *this is a level of `other`, in order.
    bool is_prefix_of(const FieldTower& other) const;

    /// Structural equality.
    friend bool operator==(const FieldTower& a, const FieldTower& b);

    /// New tower with t^n - r adjoined on top.  No irreducibility check; use
    /// adjoin_root for that.
    FieldTower extended(int n, const AlgebraicScalar& r) const;

    const detail::TowerLevel* top() const noexcept { return top_.get(); }

private:
    explicit FieldTower(std::shared_ptr<const detail::TowerLevel> top) : top_(std::move(top)) {}
    std::shared_ptr<const detail::TowerLevel> top_;
    friend class AlgebraicScalar;
};

/// The smaller tower must be a prefix of the larger.  Throws
/// std::invalid_argument otherwise.
FieldTower common_tower(const FieldTower& a, const FieldTower& b);

/// Element of a FieldTower stored as a dense coordinate vector over Q in the
/// monomial basis t_1^e_1 ... t_k^e_k, 0 <= e_i < n_i.  Coordinates are laid
/// out recursively: chunk i (of size degree(parent)) is the coefficient of
/// t_top^i.
class AlgebraicScalar {
public:
    AlgebraicScalar() : coeffs_(1) {}
    AlgebraicScalar(long v) : coeffs_{Rational(v)} {}  // NOLINT: implicit by design of arithmetic types
    AlgebraicScalar(const Rational& q) : coeffs_{q} {}  // NOLINT
    AlgebraicScalar(FieldTower tower, std::vector<Rational> coeffs);

    static AlgebraicScalar zero(const FieldTower& t);
    static AlgebraicScalar one(const FieldTower& t);

    const FieldTower& tower() const noexcept { return tower_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool is_rational() const noexcept;
    /// Throws std::domain_error unless is_rational().
    Rational to_rational() const;

    /// Same element viewed in an extension tower.
    AlgebraicScalar lifted(const FieldTower& to) const;

    AlgebraicScalar operator-() const;
    AlgebraicScalar& operator+=(const AlgebraicScalar& o);
    AlgebraicScalar& operator-=(const AlgebraicScalar& o);
    AlgebraicScalar& operator*=(const AlgebraicScalar& o);
    AlgebraicScalar& operator/=(const AlgebraicScalar& o);

    /// Throws std::domain_error on zero, or if the tower turned out not to be
    /// a field (singular multiplication map on a nonzero element).
    AlgebraicScalar inverse() const;
    AlgebraicScalar pow(long e) const;

    friend AlgebraicScalar operator+(AlgebraicScalar a, const AlgebraicScalar& b) { return a += b; }
    friend AlgebraicScalar operator-(AlgebraicScalar a, const AlgebraicScalar& b) { return a -= b; }
    friend AlgebraicScalar operator*(AlgebraicScalar a, const AlgebraicScalar& b) { return a *= b; }
    friend AlgebraicScalar operator/(AlgebraicScalar a, const AlgebraicScalar& b) { return a /= b; }
    /// Exact equality after lifting to the common tower.
    friend bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b);

private:
    FieldTower tower_;
    std::vector<Rational> coeffs_;
};

bool equals(const AlgebraicScalar& a, const AlgebraicScalar& b);

/// Returns a (possibly extended) tower and rho in it with rho^n == r.
/// Existing roots are reused; otherwise an irreducible factor of t^n - r is
/// adjoined.  Throws std::invalid_argument for r == 0 or n < 2.
std::pair<FieldTower, AlgebraicScalar> adjoin_root(const FieldTower& tower, int n,
                                                   const AlgebraicScalar& r);

/// Searches the tower of r for an n-th root of r without extending it.
std::optional<AlgebraicScalar> find_root(const AlgebraicScalar& r, int n);

/// Decimal approximation under the principal embedding (each generator is
/// the principal n-th root of its radicand's value), truncated toward zero
/// to `digits` places after the point.  Non-real values render as "re+imi".
std::string approximate(const AlgebraicScalar& a, int digits);

/// Human-readable exact form, e.g. "3/2", "(1+2*r1)", generators r1..rk.
std::string to_string(const AlgebraicScalar& a);

}  // namespace arnoldnf
