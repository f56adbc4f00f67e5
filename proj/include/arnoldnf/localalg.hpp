// Local standard bases, Milnor numbers, corank, Jacobian decompositions.
#pragma once

#include "arnoldnf/poly.hpp"

#include <optional>
#include <vector>

namespace arnoldnf {

/// Local weighted degree reverse lexicographic order, x1 > x2 > ...
/// Lower weighted degree ranks higher; 1 is above every variable.
struct LocalOrder {
    std::vector<long> weights;
    static LocalOrder standard(int nvars) { return {std::vector<long>(static_cast<std::size_t>(nvars), 1)}; }
    long degree(const Monomial& m) const;
    /// True if a ranks strictly above b.
    bool greater(const Monomial& a, const Monomial& b) const;
};

Monomial leading_monomial(const SparsePoly& f, const LocalOrder& ord);

struct StandardBasis {
    std::vector<SparsePoly> generators;
    LocalOrder order;
    /// Minimal generators of the leading ideal, ordered by MonomialLess.
    std::vector<Monomial> leading_ideal;
    /// Terms of standard degree >= noether were dropped (0 = none).
    int noether = 0;
};

/// Mora standard basis.  With noether > 0 the basis is that of
/// gens + m^noether, and all terms of degree >= noether are discarded.
StandardBasis mora_std(const std::vector<SparsePoly>& gens, const LocalOrder& ord, int noether = 0);

/// Mora normal form of f with respect to a standard basis.
SparsePoly mora_normal_form(const SparsePoly& f, const StandardBasis& sb);

struct MilnorResult {
    std::optional<long> mu;  // nullopt = infinite
    bool finite() const { return mu.has_value(); }
};

MilnorResult milnor(const SparsePoly& f);

/// Standard basis of the Jacobian ideal of an isolated singularity with
/// Milnor number mu, under `ord`.
StandardBasis jacobian_std(const SparsePoly& f, long mu, const LocalOrder& ord);

/// Monomials not in the leading ideal (requires a finite quotient).
std::vector<Monomial> quotient_basis(const StandardBasis& sb, int nvars);

struct CorankResult {
    int corank;
    int hessian_rank;
};

CorankResult corank(const SparsePoly& f);

struct JacDecomposition {
    SparsePoly v1, v2;
    std::vector<AlgebraicScalar> c;
};

/// Writes g (w-homogeneous of degree j) as dxf0*v1 + dyf0*v2 + sum c_k m_k
/// in w-degree j, where m_k runs over `system`.  Throws std::logic_error if
/// no such decomposition exists.
JacDecomposition jac_decompose(const SparsePoly& g, const SparsePoly& f0, const Weight& w, long j,
                               const std::vector<Monomial>& system);

/// Membership of t in the Jacobian ideal of f0 in the local ring.
bool in_jacobian_ideal(const SparsePoly& t, const SparsePoly& f0);

}  // namespace arnoldnf
