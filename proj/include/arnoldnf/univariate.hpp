// Dense univariate polynomials over a field tower.
#pragma once

#include "arnoldnf/scalars.hpp"

#include <utility>
#include <vector>

namespace arnoldnf {

/// coeffs[k] is the coefficient of u^k; no trailing zeros.
struct UPoly {
    std::vector<AlgebraicScalar> coeffs;

    UPoly() = default;
    explicit UPoly(std::vector<AlgebraicScalar> c);
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs.empty(); }
    const AlgebraicScalar& lead() const { return coeffs.back(); }
    void trim();
};

UPoly operator*(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly monic(const UPoly& a);
UPoly gcd(UPoly a, UPoly b);
UPoly derivative(const UPoly& a);

/// Yun's algorithm: a = lead * prod_k parts[k]^(k+1), parts monic and
/// pairwise coprime (possibly constant).
std::vector<UPoly> squarefree_decomposition(const UPoly& a);
bool is_squarefree(const UPoly& a);

}  // namespace arnoldnf
