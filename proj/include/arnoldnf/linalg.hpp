// Dense exact linear algebra over a field tower.
#pragma once

#include "arnoldnf/scalars.hpp"

#include <optional>
#include <vector>

namespace arnoldnf {

using Matrix = std::vector<std::vector<AlgebraicScalar>>;

std::size_t rank(Matrix m);

/// One solution of A x = b (free variables set to zero), or nullopt.
std::optional<std::vector<AlgebraicScalar>> solve(Matrix a, std::vector<AlgebraicScalar> b);

}  // namespace arnoldnf
