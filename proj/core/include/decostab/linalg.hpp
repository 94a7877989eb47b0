#pragma once

#include <optional>
#include <vector>

#include "decostab/rational.hpp"

namespace decostab {

/// Row-major dense rational matrix.
using RatMatrix = std::vector<RatVector>;

/// Solves the square linear system A x = b by exact Gaussian elimination.
/// Returns std::nullopt when A is singular.  Throws DimensionError when the
/// shapes disagree.
std::optional<RatVector> solve_square(RatMatrix a, RatVector b);

/// Rank of a rational matrix (exact).
std::size_t matrix_rank(RatMatrix a);

/// Affine dimension of a finite point set: -1 for the empty set, 0 for a
/// single point, and in general the rank of the difference vectors against
/// the first point.
long affine_dim(const std::vector<RatVector>& points);

}  // namespace decostab
