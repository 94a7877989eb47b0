#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "decostab/linalg.hpp"
#include "decostab/rational.hpp"
#include "decostab/weights.hpp"

namespace decostab {

/// Exact nearest point to the origin in the convex hull of a finite
/// rational point set, together with its squared norm.
struct MinNormResult {
  RatVector point;
  Rational norm_sq;
};

/// Computes the (unique) minimum-norm point of conv(points) by exhaustive
/// enumeration of affinely independent subsets of size at most
/// affine_dim(points) + 1: each subset contributes the nearest point of its
/// affine hull when that point has nonnegative barycentric coordinates, and
/// the overall minimizer is the answer.  Exact throughout; intended for the
/// desk-scale point counts of state-weight sets.  Throws DimensionError on
/// an empty input.
MinNormResult min_norm_point(const std::vector<RatVector>& points);

/// Certificate of torus instability for a tensor point.
struct InstabilityCertificate {
  /// Primitive trace-zero integer direction achieving the most negative
  /// normalized weight.
  OneParamSubgroup lambda_star;
  /// mu value at lambda_star; strictly negative.
  Rational mu_value;
  /// Squared Euclidean norm of lambda_star.
  mpz_class norm_sq;
  /// Weighted flag read off lambda_star, with the basis order that sorts
  /// the weights ascending.
  WeightedFlag flag;
  std::vector<int> sorted_basis_permutation;
  /// The grading level of the supporting character data; equals mu_value.
  Rational q;
  /// q times the block values of the flag's weight vector.
  RatVector chi_star_block_exponents;

  /// Squared depth of instability: mu_value^2 / norm_sq, which equals the
  /// squared distance from the origin to the projected state polytope.
  Rational m0_squared() const;
};

/// The part of a tensor point supported on the lowest grading level of the
/// destabilizing direction.
struct ResidualPoint {
  TensorPoint point;
  Rational level_value;
};

/// Sign of nu_1 - nu_2 where nu_i = mu_i / sqrt(norm_sq_i), computed
/// exactly via the sign-aware squared comparison (no radicals).  Both
/// squared norms must be positive.
int compare_normalized_weights(const Rational& mu1, const Rational& norm_sq1,
                               const Rational& mu2, const Rational& norm_sq2);

/// Whether the origin lies in the convex hull of the trace-zero projection
/// of the state weights of w, i.e. no diagonal one-parameter subgroup has
/// negative normalized weight.
bool torus_semistable(const TensorPoint& w);

/// As above, but requiring semistability of g.w for every supplied basis
/// change g as well (a partial surrogate for the full group search).  Each
/// g must be an invertible r x r rational matrix.
bool torus_semistable(const TensorPoint& w, const std::vector<RatMatrix>& basis_changes);

/// Kempf-optimal destabilizing data for a torus-unstable point.  Throws
/// PreconditionError (code "not-unstable") when the point is semistable.
InstabilityCertificate instability_ops(const TensorPoint& w);

/// Deepest certificate over w and all g.w for the supplied basis changes;
/// ties resolved in favor of the earliest transform (identity first).
InstabilityCertificate instability_ops(const TensorPoint& w,
                                       const std::vector<RatMatrix>& basis_changes);

/// Certificate together with the residual: the coefficients of w whose
/// characters pair with lambda_star exactly to mu_value, i.e. the lowest
/// graded piece of w.
std::pair<InstabilityCertificate, ResidualPoint> destabilizing_certificate(const TensorPoint& w);

/// Transforms the coefficients of w by an invertible basis change g (acting
/// on each tensor factor, with the determinant twist scaling by
/// det(g)^{-c}).  Throws ParameterError when g is singular.
TensorPoint apply_basis_change(const TensorPoint& w, const RatMatrix& g);

}  // namespace decostab
