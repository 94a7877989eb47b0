#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decostab/instability.hpp"
#include "decostab/rational.hpp"
#include "decostab/weights.hpp"

namespace decostab {

/// A full-dimensional rational polyhedral cone inside the dominant
/// trace-zero chamber, stored by its primitive extremal-ray generators and
/// an irredundant inequality description.  A trace-zero vector lambda lies
/// in the cone exactly when <lambda, n> >= 0 for every facet normal n.
struct Cone {
  std::vector<IntVector> generators;
  std::vector<IntVector> facet_normals;
  /// One character per arrangement hyperplane of the owning fan, in the
  /// fan's hyperplane order: '+', '-', or '0' for the sign of the
  /// hyperplane form on the cone's interior.
  std::string sign_vector;
};

/// A complete rational polyhedral subdivision of the dominant trace-zero
/// chamber {lambda_1 <= ... <= lambda_r, sum lambda_i = 0}.
struct Fan {
  int r = 0;
  /// Canonical primitive normals of the refining hyperplanes, sorted.
  std::vector<IntVector> hyperplanes;
  std::vector<Cone> cones;
  /// Union of all cone generators, sorted and deduplicated.
  std::vector<IntVector> edge_generators;
};

/// Refines the dominant trace-zero chamber by every difference hyperplane
/// {<lambda, chi - chi'> = 0} for pairs chi, chi' drawn from the same
/// weight set.  On each cone of the result, max-of-pairings functions over
/// any subset of any input weight set are linear.  Requires r >= 2
/// (DimensionError) and characters of length r.
Fan chamber_fan(const std::vector<std::vector<IntVector>>& weight_sets, int r);

/// First cone of the fan containing the given trace-zero dominant vector,
/// by exact facet-inequality membership; nullptr when none contains it
/// (which indicates a coverage bug for dominant trace-zero input).
const Cone* find_containing_cone(const Fan& fan, const RatVector& lambda);

/// One signature of the finite filtration test set: ranks with weights.
struct TestSetEntry {
  std::vector<int> ranks;
  std::vector<Rational> alphas;

  friend bool operator==(const TestSetEntry& x, const TestSetEntry& y) {
    return x.ranks == y.ranks && x.alphas == y.alphas;
  }
};

struct TestSet {
  int r = 0;
  std::vector<TestSetEntry> entries;
};

/// The finite set of weighted-filtration signatures sufficient for
/// checking semistability of decorations of shape (a, b, c) in rank r:
/// the flags read off the edge generators of the refinement fan of the
/// full weight set of the twisted tensor representation.  Independent of
/// b and c.
TestSet test_set(int a, int b, int c, int r);

/// Threshold eta_infinity for the product criterion: with
/// K1 = max and K2 = min of <e, chi> over edge generators e of the
/// two-set refinement fan and first-set weights chi, returns
/// max(K1, -K2).  Beyond this value the first factor can no longer
/// overturn a strict second-factor verdict on any edge.
Rational product_threshold(const std::vector<IntVector>& weights_1,
                           const std::vector<IntVector>& weights_2, int r);

/// Outcome of a product-instability probe at a fixed parameter eta.
struct ProductProbeReport {
  Rational eta;
  bool unstable = false;
  /// Squared distance from the origin to the combined projected state
  /// polytope; zero exactly when semistable at this eta.
  Rational min_norm_sq;
  /// Present only when unstable.
  std::optional<OneParamSubgroup> lambda_star;
  std::optional<Rational> mu_1;
  std::optional<Rational> mu_2;
  std::optional<Rational> combined;
};

/// Minimizes mu(lambda, w1) + eta * mu(lambda, w2) in normalized form over
/// all trace-zero one-parameter subgroups, via the minimum-norm point of
/// the Minkowski-combined projected state set.  Requires eta > 0
/// (ParameterError), matching ranks (DimensionError), and a
/// torus-semistable second factor (PreconditionError, code
/// "unstable-factor").
ProductProbeReport product_instability_probe(const TensorPoint& w1, const TensorPoint& w2,
                                             const Rational& eta);

}  // namespace decostab
