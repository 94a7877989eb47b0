#pragma once

#include <map>
#include <utility>
#include <vector>

#include "decostab/rational.hpp"

namespace decostab {

/// Index tuple (i_1, ..., i_a) with 1-based entries in [1, r].  The empty
/// tuple is the unique tuple when a = 0.
using IndexTuple = std::vector<int>;

/// A point of the twisted tensor space used as decoration model: an element
/// of (V^{(x) a})^{(+) b} tensor (det V)^{-c} with dim V = r, stored as a
/// sparse map from (index tuple, copy) to its nonzero rational coefficient.
struct TensorPoint {
  int r = 0;
  int a = 0;
  int b = 1;
  int c = 0;
  std::map<std::pair<IndexTuple, int>, Rational> coeffs;

  /// Checks the representation invariants: r >= 1, a >= 0, b >= 1, c >= 0,
  /// at least one coefficient, every stored coefficient nonzero, tuple
  /// length a with entries in [1, r], copy index in [1, b].  Throws
  /// InvalidPointError (or DimensionError for shape mismatches) otherwise.
  void validate() const;

  /// Diagonal torus character of a tuple: entry i counts occurrences of i in
  /// the tuple, shifted by -c from the determinant twist.
  IntVector character_of(const IndexTuple& tuple) const;

  friend bool operator==(const TensorPoint& x, const TensorPoint& y) {
    return x.r == y.r && x.a == y.a && x.b == y.b && x.c == y.c && x.coeffs == y.coeffs;
  }
};

/// A one-parameter subgroup of the diagonal torus, recorded by its integer
/// weight vector.  `sl_constrained` marks vectors intended to be trace-zero.
struct OneParamSubgroup {
  IntVector weights;
  bool sl_constrained = false;
};

/// A weighted filtration skeleton: strictly increasing ranks 0 < r_1 < ...
/// < r_s < r together with positive rational weights alpha_1..alpha_s.
struct WeightedFlag {
  int r = 0;
  std::vector<int> ranks;
  std::vector<Rational> alphas;

  std::size_t steps() const { return ranks.size(); }
  void validate() const;

  /// Level (1-based, in [1, s+1]) of the basis index p in [1, r]: the first
  /// step whose rank reaches p, or s+1 when none does.
  int level_of(int p) const;

  friend bool operator==(const WeightedFlag& x, const WeightedFlag& y) {
    return x.r == y.r && x.ranks == y.ranks && x.alphas == y.alphas;
  }
};

/// The weight vector attached to a weighted flag, both per basis entry
/// (length r, weakly increasing, sum zero) and per block (length s+1,
/// strictly increasing).
struct BlockWeightVector {
  RatVector entry_values;
  RatVector block_values;
};

/// Result of reading the weighted flag off a one-parameter subgroup.
struct FlagOfResult {
  WeightedFlag flag;
  /// sorted_basis_permutation[p] is the 0-based original index of the entry
  /// placed at sorted position p (weights ascending, stable).
  std::vector<int> sorted_basis_permutation;
};

/// All diagonal characters of the twisted tensor representation with
/// parameters (a, b, c) on dim-r space, with multiplicities.  Keys are the
/// character vectors; the multiplicity of a character is b times the number
/// of index tuples realizing it.  Requires a, b, c >= 0, r >= 1, and
/// (a, b) != (0, 0); the set has at most binom(a + r - 1, r - 1) elements.
std::map<IntVector, long> enumerate_weights(int a, int b, int c, int r);

/// The distinct characters supported by the nonzero coefficients of w,
/// sorted lexicographically.  Throws InvalidPointError when w has no
/// nonzero coefficient.
std::vector<IntVector> state_weights(const TensorPoint& w);

/// max over the state characters chi of <lambda, chi>.  Rejects the zero
/// one-parameter subgroup (ParameterError) and length mismatches
/// (DimensionError).
Rational mu_kappa(const IntVector& lambda, const TensorPoint& w);
Rational mu_kappa(const OneParamSubgroup& lambda, const TensorPoint& w);

/// Weight vector of a flag: basis entry p receives
///   sum_{i : p <= r_i} alpha_i (r_i - r) + sum_{i : p > r_i} alpha_i r_i,
/// constant on blocks and summing to zero over all entries.
BlockWeightVector gamma_vector(const WeightedFlag& flag);

/// Reads the weighted flag off a one-parameter subgroup: sort the weights
/// ascending as gamma_1 < ... < gamma_{s+1}, take cumulative block sizes as
/// ranks (last block excluded) and alpha_i = (gamma_{i+1} - gamma_i) / r.
/// Rejects empty and all-zero weight vectors.  For a trace-zero input the
/// composition gamma_vector(flag).entry_values recovers sorted(lambda)
/// exactly.
FlagOfResult weighted_flag_of_ops(const OneParamSubgroup& lambda);
FlagOfResult weighted_flag_of_ops(const IntVector& lambda);

/// Relabels basis indices of w: order[k] is the 1-based original index
/// placed at position k+1.  Tuples are mapped through the inverse, so the
/// coordinate flag "first r_j positions" of the result corresponds to the
/// span of the listed original basis vectors.
TensorPoint relabel_basis(const TensorPoint& w, const std::vector<int>& order);

}  // namespace decostab
