#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decostab/fan.hpp"
#include "decostab/instability.hpp"
#include "decostab/rational.hpp"
#include "decostab/weights.hpp"

namespace decostab {

/// Numerical shadow of a torsion-free sheaf: rank, degree, base dimension,
/// and Hilbert polynomial (degree dim_x).  On curves the Hilbert polynomial
/// has the shape d + r(x + 1 - g) for the genus g.
struct SheafNumerics {
  int rank = 1;
  mpz_class degree = 0;
  int dim_x = 1;
  RatPolynomial hilbert;

  static SheafNumerics curve(int rank, const mpz_class& degree, long genus);
  void validate() const;
};

/// Numerical shadow of a weighted filtration: the flag (ranks and weights),
/// per-level sub-degrees e_i, optional per-level sub-Hilbert polynomials
/// (required when dim_x > 1), and a saturation assumption flag.
/// `basis_order`, when nonempty, lists the 1-based original basis indices
/// in flag order; it selects which coordinate subspaces of the decoration
/// model realize the flag levels (empty means the identity order).
struct FiltrationNumerics {
  WeightedFlag flag;
  std::vector<mpz_class> sub_degrees;
  std::vector<RatPolynomial> sub_hilberts;
  bool saturated = true;
  std::vector<int> basis_order;
};

/// A decorated-sheaf configuration: sheaf numerics, decoration shape
/// (a, b, c) with twisting-line degree, and the generic decoration point.
struct DecoratedConfig {
  SheafNumerics sheaf;
  int a = 0;
  int b = 1;
  int c = 0;
  mpz_class deg_lambda = 0;
  TensorPoint generic_point;

  void validate() const;
};

/// Result of the filtration polynomial computation.
struct MLPair {
  RatPolynomial m;
  Rational l;
};

/// M = sum_i alpha_i (P r_i - P_i r) and L = coefficient of x^{dim_x - 1}
/// of M.  On curves, missing sub-Hilbert polynomials are synthesized from
/// the sub-degrees via P_i = e_i + r_i (P - d)/r, under which M collapses
/// to the constant L.  L is always obtained by coefficient extraction from
/// M; the closed-form sum lives in character_line_degree as an independent
/// cross-check.
MLPair m_and_l(const SheafNumerics& sheaf, const FiltrationNumerics& filt);

/// sum_i alpha_i (d r_i - e_i r), computed directly from degrees without
/// polynomial arithmetic.  Coincides with the L component of m_and_l.
Rational character_line_degree(const SheafNumerics& sheaf, const FiltrationNumerics& filt);

/// Decoration weight of a filtration against a tensor point, in the
/// coordinate model where flag level j spans the first r_j basis vectors:
///   mu = -min { gamma^(j_1) + ... + gamma^(j_a) : phi restricted to
///               (E_{j_1} x ... x E_{j_a}) is nonzero },
/// where the restriction is nonzero iff some coefficient has i_l <= r_{j_l}
/// for every l.  Since block values increase with the level and
/// admissibility is upward closed, the minimum is attained at the
/// level tuple of some support tuple, which is how it is computed.
/// Returns 0 when a = 0.  The filtration's basis_order is not consulted
/// here; callers evaluating permuted coordinate flags relabel w first.
Rational mu_decoration(const FiltrationNumerics& filt, const TensorPoint& w);

enum class Verdict { Stable, Semistable, Unstable };

const char* verdict_name(Verdict v);

/// Outcome of a finite-family stability check.  All verdicts are relative
/// to the supplied family of filtrations.
struct StabilityReport {
  Verdict verdict = Verdict::Stable;
  bool relative_to_family = true;
  /// For Unstable: the (first) violating member; for Semistable: the first
  /// member sitting exactly on the wall.
  std::optional<std::size_t> certificate_index;
  std::optional<FiltrationNumerics> certificate;
  std::optional<RatPolynomial> certificate_value;
};

/// Evaluates M + delta * mu for every family member in lex order: any
/// member ≺ 0 gives Unstable with that member as certificate, all ≻ 0
/// gives Stable, otherwise Semistable.  Requires delta ≻ 0 with
/// deg(delta) <= dim_x - 1 and a nonempty family (ParameterError).
/// Members with a nonempty basis_order are evaluated against the
/// correspondingly relabeled generic point.
StabilityReport delta_semistable(const DecoratedConfig& config, const RatPolynomial& delta,
                                 const std::vector<FiltrationNumerics>& family);

/// Outcome of the large-parameter stability check.
struct AsymptoticReport {
  Verdict verdict = Verdict::Semistable;
  bool relative_to_family = true;
  /// Condition a): the generic point is torus-semistable (under every
  /// supplied basis change).
  bool generic_point_semistable = false;
  std::optional<InstabilityCertificate> instability;
  /// Condition b) bookkeeping over the family members with mu = 0.
  bool has_mu_zero_member = false;
  std::optional<std::size_t> certificate_index;
};

/// Large-parameter stability: Unstable when the generic point is
/// torus-unstable (condition a) or some mu = 0 member has M ≺ 0
/// (condition b); Stable when a) holds, at least one mu = 0 member exists,
/// and every such member has M ≻ 0; Semistable otherwise (in particular
/// when no family member has mu = 0, which makes condition b vacuous).
AsymptoticReport asymptotically_semistable(const DecoratedConfig& config,
                                           const std::vector<FiltrationNumerics>& family,
                                           const std::vector<RatMatrix>& basis_changes = {});

/// Discrete class of decorated configurations for wall enumeration.
struct ConfigClass {
  int r = 2;
  mpz_class d = 0;
  int dim_x = 1;
  int a = 0;
  int b = 1;
  int c = 0;
  mpz_class d_lambda = 0;

  void validate() const;
};

/// Per-rank inclusive sub-degree intervals.
using DegreeBounds = std::map<int, std::pair<mpz_class, mpz_class>>;

/// Witness data for one candidate wall: the numerator M value with the
/// signature and sub-degrees realizing it, and the denominator mu value
/// with the signature and level tuple realizing it.  `scale` is the least
/// common denominator clearing (m_value, mu_value) to integers;
/// `same_signature` marks walls realized by a single filtration signature.
struct WallWitness {
  Rational m_value;
  std::vector<int> m_ranks;
  RatVector m_alphas;
  std::vector<mpz_class> sub_degrees;
  Rational mu_value;
  std::vector<int> mu_ranks;
  RatVector mu_alphas;
  std::vector<int> level_tuple;
  mpz_class scale = 1;
  bool same_signature = false;
};

/// Candidate wall positions with provenance.  Walls are constants (curve
/// case) stored as lex-positive polynomials, strictly ascending.
struct WallReport {
  std::vector<RatPolynomial> walls;
  std::vector<WallWitness> provenance;
};

/// Enumerates the finite superset of stability walls for a configuration
/// class on a curve: all values -Q/z ≻ 0 where Q ranges over the M values
/// of flags with signatures in test_set(a, b, c, r) and sub-degrees in the
/// given bounds, and z over the nonzero mu values of the same signatures
/// under every vanishing pattern (enumerated combinatorially from the
/// block sums).  Requires dim_x = 1 and nonempty bounds covering every
/// signature rank (ParameterError).
WallReport candidate_walls(const ConfigClass& cls, const DegreeBounds& degree_bounds);

/// Position of a parameter value relative to a wall set.
struct ChamberReport {
  enum class Kind { BottomChamber, OnWall, InChamber, TopChamber };
  Kind kind = Kind::TopChamber;
  /// 1-based: for OnWall the wall hit; for InChamber the wall bounding the
  /// chamber from below.  Unset (0) otherwise.
  std::size_t wall_index = 0;
  /// Open interval containing delta for chamber kinds: (lower, upper),
  /// with lower = 0 for the bottom chamber and upper absent for the top
  /// chamber.  An empty wall set yields TopChamber over (0, infinity).
  RatPolynomial lower;
  std::optional<RatPolynomial> upper;
};

/// Classifies delta against the wall set: OnWall(i), InChamber(i, (w_i,
/// w_{i+1})), BottomChamber (0 ≺ delta ≺ min wall), or TopChamber
/// (delta ≻ every wall).  Requires delta ≻ 0 (ParameterError) and a
/// strictly ascending positive wall list.
ChamberReport chamber_report(const WallReport& walls, const RatPolynomial& delta);

/// Effective stability-parameter thresholds.
struct DeltaBoundsResult {
  Rational delta0;
  Rational delta1;
};

/// delta0 = max{0, d}; delta1 = max{delta0, -C} with C the minimum over
/// test-set signatures of sum_i alpha_i (d (r_i - r) - n_{r - r_i} dL r).
/// The regularity surrogates n_per_rank (n_1 .. n_{r-1}) are
/// caller-supplied; product_threshold gives a proxy lower bound for them
/// but is not an effective substitute.  Missing or short n_per_rank →
/// ParameterError.
DeltaBoundsResult delta_bounds(const ConfigClass& cls, const TestSet& tset,
                               const std::vector<mpz_class>& n_per_rank);

/// The default check family: every test-set signature, every sub-degree
/// vector in the given bounds, and (for a > 0, when requested) every
/// coordinate-flag vanishing pattern obtained by relabeling the generic
/// point's basis, deduplicated by resulting decoration weight.  Bounds must
/// cover every signature rank (ParameterError).
std::vector<FiltrationNumerics> default_family(const DecoratedConfig& config,
                                               const DegreeBounds& degree_bounds,
                                               bool include_permutations = true);

/// Heuristic symmetric sub-degree box around the balanced slope, from the
/// boundedness constants: C1 = max_k ((d + n_{r-k} dL)/k - d/r),
/// C2 = max{0, C1, delta_bar a (r-1)/r}, slack_k = C2 k (r-k)/r +
/// delta_bar a (r-1); interval k -> [ceil(k d/r - slack), floor(k d/r +
/// slack)].  Intended as a convenience superset; explicit bounds are
/// preferred in tests.
DegreeBounds suggested_degree_bounds(const ConfigClass& cls,
                                     const std::vector<mpz_class>& n_per_rank,
                                     const Rational& delta_bar);

/// Outcome of the brute-force confirmation pass for one wall.
struct WallVerification {
  RatPolynomial wall;
  bool confirmed = false;
  std::string note;
};

/// End-to-end confirmation of candidate walls: for every wall whose
/// witness is realized by a single signature, synthesize the one-member
/// configuration and check through delta_semistable that the verdict is
/// Semistable on the wall and flips strictly across it.  Walls without a
/// single-signature witness are reported unconfirmed.
std::vector<WallVerification> verify_walls(const ConfigClass& cls, const WallReport& report);

}  // namespace decostab
