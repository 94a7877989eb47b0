#include "decostab/instability.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace decostab {

namespace {

/// Dot-product cache for the candidate point set.
struct DotTable {
  std::vector<RatVector> pts;
  RatMatrix dots;

  explicit DotTable(std::vector<RatVector> points) : pts(std::move(points)) {
    const std::size_t n = pts.size();
    dots.assign(n, RatVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        dots[i][j] = dots[j][i] = dot(pts[i], pts[j]);
      }
    }
  }
};

/// Nearest point of the affine hull of the subset to the origin, if its
/// barycentric coordinates are all nonnegative (i.e. the point lies in the
/// convex hull of the subset).  Returns nullopt for affinely dependent
/// subsets and for infeasible (negative-coordinate) solutions.
std::optional<RatVector> conv_subset_candidate(const DotTable& table,
                                               const std::vector<std::size_t>& idx) {
  const std::size_t k = idx.size();
  const std::size_t t0 = idx[0];
  if (k == 1) return table.pts[t0];

  // Minimize |t0 + sum_i c_i (t_i - t0)|^2: normal equations G c = -g with
  // G_{ij} = <t_i - t0, t_j - t0> and g_i = <t_i - t0, t0>.
  const std::size_t m = k - 1;
  RatMatrix gram(m, RatVector(m, Rational(0)));
  RatVector rhs(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t ti = idx[i + 1];
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t tj = idx[j + 1];
      gram[i][j] = table.dots[ti][tj] - table.dots[ti][t0] - table.dots[t0][tj] +
                   table.dots[t0][t0];
    }
    rhs[i] = table.dots[t0][t0] - table.dots[ti][t0];
  }
  auto coeffs = solve_square(std::move(gram), std::move(rhs));
  if (!coeffs) return std::nullopt;  // affinely dependent subset

  Rational c0(1);
  for (const auto& ci : *coeffs) {
    if (ci.sign() < 0) return std::nullopt;
    c0 -= ci;
  }
  if (c0.sign() < 0) return std::nullopt;

  RatVector point = table.pts[t0];
  for (std::size_t i = 0; i < m; ++i) {
    if ((*coeffs)[i].is_zero()) continue;
    point = point + (*coeffs)[i] * (table.pts[idx[i + 1]] - table.pts[t0]);
  }
  return point;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    visit(idx);
    // Advance the combination.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

std::vector<RatVector> projected_state(const TensorPoint& w) {
  std::vector<RatVector> pts;
  for (const auto& chi : state_weights(w)) {
    pts.push_back(project_trace_zero(rat_vector(chi)));
  }
  std::sort(pts.begin(), pts.end(),
            [](const RatVector& x, const RatVector& y) { return compare_vectors(x, y) < 0; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

MinNormResult min_norm_point(const std::vector<RatVector>& points) {
  if (points.empty()) throw DimensionError("min_norm_point: empty point set");
  std::vector<RatVector> pts(points);
  std::sort(pts.begin(), pts.end(),
            [](const RatVector& x, const RatVector& y) { return compare_vectors(x, y) < 0; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const long dim = affine_dim(pts);
  const std::size_t kmax = static_cast<std::size_t>(dim + 1);
  DotTable table(std::move(pts));

  std::optional<MinNormResult> best;
  for (std::size_t k = 1; k <= kmax; ++k) {
    for_each_subset(table.pts.size(), k, [&](const std::vector<std::size_t>& idx) {
      auto cand = conv_subset_candidate(table, idx);
      if (!cand) return;
      Rational nsq = norm_sq(*cand);
      if (!best || nsq < best->norm_sq) {
        best = MinNormResult{std::move(*cand), std::move(nsq)};
      }
    });
  }
  assert(best);
  return *best;
}

int compare_normalized_weights(const Rational& mu1, const Rational& norm_sq1,
                               const Rational& mu2, const Rational& norm_sq2) {
  if (norm_sq1.sign() <= 0 || norm_sq2.sign() <= 0) {
    throw ParameterError("compare_normalized_weights: squared norms must be positive");
  }
  const int s1 = mu1.sign();
  const int s2 = mu2.sign();
  if (s1 != s2) return s1 < s2 ? -1 : 1;
  // Same sign: compare mu1^2/n1 against mu2^2/n2, orientation fixed by the
  // shared sign (for negative values a larger square means smaller nu).
  const Rational q1 = mu1 * mu1 * norm_sq2;
  const Rational q2 = mu2 * mu2 * norm_sq1;
  if (q1 == q2) return 0;
  const bool first_larger_square = q1 > q2;
  if (s1 >= 0) return first_larger_square ? 1 : -1;
  return first_larger_square ? -1 : 1;
}

Rational InstabilityCertificate::m0_squared() const {
  return mu_value * mu_value / Rational(norm_sq);
}

bool torus_semistable(const TensorPoint& w) {
  return min_norm_point(projected_state(w)).norm_sq.is_zero();
}

bool torus_semistable(const TensorPoint& w, const std::vector<RatMatrix>& basis_changes) {
  if (!torus_semistable(w)) return false;
  for (const auto& g : basis_changes) {
    if (!torus_semistable(apply_basis_change(w, g))) return false;
  }
  return true;
}

InstabilityCertificate instability_ops(const TensorPoint& w) {
  const MinNormResult mn = min_norm_point(projected_state(w));
  if (mn.norm_sq.is_zero()) {
    throw PreconditionError("not-unstable",
                            "point is torus-semistable; no instability certificate exists");
  }
  InstabilityCertificate cert;
  RatVector direction = mn.point;
  for (auto& x : direction) x = -x;
  cert.lambda_star.weights = primitive_integer_direction(direction);
  cert.lambda_star.sl_constrained = true;
  cert.mu_value = mu_kappa(cert.lambda_star.weights, w);
  cert.norm_sq = inorm_sq(cert.lambda_star.weights);
  // Depth consistency: mu^2 == |p*|^2 |lambda*|^2 by the supporting
  // hyperplane property of the minimum-norm point.
  assert(cert.mu_value * cert.mu_value == mn.norm_sq * Rational(cert.norm_sq));
  assert(cert.mu_value.sign() < 0);

  FlagOfResult fo = weighted_flag_of_ops(cert.lambda_star);
  cert.flag = std::move(fo.flag);
  cert.sorted_basis_permutation = std::move(fo.sorted_basis_permutation);
  cert.q = cert.mu_value;
  const BlockWeightVector gamma = gamma_vector(cert.flag);
  cert.chi_star_block_exponents.reserve(gamma.block_values.size());
  for (const auto& v : gamma.block_values) {
    cert.chi_star_block_exponents.push_back(cert.q * v);
  }
  return cert;
}

InstabilityCertificate instability_ops(const TensorPoint& w,
                                       const std::vector<RatMatrix>& basis_changes) {
  std::optional<InstabilityCertificate> best;
  auto consider = [&](const TensorPoint& point) {
    MinNormResult mn = min_norm_point(projected_state(point));
    if (mn.norm_sq.is_zero()) return;
    InstabilityCertificate cert = instability_ops(point);
    if (!best ||
        compare_normalized_weights(cert.mu_value, Rational(cert.norm_sq), best->mu_value,
                                   Rational(best->norm_sq)) < 0) {
      best = std::move(cert);
    }
  };
  consider(w);
  for (const auto& g : basis_changes) consider(apply_basis_change(w, g));
  if (!best) {
    throw PreconditionError("not-unstable",
                            "point is torus-semistable under every supplied basis change");
  }
  return *best;
}

std::pair<InstabilityCertificate, ResidualPoint> destabilizing_certificate(const TensorPoint& w) {
  InstabilityCertificate cert = instability_ops(w);
  ResidualPoint residual;
  residual.level_value = cert.mu_value;
  residual.point.r = w.r;
  residual.point.a = w.a;
  residual.point.b = w.b;
  residual.point.c = w.c;
  for (const auto& [key, val] : w.coeffs) {
    const IntVector chi = w.character_of(key.first);
    if (Rational(idot(cert.lambda_star.weights, chi)) == cert.mu_value) {
      residual.point.coeffs[key] = val;
    }
  }
  // The maximizing character always contributes, so the residual is a valid
  // (nonzero) tensor point.
  residual.point.validate();
  return {std::move(cert), std::move(residual)};
}

TensorPoint apply_basis_change(const TensorPoint& w, const RatMatrix& g) {
  w.validate();
  const std::size_t r = static_cast<std::size_t>(w.r);
  if (g.size() != r) throw DimensionError("apply_basis_change: matrix size differs from r");
  for (const auto& row : g) {
    if (row.size() != r) throw DimensionError("apply_basis_change: matrix is not square");
  }

  // Determinant via elimination, both for the invertibility check and for
  // the det^{-c} twist factor.
  Rational det(1);
  {
    RatMatrix m = g;
    for (std::size_t col = 0; col < r; ++col) {
      std::size_t pivot = col;
      while (pivot < r && m[pivot][col].is_zero()) ++pivot;
      if (pivot == r) {
        det = Rational(0);
        break;
      }
      if (pivot != col) {
        std::swap(m[pivot], m[col]);
        det = -det;
      }
      det *= m[col][col];
      const Rational inv = Rational(1) / m[col][col];
      for (std::size_t j = col; j < r; ++j) m[col][j] *= inv;
      for (std::size_t row = col + 1; row < r; ++row) {
        if (m[row][col].is_zero()) continue;
        const Rational f = m[row][col];
        for (std::size_t j = col; j < r; ++j) m[row][j] -= f * m[col][j];
      }
    }
  }
  if (det.is_zero()) throw ParameterError("apply_basis_change: singular matrix");

  Rational twist(1);
  for (int i = 0; i < w.c; ++i) twist /= det;

  TensorPoint out;
  out.r = w.r;
  out.a = w.a;
  out.b = w.b;
  out.c = w.c;

  // g e_j = sum_i g[i][j] e_i, extended to tuples factorwise.
  std::map<std::pair<IndexTuple, int>, Rational> acc;
  for (const auto& [key, val] : w.coeffs) {
    const auto& [tuple, copy] = key;
    std::vector<IndexTuple> images{{}};
    std::vector<Rational> factors{val * twist};
    for (int jl : tuple) {
      std::vector<IndexTuple> next_images;
      std::vector<Rational> next_factors;
      for (std::size_t t = 0; t < images.size(); ++t) {
        for (std::size_t i = 0; i < r; ++i) {
          const Rational& gij = g[i][static_cast<std::size_t>(jl - 1)];
          if (gij.is_zero()) continue;
          IndexTuple im = images[t];
          im.push_back(static_cast<int>(i) + 1);
          next_images.push_back(std::move(im));
          next_factors.push_back(factors[t] * gij);
        }
      }
      images = std::move(next_images);
      factors = std::move(next_factors);
    }
    for (std::size_t t = 0; t < images.size(); ++t) {
      acc[{images[t], copy}] += factors[t];
    }
  }
  for (auto& [key, val] : acc) {
    if (!val.is_zero()) out.coeffs[key] = val;
  }
  if (out.coeffs.empty()) {
    // Cannot happen for invertible g, but keep the invariant explicit.
    throw InvalidPointError("apply_basis_change: transformed point is zero");
  }
  return out;
}

}  // namespace decostab
