#include "decostab/fan.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

#include "decostab/linalg.hpp"

namespace decostab {

namespace {

/// Strictly increasing trace-zero vector used to cut the dominant cone by a
/// bounded polytope slice {<lambda, rho> = 1}.
IntVector slice_vector(int r) {
  IntVector rho;
  rho.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) rho.emplace_back(2 * i - r + 1);
  return rho;
}

/// Orthogonal projection of an integer vector onto the trace-zero subspace,
/// scaled by r to stay integral: r*v - (sum v)*ones.  Returns nullopt when
/// the projection vanishes.
std::optional<IntVector> projected_normal(const IntVector& v) {
  const auto r = static_cast<long>(v.size());
  mpz_class total = 0;
  for (const auto& x : v) total += x;
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(r * x - total);
  if (is_zero_vector(out)) return std::nullopt;
  return primitive_integer_direction(out);
}

/// Canonical representative of the hyperplane through a normal: primitive,
/// first nonzero entry positive.
IntVector canonical_hyperplane(IntVector n) {
  for (const auto& x : n) {
    if (sgn(x) != 0) {
      if (sgn(x) < 0) {
        for (auto& y : n) y = -y;
      }
      break;
    }
  }
  return n;
}

struct Cell {
  std::vector<IntVector> ineqs;       // trace-zero primitive normals, <.,n> >= 0
  std::vector<RatVector> vertices;    // slice vertices, sorted
};

/// All vertices of {lambda : sum lambda = 0, <lambda, rho> = 1,
/// <lambda, n> >= 0 for n in ineqs}: for every choice of r-2 inequalities
/// made tight the square system is solved exactly and the solution kept
/// when it satisfies the remaining inequalities.
std::vector<RatVector> enumerate_vertices(const std::vector<IntVector>& ineqs, int r,
                                          const IntVector& rho) {
  const std::size_t need = static_cast<std::size_t>(r - 2);
  std::vector<RatVector> vertices;

  std::vector<std::size_t> idx(need);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == need) {
      RatMatrix a;
      RatVector b;
      a.reserve(static_cast<std::size_t>(r));
      a.emplace_back(static_cast<std::size_t>(r), Rational(1));  // sum = 0
      b.emplace_back(0);
      a.push_back(rat_vector(rho));  // slice = 1
      b.emplace_back(1);
      for (std::size_t t = 0; t < need; ++t) {
        a.push_back(rat_vector(ineqs[idx[t]]));
        b.emplace_back(0);
      }
      auto sol = solve_square(std::move(a), std::move(b));
      if (!sol) return;
      for (const auto& n : ineqs) {
        if (dot(*sol, rat_vector(n)).sign() < 0) return;
      }
      vertices.push_back(std::move(*sol));
      return;
    }
    for (std::size_t i = start; i + (need - depth - 1) < ineqs.size(); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (need == 0) {
    rec(0, 0);
  } else if (ineqs.size() >= need) {
    rec(0, 0);
  }

  std::sort(vertices.begin(), vertices.end(),
            [](const RatVector& x, const RatVector& y) { return compare_vectors(x, y) < 0; });
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

RatVector centroid(const std::vector<RatVector>& points) {
  RatVector c(points.front().size(), Rational(0));
  for (const auto& p : points) c = c + p;
  const Rational inv(mpz_class(1), mpz_class(static_cast<long>(points.size())));
  return inv * c;
}

}  // namespace

Fan chamber_fan(const std::vector<std::vector<IntVector>>& weight_sets, int r) {
  if (r < 2) throw DimensionError("chamber_fan: rank must be >= 2");
  for (const auto& set : weight_sets) {
    for (const auto& chi : set) {
      if (static_cast<int>(chi.size()) != r) {
        throw DimensionError("chamber_fan: character length differs from r");
      }
    }
  }

  const IntVector rho = slice_vector(r);

  // Refining hyperplanes: differences within each weight set, projected to
  // the trace-zero subspace and canonicalized.
  std::set<IntVector> plane_set;
  for (const auto& set : weight_sets) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        IntVector d;
        d.reserve(set[i].size());
        for (std::size_t k = 0; k < set[i].size(); ++k) d.push_back(set[i][k] - set[j][k]);
        if (is_zero_vector(d)) continue;
        if (auto p = projected_normal(d)) {
          plane_set.insert(canonical_hyperplane(std::move(*p)));
        }
      }
    }
  }
  std::vector<IntVector> planes(plane_set.begin(), plane_set.end());

  // Base cell: the dominant chamber lambda_1 <= ... <= lambda_r.
  Cell base;
  for (int k = 0; k + 1 < r; ++k) {
    IntVector n(static_cast<std::size_t>(r), mpz_class(0));
    n[static_cast<std::size_t>(k)] = -1;
    n[static_cast<std::size_t>(k) + 1] = 1;
    base.ineqs.push_back(std::move(n));
  }
  base.vertices = enumerate_vertices(base.ineqs, r, rho);
  assert(affine_dim(base.vertices) == r - 2);

  std::vector<Cell> cells{std::move(base)};
  for (const auto& h : planes) {
    std::vector<Cell> next;
    for (auto& cell : cells) {
      bool has_pos = false;
      bool has_neg = false;
      for (const auto& v : cell.vertices) {
        const int s = dot(v, rat_vector(h)).sign();
        has_pos = has_pos || s > 0;
        has_neg = has_neg || s < 0;
      }
      if (!(has_pos && has_neg)) {
        next.push_back(std::move(cell));
        continue;
      }
      IntVector neg(h);
      for (auto& x : neg) x = -x;
      for (const IntVector& side : {h, neg}) {
        Cell half;
        half.ineqs = cell.ineqs;
        half.ineqs.push_back(side);
        half.vertices = enumerate_vertices(half.ineqs, r, rho);
        assert(affine_dim(half.vertices) == r - 2);
        next.push_back(std::move(half));
      }
    }
    cells = std::move(next);
  }

  Fan fan;
  fan.r = r;
  fan.hyperplanes = std::move(planes);

  for (const auto& cell : cells) {
    Cone cone;
    for (const auto& v : cell.vertices) {
      cone.generators.push_back(primitive_integer_direction(v));
    }
    std::sort(cone.generators.begin(), cone.generators.end(),
              [](const IntVector& x, const IntVector& y) { return compare_vectors(x, y) < 0; });

    const RatVector interior = centroid(cell.vertices);
    cone.sign_vector.reserve(fan.hyperplanes.size());
    for (const auto& h : fan.hyperplanes) {
      const int s = dot(interior, rat_vector(h)).sign();
      assert(s != 0);
      cone.sign_vector.push_back(s > 0 ? '+' : (s < 0 ? '-' : '0'));
    }

    // Facet normals: deduplicate, then keep the inequalities whose tight
    // vertex set spans a facet of the slice polytope (affine dimension
    // r - 3; the empty set counts as dimension -1, which is the facet
    // dimension when r = 2).
    std::vector<IntVector> candidates = cell.ineqs;
    std::sort(candidates.begin(), candidates.end(),
              [](const IntVector& x, const IntVector& y) { return compare_vectors(x, y) < 0; });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& n : candidates) {
      std::vector<RatVector> tight;
      for (const auto& v : cell.vertices) {
        if (dot(v, rat_vector(n)).is_zero()) tight.push_back(v);
      }
      if (affine_dim(tight) == r - 3) {
        cone.facet_normals.push_back(n);
      }
    }
    fan.cones.push_back(std::move(cone));
  }

  std::sort(fan.cones.begin(), fan.cones.end(), [](const Cone& x, const Cone& y) {
    if (x.sign_vector != y.sign_vector) return x.sign_vector < y.sign_vector;
    return false;
  });

  std::set<IntVector> edge_set;
  for (const auto& cone : fan.cones) {
    edge_set.insert(cone.generators.begin(), cone.generators.end());
  }
  fan.edge_generators.assign(edge_set.begin(), edge_set.end());
  std::sort(fan.edge_generators.begin(), fan.edge_generators.end(),
            [](const IntVector& x, const IntVector& y) { return compare_vectors(x, y) < 0; });
  return fan;
}

const Cone* find_containing_cone(const Fan& fan, const RatVector& lambda) {
  if (static_cast<int>(lambda.size()) != fan.r) {
    throw DimensionError("find_containing_cone: vector length differs from fan rank");
  }
  for (const auto& cone : fan.cones) {
    bool inside = true;
    for (const auto& n : cone.facet_normals) {
      if (dot(lambda, rat_vector(n)).sign() < 0) {
        inside = false;
        break;
      }
    }
    if (inside) return &cone;
  }
  return nullptr;
}

namespace {

bool entry_less(const TestSetEntry& x, const TestSetEntry& y) {
  if (x.ranks != y.ranks) return x.ranks < y.ranks;
  return compare_vectors(x.alphas, y.alphas) < 0;
}

}  // namespace

TestSet test_set(int a, int b, int c, int r) {
  if (r < 2) throw DimensionError("test_set: rank must be >= 2");
  std::vector<IntVector> chars;
  for (const auto& [chi, mult] : enumerate_weights(a, b, c, r)) {
    chars.push_back(chi);
  }
  const Fan fan = chamber_fan({chars}, r);

  TestSet out;
  out.r = r;
  for (const auto& edge : fan.edge_generators) {
    const FlagOfResult fo = weighted_flag_of_ops(edge);
    TestSetEntry entry{fo.flag.ranks, fo.flag.alphas};
    out.entries.push_back(std::move(entry));
  }
  std::sort(out.entries.begin(), out.entries.end(), entry_less);
  out.entries.erase(std::unique(out.entries.begin(), out.entries.end()), out.entries.end());
  return out;
}

Rational product_threshold(const std::vector<IntVector>& weights_1,
                           const std::vector<IntVector>& weights_2, int r) {
  if (weights_1.empty() || weights_2.empty()) {
    throw ParameterError("product_threshold: weight sets must be nonempty");
  }
  const Fan fan = chamber_fan({weights_1, weights_2}, r);
  bool first = true;
  mpz_class k1 = 0, k2 = 0;
  for (const auto& edge : fan.edge_generators) {
    for (const auto& chi : weights_1) {
      const mpz_class v = idot(edge, chi);
      if (first) {
        k1 = k2 = v;
        first = false;
      } else {
        if (v > k1) k1 = v;
        if (v < k2) k2 = v;
      }
    }
  }
  const mpz_class neg_k2 = -k2;
  return Rational(k1 > neg_k2 ? k1 : neg_k2);
}

ProductProbeReport product_instability_probe(const TensorPoint& w1, const TensorPoint& w2,
                                             const Rational& eta) {
  if (eta.sign() <= 0) {
    throw ParameterError("product_instability_probe: eta must be positive");
  }
  if (w1.r != w2.r) {
    throw DimensionError("product_instability_probe: factors have different ranks");
  }
  if (!torus_semistable(w2)) {
    throw PreconditionError("unstable-factor",
                            "second factor must be torus-semistable for the probe");
  }

  const auto chars1 = state_weights(w1);
  const auto chars2 = state_weights(w2);
  std::vector<RatVector> combined;
  combined.reserve(chars1.size() * chars2.size());
  for (const auto& c1 : chars1) {
    const RatVector p1 = project_trace_zero(rat_vector(c1));
    for (const auto& c2 : chars2) {
      combined.push_back(p1 + eta * project_trace_zero(rat_vector(c2)));
    }
  }

  const MinNormResult mn = min_norm_point(combined);
  ProductProbeReport report;
  report.eta = eta;
  report.min_norm_sq = mn.norm_sq;
  if (mn.norm_sq.is_zero()) {
    report.unstable = false;
    return report;
  }
  report.unstable = true;
  RatVector direction = mn.point;
  for (auto& x : direction) x = -x;
  OneParamSubgroup lambda;
  lambda.weights = primitive_integer_direction(direction);
  lambda.sl_constrained = true;
  report.mu_1 = mu_kappa(lambda.weights, w1);
  report.mu_2 = mu_kappa(lambda.weights, w2);
  report.combined = *report.mu_1 + eta * (*report.mu_2);
  assert(report.combined->sign() < 0);
  report.lambda_star = std::move(lambda);
  return report;
}

}  // namespace decostab
