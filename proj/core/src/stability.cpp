#include "decostab/stability.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <string>

namespace decostab {

namespace {

Rational rational_min(const Rational& x, const Rational& y) { return x < y ? x : y; }
Rational rational_max(const Rational& x, const Rational& y) { return x < y ? y : x; }

mpz_class floor_of(const Rational& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
  return out;
}

mpz_class ceil_of(const Rational& q) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
  return out;
}

}  // namespace

SheafNumerics SheafNumerics::curve(int rank, const mpz_class& degree, long genus) {
  SheafNumerics s;
  s.rank = rank;
  s.degree = degree;
  s.dim_x = 1;
  s.hilbert = RatPolynomial{{Rational(degree) + Rational(static_cast<long>(rank)) *
                                                   Rational(1 - genus),
                             Rational(static_cast<long>(rank))}};
  s.validate();
  return s;
}

void SheafNumerics::validate() const {
  if (rank < 1) throw DimensionError("sheaf numerics: rank must be >= 1");
  if (dim_x < 1) throw DimensionError("sheaf numerics: base dimension must be >= 1");
  if (hilbert.degree() != dim_x) {
    throw DimensionError("sheaf numerics: Hilbert polynomial degree differs from dim X");
  }
}

void DecoratedConfig::validate() const {
  sheaf.validate();
  if (a < 0 || b < 1 || c < 0) {
    throw ParameterError("decorated config: need a >= 0, b >= 1, c >= 0");
  }
  generic_point.validate();
  if (generic_point.r != sheaf.rank || generic_point.a != a || generic_point.b != b ||
      generic_point.c != c) {
    throw DimensionError("decorated config: generic point shape differs from (r, a, b, c)");
  }
}

void ConfigClass::validate() const {
  if (r < 2) throw DimensionError("config class: rank must be >= 2");
  if (dim_x < 1) throw DimensionError("config class: base dimension must be >= 1");
  if (a < 0 || b < 1 || c < 0) {
    throw ParameterError("config class: need a >= 0, b >= 1, c >= 0");
  }
}

namespace {

/// Per-level sub-Hilbert polynomials: as given, or synthesized on curves
/// from the sub-degrees via P_i = e_i + r_i (P - d) / r.
std::vector<RatPolynomial> sub_hilbert_polys(const SheafNumerics& sheaf,
                                             const FiltrationNumerics& filt) {
  const std::size_t s = filt.flag.steps();
  if (!filt.sub_hilberts.empty()) {
    if (filt.sub_hilberts.size() != s) {
      throw DimensionError("filtration: sub-Hilbert count differs from flag steps");
    }
    for (std::size_t i = 0; i < s; ++i) {
      const auto& p = filt.sub_hilberts[i];
      if (p.degree() != sheaf.dim_x || p.coeffs.back().sign() <= 0) {
        throw InvalidPointError(
            "filtration: sub-Hilbert polynomials need degree dim X and positive leading "
            "coefficient");
      }
    }
    return filt.sub_hilberts;
  }
  if (sheaf.dim_x != 1) {
    throw ParameterError(
        "filtration: sub-Hilbert polynomials are required when the base dimension exceeds 1");
  }
  if (filt.sub_degrees.size() != s) {
    throw DimensionError("filtration: sub-degree count differs from flag steps");
  }
  const RatPolynomial shape =
      Rational(mpz_class(1), mpz_class(static_cast<long>(sheaf.rank))) *
      (sheaf.hilbert - RatPolynomial::constant(Rational(sheaf.degree)));
  std::vector<RatPolynomial> out;
  out.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    out.push_back(RatPolynomial::constant(Rational(filt.sub_degrees[i])) +
                  Rational(static_cast<long>(filt.flag.ranks[i])) * shape);
  }
  return out;
}

}  // namespace

MLPair m_and_l(const SheafNumerics& sheaf, const FiltrationNumerics& filt) {
  sheaf.validate();
  filt.flag.validate();
  if (filt.flag.r != sheaf.rank) {
    throw DimensionError("m_and_l: flag ambient rank differs from sheaf rank");
  }
  const std::vector<RatPolynomial> subs = sub_hilbert_polys(sheaf, filt);
  const Rational r(static_cast<long>(sheaf.rank));
  RatPolynomial m;
  for (std::size_t i = 0; i < filt.flag.steps(); ++i) {
    const Rational ri(static_cast<long>(filt.flag.ranks[i]));
    m = m + filt.flag.alphas[i] * (ri * sheaf.hilbert - r * subs[i]);
  }
  MLPair out;
  out.l = m.coeff(static_cast<std::size_t>(sheaf.dim_x - 1));
  out.m = std::move(m);
  return out;
}

Rational character_line_degree(const SheafNumerics& sheaf, const FiltrationNumerics& filt) {
  sheaf.validate();
  filt.flag.validate();
  if (filt.flag.r != sheaf.rank) {
    throw DimensionError("character_line_degree: flag ambient rank differs from sheaf rank");
  }
  const std::size_t s = filt.flag.steps();
  std::vector<Rational> degrees;
  degrees.reserve(s);
  if (filt.sub_degrees.size() == s) {
    for (const auto& e : filt.sub_degrees) degrees.emplace_back(e);
  } else if (sheaf.dim_x == 1 && filt.sub_hilberts.size() == s) {
    // e_i = P_i(0) - r_i (P(0) - d) / r, inverting the curve synthesis.
    const Rational base =
        (sheaf.hilbert.eval(Rational(0)) - Rational(sheaf.degree)) /
        Rational(static_cast<long>(sheaf.rank));
    for (std::size_t i = 0; i < s; ++i) {
      degrees.push_back(filt.sub_hilberts[i].eval(Rational(0)) -
                        Rational(static_cast<long>(filt.flag.ranks[i])) * base);
    }
  } else {
    throw ParameterError("character_line_degree: filtration is missing sub-degrees");
  }
  Rational sum(0);
  const Rational r(static_cast<long>(sheaf.rank));
  const Rational d(sheaf.degree);
  for (std::size_t i = 0; i < s; ++i) {
    sum += filt.flag.alphas[i] *
           (d * Rational(static_cast<long>(filt.flag.ranks[i])) - degrees[i] * r);
  }
  return sum;
}

Rational mu_decoration(const FiltrationNumerics& filt, const TensorPoint& w) {
  filt.flag.validate();
  w.validate();
  if (w.r != filt.flag.r) {
    throw DimensionError("mu_decoration: tensor point rank differs from flag ambient rank");
  }
  if (w.a == 0) return Rational(0);

  const RatVector gamma = gamma_vector(filt.flag).block_values;
  std::optional<Rational> best;
  for (const auto& [key, val] : w.coeffs) {
    Rational sum(0);
    for (int i : key.first) {
      sum += gamma[static_cast<std::size_t>(filt.flag.level_of(i) - 1)];
    }
    if (!best || sum < *best) best = sum;
  }
  return -*best;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Stable:
      return "Stable";
    case Verdict::Semistable:
      return "Semistable";
    case Verdict::Unstable:
      return "Unstable";
  }
  return "Unstable";
}

namespace {

struct MemberEvaluation {
  Rational mu;
  RatPolynomial m;
};

MemberEvaluation evaluate_member(const DecoratedConfig& config, const FiltrationNumerics& filt) {
  MemberEvaluation out;
  if (filt.basis_order.empty()) {
    out.mu = mu_decoration(filt, config.generic_point);
  } else {
    out.mu = mu_decoration(filt, relabel_basis(config.generic_point, filt.basis_order));
  }
  out.m = m_and_l(config.sheaf, filt).m;
  return out;
}

void validate_delta(const DecoratedConfig& config, const RatPolynomial& delta) {
  if (lex_sign(delta) != Ordering::Greater) {
    throw ParameterError("stability parameter must be lex-positive");
  }
  if (delta.degree() > config.sheaf.dim_x - 1) {
    throw ParameterError("stability parameter degree exceeds dim X - 1");
  }
}

}  // namespace

StabilityReport delta_semistable(const DecoratedConfig& config, const RatPolynomial& delta,
                                 const std::vector<FiltrationNumerics>& family) {
  config.validate();
  validate_delta(config, delta);
  if (family.empty()) {
    throw ParameterError("delta_semistable: family must be nonempty");
  }

  StabilityReport report;
  report.verdict = Verdict::Stable;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const MemberEvaluation eval = evaluate_member(config, family[i]);
    const RatPolynomial value = eval.m + eval.mu * delta;
    const Ordering sign = lex_sign(value);
    if (sign == Ordering::Less) {
      report.verdict = Verdict::Unstable;
      report.certificate_index = i;
      report.certificate = family[i];
      report.certificate_value = value;
      return report;
    }
    if (sign == Ordering::Equal && report.verdict == Verdict::Stable) {
      report.verdict = Verdict::Semistable;
      report.certificate_index = i;
      report.certificate = family[i];
      report.certificate_value = value;
    }
  }
  return report;
}

AsymptoticReport asymptotically_semistable(const DecoratedConfig& config,
                                           const std::vector<FiltrationNumerics>& family,
                                           const std::vector<RatMatrix>& basis_changes) {
  config.validate();
  if (family.empty()) {
    throw ParameterError("asymptotically_semistable: family must be nonempty");
  }

  AsymptoticReport report;
  report.generic_point_semistable = torus_semistable(config.generic_point, basis_changes);
  if (!report.generic_point_semistable) {
    report.verdict = Verdict::Unstable;
    report.instability = instability_ops(config.generic_point, basis_changes);
    return report;
  }

  bool all_strict = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const MemberEvaluation eval = evaluate_member(config, family[i]);
    if (!eval.mu.is_zero()) continue;
    report.has_mu_zero_member = true;
    const Ordering sign = lex_sign(eval.m);
    if (sign == Ordering::Less) {
      report.verdict = Verdict::Unstable;
      report.certificate_index = i;
      return report;
    }
    if (sign == Ordering::Equal && all_strict) {
      all_strict = false;
      report.certificate_index = i;
    }
  }
  if (report.has_mu_zero_member && all_strict) {
    report.verdict = Verdict::Stable;
  } else {
    report.verdict = Verdict::Semistable;
  }
  return report;
}

namespace {

struct NumeratorItem {
  Rational value;
  std::size_t signature;
  std::vector<mpz_class> degrees;
};

struct DenominatorItem {
  Rational value;
  std::size_t signature;
  std::vector<int> tuple;
};

/// Iterates all integer vectors in the product of inclusive intervals.
void for_each_degree_vector(const std::vector<std::pair<mpz_class, mpz_class>>& boxes,
                            const std::function<void(const std::vector<mpz_class>&)>& visit) {
  std::vector<mpz_class> e;
  e.reserve(boxes.size());
  for (const auto& box : boxes) {
    if (box.first > box.second) return;  // empty interval: no vectors
    e.push_back(box.first);
  }
  while (true) {
    visit(e);
    std::size_t pos = boxes.size();
    while (pos > 0) {
      --pos;
      if (e[pos] < boxes[pos].second) {
        e[pos] += 1;
        for (std::size_t j = pos + 1; j < boxes.size(); ++j) e[j] = boxes[j].first;
        break;
      }
      if (pos == 0) return;
    }
    if (boxes.empty()) return;
  }
}

mpz_class lcm_of(const mpz_class& x, const mpz_class& y) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return out;
}

WallWitness make_witness(const TestSet& tset, const NumeratorItem& u, const DenominatorItem& v) {
  WallWitness witness;
  witness.m_value = u.value;
  witness.m_ranks = tset.entries[u.signature].ranks;
  witness.m_alphas = tset.entries[u.signature].alphas;
  witness.sub_degrees = u.degrees;
  witness.mu_value = v.value;
  witness.mu_ranks = tset.entries[v.signature].ranks;
  witness.mu_alphas = tset.entries[v.signature].alphas;
  witness.level_tuple = v.tuple;
  witness.scale = lcm_of(u.value.den(), v.value.den());
  witness.same_signature = u.signature == v.signature;
  return witness;
}

}  // namespace

WallReport candidate_walls(const ConfigClass& cls, const DegreeBounds& degree_bounds) {
  cls.validate();
  if (cls.dim_x != 1) {
    throw ParameterError(
        "candidate_walls: wall enumeration is implemented for one-dimensional base only");
  }
  if (degree_bounds.empty()) {
    throw ParameterError("candidate_walls: empty degree bounds");
  }

  const TestSet tset = test_set(cls.a, cls.b, cls.c, cls.r);
  const Rational d(cls.d);
  const Rational r(static_cast<long>(cls.r));

  std::vector<NumeratorItem> numerators;
  std::vector<DenominatorItem> denominators;
  std::vector<std::vector<std::size_t>> numerators_by_sig(tset.entries.size());
  std::vector<std::vector<std::size_t>> denominators_by_sig(tset.entries.size());

  for (std::size_t sig = 0; sig < tset.entries.size(); ++sig) {
    const TestSetEntry& entry = tset.entries[sig];
    const std::size_t s = entry.ranks.size();

    std::vector<std::pair<mpz_class, mpz_class>> boxes;
    boxes.reserve(s);
    for (int rank : entry.ranks) {
      auto it = degree_bounds.find(rank);
      if (it == degree_bounds.end()) {
        throw ParameterError("candidate_walls: degree bounds missing rank " +
                             std::to_string(rank));
      }
      boxes.push_back(it->second);
    }
    for_each_degree_vector(boxes, [&](const std::vector<mpz_class>& e) {
      Rational value(0);
      for (std::size_t i = 0; i < s; ++i) {
        value += entry.alphas[i] *
                 (d * Rational(static_cast<long>(entry.ranks[i])) - Rational(e[i]) * r);
      }
      numerators_by_sig[sig].push_back(numerators.size());
      numerators.push_back(NumeratorItem{std::move(value), sig, e});
    });

    // Decoration values from the block sums: every level tuple in
    // [1, s+1]^a, nonzero sums only.  The empty tuple of a = 0 sums to
    // zero, so no walls arise from it.
    WeightedFlag flag;
    flag.r = cls.r;
    flag.ranks = entry.ranks;
    flag.alphas = entry.alphas;
    const RatVector gamma = gamma_vector(flag).block_values;
    if (cls.a > 0) {
      std::vector<int> tuple(static_cast<std::size_t>(cls.a), 1);
      while (true) {
        Rational sum(0);
        for (int j : tuple) sum += gamma[static_cast<std::size_t>(j - 1)];
        const Rational mu = -sum;
        if (!mu.is_zero()) {
          denominators_by_sig[sig].push_back(denominators.size());
          denominators.push_back(DenominatorItem{mu, sig, tuple});
        }
        std::size_t pos = tuple.size();
        bool advanced = false;
        while (pos > 0) {
          --pos;
          if (tuple[pos] <= static_cast<int>(s)) {
            ++tuple[pos];
            for (std::size_t j = pos + 1; j < tuple.size(); ++j) tuple[j] = 1;
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
    }
  }

  std::map<Rational, WallWitness> wall_map;
  // Same-signature pairs first so provenance prefers walls realized by a
  // single filtration, then the full cross product for the superset.
  for (std::size_t sig = 0; sig < tset.entries.size(); ++sig) {
    for (std::size_t ui : numerators_by_sig[sig]) {
      for (std::size_t vi : denominators_by_sig[sig]) {
        const Rational wall = -numerators[ui].value / denominators[vi].value;
        if (wall.sign() <= 0) continue;
        if (!wall_map.count(wall)) {
          wall_map.emplace(wall, make_witness(tset, numerators[ui], denominators[vi]));
        }
      }
    }
  }
  for (const auto& u : numerators) {
    for (const auto& v : denominators) {
      const Rational wall = -u.value / v.value;
      if (wall.sign() <= 0) continue;
      if (!wall_map.count(wall)) {
        wall_map.emplace(wall, make_witness(tset, u, v));
      }
    }
  }

  WallReport report;
  report.walls.reserve(wall_map.size());
  report.provenance.reserve(wall_map.size());
  for (const auto& [value, witness] : wall_map) {
    report.walls.push_back(RatPolynomial::constant(value));
    report.provenance.push_back(witness);
  }
  return report;
}

ChamberReport chamber_report(const WallReport& walls, const RatPolynomial& delta) {
  if (lex_sign(delta) != Ordering::Greater) {
    throw ParameterError("chamber_report: stability parameter must be lex-positive");
  }
  for (std::size_t i = 0; i < walls.walls.size(); ++i) {
    if (lex_sign(walls.walls[i]) != Ordering::Greater) {
      throw ParameterError("chamber_report: walls must be lex-positive");
    }
    if (i > 0 && lex_compare(walls.walls[i - 1], walls.walls[i]) != Ordering::Less) {
      throw ParameterError("chamber_report: walls must be strictly ascending");
    }
  }

  ChamberReport report;
  for (std::size_t i = 0; i < walls.walls.size(); ++i) {
    const Ordering cmp = lex_compare(delta, walls.walls[i]);
    if (cmp == Ordering::Equal) {
      report.kind = ChamberReport::Kind::OnWall;
      report.wall_index = i + 1;
      report.lower = walls.walls[i];
      report.upper = walls.walls[i];
      return report;
    }
    if (cmp == Ordering::Less) {
      if (i == 0) {
        report.kind = ChamberReport::Kind::BottomChamber;
        report.lower = RatPolynomial::zero();
        report.upper = walls.walls[0];
      } else {
        report.kind = ChamberReport::Kind::InChamber;
        report.wall_index = i;
        report.lower = walls.walls[i - 1];
        report.upper = walls.walls[i];
      }
      return report;
    }
  }
  report.kind = ChamberReport::Kind::TopChamber;
  report.lower = walls.walls.empty() ? RatPolynomial::zero() : walls.walls.back();
  report.upper = std::nullopt;
  return report;
}

DeltaBoundsResult delta_bounds(const ConfigClass& cls, const TestSet& tset,
                               const std::vector<mpz_class>& n_per_rank) {
  cls.validate();
  if (tset.r != cls.r) {
    throw DimensionError("delta_bounds: test set rank differs from config class rank");
  }
  if (static_cast<int>(n_per_rank.size()) != cls.r - 1) {
    throw ParameterError("delta_bounds: n_per_rank must supply n_1 .. n_{r-1}");
  }
  if (tset.entries.empty()) {
    throw ParameterError("delta_bounds: empty test set");
  }

  DeltaBoundsResult out;
  out.delta0 = rational_max(Rational(0), Rational(cls.d));

  const Rational d(cls.d);
  const Rational dl(cls.d_lambda);
  const Rational r(static_cast<long>(cls.r));
  std::optional<Rational> c_min;
  for (const auto& entry : tset.entries) {
    Rational sum(0);
    for (std::size_t i = 0; i < entry.ranks.size(); ++i) {
      const long ri = entry.ranks[i];
      const Rational n(n_per_rank[static_cast<std::size_t>(cls.r - ri - 1)]);
      sum += entry.alphas[i] * (d * Rational(ri - cls.r) - n * dl * r);
    }
    if (!c_min || sum < *c_min) c_min = sum;
  }
  out.delta1 = rational_max(out.delta0, -*c_min);
  return out;
}

std::vector<FiltrationNumerics> default_family(const DecoratedConfig& config,
                                               const DegreeBounds& degree_bounds,
                                               bool include_permutations) {
  config.validate();
  if (degree_bounds.empty()) {
    throw ParameterError("default_family: empty degree bounds");
  }
  const int r = config.sheaf.rank;
  const TestSet tset = test_set(config.a, config.b, config.c, r);

  std::vector<std::vector<int>> orders;
  orders.push_back({});  // identity
  if (include_permutations && config.a > 0) {
    std::vector<int> order(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    while (std::next_permutation(order.begin(), order.end())) {
      orders.push_back(order);
    }
  }

  std::vector<FiltrationNumerics> family;
  for (const auto& entry : tset.entries) {
    std::vector<std::pair<mpz_class, mpz_class>> boxes;
    for (int rank : entry.ranks) {
      auto it = degree_bounds.find(rank);
      if (it == degree_bounds.end()) {
        throw ParameterError("default_family: degree bounds missing rank " +
                             std::to_string(rank));
      }
      boxes.push_back(it->second);
    }
    for_each_degree_vector(boxes, [&](const std::vector<mpz_class>& e) {
      std::set<Rational> seen_mu;
      for (const auto& order : orders) {
        FiltrationNumerics member;
        member.flag.r = r;
        member.flag.ranks = entry.ranks;
        member.flag.alphas = entry.alphas;
        member.sub_degrees = e;
        member.basis_order = order;
        const Rational mu =
            order.empty()
                ? mu_decoration(member, config.generic_point)
                : mu_decoration(member, relabel_basis(config.generic_point, order));
        if (seen_mu.insert(mu).second) {
          family.push_back(std::move(member));
        }
      }
    });
  }
  if (family.empty()) {
    throw ParameterError("default_family: degree bounds produced no members");
  }
  return family;
}

DegreeBounds suggested_degree_bounds(const ConfigClass& cls,
                                     const std::vector<mpz_class>& n_per_rank,
                                     const Rational& delta_bar) {
  cls.validate();
  if (static_cast<int>(n_per_rank.size()) != cls.r - 1) {
    throw ParameterError("suggested_degree_bounds: n_per_rank must supply n_1 .. n_{r-1}");
  }
  if (delta_bar.sign() < 0) {
    throw ParameterError("suggested_degree_bounds: delta_bar must be nonnegative");
  }
  const Rational d(cls.d);
  const Rational dl(cls.d_lambda);
  const Rational r(static_cast<long>(cls.r));
  const Rational balanced_slope = d / r;

  Rational c1(0);
  bool first = true;
  for (int k = 1; k < cls.r; ++k) {
    const Rational n(n_per_rank[static_cast<std::size_t>(cls.r - k - 1)]);
    const Rational value = (d + n * dl) / Rational(static_cast<long>(k)) - balanced_slope;
    if (first || value > c1) {
      c1 = value;
      first = false;
    }
  }
  const Rational pattern_slack =
      delta_bar * Rational(static_cast<long>(cls.a)) *
      Rational(static_cast<long>(cls.r - 1)) / r;
  Rational c2 = rational_max(Rational(0), rational_max(c1, pattern_slack));

  DegreeBounds bounds;
  for (int k = 1; k < cls.r; ++k) {
    const Rational center = balanced_slope * Rational(static_cast<long>(k));
    const Rational slack = c2 * Rational(static_cast<long>(k * (cls.r - k))) / r +
                           delta_bar * Rational(static_cast<long>(cls.a)) *
                               Rational(static_cast<long>(cls.r - 1));
    bounds[k] = {ceil_of(center - slack), floor_of(center + slack)};
  }
  return bounds;
}

std::vector<WallVerification> verify_walls(const ConfigClass& cls, const WallReport& report) {
  cls.validate();
  if (cls.dim_x != 1) {
    throw ParameterError("verify_walls: wall verification is implemented for curves only");
  }

  std::vector<WallVerification> out;
  out.reserve(report.walls.size());
  for (std::size_t i = 0; i < report.walls.size(); ++i) {
    WallVerification check;
    check.wall = report.walls[i];
    const WallWitness& witness = report.provenance[i];
    if (!witness.same_signature) {
      check.confirmed = false;
      check.note = "no single-signature witness; wall kept as superset candidate";
      out.push_back(std::move(check));
      continue;
    }

    // Synthesize the one-member configuration realizing the witness: the
    // witnessed flag and sub-degrees, and a tensor point supported on one
    // tuple whose levels match the witnessed level tuple.
    FiltrationNumerics member;
    member.flag.r = cls.r;
    member.flag.ranks = witness.m_ranks;
    member.flag.alphas = witness.m_alphas;
    member.sub_degrees = witness.sub_degrees;

    TensorPoint point;
    point.r = cls.r;
    point.a = cls.a;
    point.b = cls.b;
    point.c = cls.c;
    IndexTuple tuple;
    tuple.reserve(witness.level_tuple.size());
    for (int j : witness.level_tuple) {
      tuple.push_back(j == 1 ? 1 : witness.m_ranks[static_cast<std::size_t>(j - 2)] + 1);
    }
    point.coeffs[{tuple, 1}] = Rational(1);

    DecoratedConfig config;
    config.sheaf = SheafNumerics::curve(cls.r, cls.d, 0);
    config.a = cls.a;
    config.b = cls.b;
    config.c = cls.c;
    config.deg_lambda = cls.d_lambda;
    config.generic_point = point;

    const Rational mu = mu_decoration(member, point);
    const Rational l = m_and_l(config.sheaf, member).l;
    if (mu != witness.mu_value || l != witness.m_value) {
      check.confirmed = false;
      check.note = "witness data does not reproduce under direct evaluation";
      out.push_back(std::move(check));
      continue;
    }

    const Rational wall_value = check.wall.coeff(0);
    const Rational eps = rational_min(Rational(mpz_class(1), mpz_class(64)),
                                      wall_value / Rational(2));
    const std::vector<FiltrationNumerics> family{member};
    const Verdict at_wall =
        delta_semistable(config, RatPolynomial::constant(wall_value), family).verdict;
    const Verdict below =
        delta_semistable(config, RatPolynomial::constant(wall_value - eps), family).verdict;
    const Verdict above =
        delta_semistable(config, RatPolynomial::constant(wall_value + eps), family).verdict;

    const bool flips = (below == Verdict::Stable && above == Verdict::Unstable) ||
                       (below == Verdict::Unstable && above == Verdict::Stable);
    if (at_wall == Verdict::Semistable && flips) {
      check.confirmed = true;
      check.note = "verdict semistable on the wall and strictly flips across it";
    } else {
      check.confirmed = false;
      check.note = "no strict verdict flip across the wall";
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace decostab
