#include "decostab/weights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace decostab {

void TensorPoint::validate() const {
  if (r < 1) throw DimensionError("tensor point: r must be >= 1");
  if (a < 0 || b < 1 || c < 0) {
    throw InvalidPointError("tensor point: need a >= 0, b >= 1, c >= 0");
  }
  if (coeffs.empty()) {
    throw InvalidPointError("tensor point: zero tensor (no nonzero coefficient)");
  }
  for (const auto& [key, val] : coeffs) {
    const auto& [tuple, copy] = key;
    if (static_cast<int>(tuple.size()) != a) {
      throw DimensionError("tensor point: index tuple length differs from a");
    }
    for (int i : tuple) {
      if (i < 1 || i > r) {
        throw InvalidPointError("tensor point: index " + std::to_string(i) +
                                " outside [1, " + std::to_string(r) + "]");
      }
    }
    if (copy < 1 || copy > b) {
      throw InvalidPointError("tensor point: copy index " + std::to_string(copy) +
                              " outside [1, " + std::to_string(b) + "]");
    }
    if (val.is_zero()) {
      throw InvalidPointError("tensor point: stored coefficient is zero");
    }
  }
}

IntVector TensorPoint::character_of(const IndexTuple& tuple) const {
  IntVector chi(static_cast<std::size_t>(r), mpz_class(-c));
  for (int i : tuple) chi[static_cast<std::size_t>(i - 1)] += 1;
  return chi;
}

void WeightedFlag::validate() const {
  if (r < 1) throw DimensionError("weighted flag: ambient rank must be >= 1");
  if (ranks.size() != alphas.size()) {
    throw DimensionError("weighted flag: ranks and weights differ in length");
  }
  int prev = 0;
  for (int rk : ranks) {
    if (rk <= prev || rk >= r) {
      throw InvalidPointError("weighted flag: ranks must be strictly increasing in [1, r-1]");
    }
    prev = rk;
  }
  for (const auto& al : alphas) {
    if (al.sign() <= 0) {
      throw InvalidPointError("weighted flag: weights must be positive");
    }
  }
}

int WeightedFlag::level_of(int p) const {
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    if (p <= ranks[j]) return static_cast<int>(j) + 1;
  }
  return static_cast<int>(ranks.size()) + 1;
}

namespace {

// Enumerates all compositions m_1 + ... + m_r = a with m_i >= 0, calling
// visit(m) for each.  One composition corresponds to one character; the
// number of index tuples realizing it is the multinomial a! / prod m_i!.
void for_each_composition(int a, int r, std::vector<int>& m, int pos,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (pos == r - 1) {
    m[static_cast<std::size_t>(pos)] = a;
    visit(m);
    return;
  }
  for (int k = 0; k <= a; ++k) {
    m[static_cast<std::size_t>(pos)] = k;
    for_each_composition(a - k, r, m, pos + 1, visit);
  }
}

long multinomial(int a, const std::vector<int>& m) {
  // a! / prod m_i!, computed incrementally to stay in range at desk scale.
  long result = 1;
  int seen = 0;
  for (int part : m) {
    for (int i = 1; i <= part; ++i) {
      ++seen;
      result = result * seen / i;
    }
  }
  (void)a;
  return result;
}

}  // namespace

std::map<IntVector, long> enumerate_weights(int a, int b, int c, int r) {
  if (r < 1) throw DimensionError("enumerate_weights: r must be >= 1");
  if (a < 0 || b < 0 || c < 0) {
    throw ParameterError("enumerate_weights: a, b, c must be nonnegative");
  }
  if (a == 0 && b == 0) {
    throw ParameterError("enumerate_weights: (a, b) = (0, 0) has no weights");
  }
  std::map<IntVector, long> out;
  std::vector<int> m(static_cast<std::size_t>(r), 0);
  for_each_composition(a, r, m, 0, [&](const std::vector<int>& parts) {
    IntVector chi;
    chi.reserve(static_cast<std::size_t>(r));
    for (int p : parts) chi.emplace_back(p - c);
    out[chi] += multinomial(a, parts) * b;
  });
  return out;
}

std::vector<IntVector> state_weights(const TensorPoint& w) {
  w.validate();
  std::vector<IntVector> chars;
  for (const auto& [key, val] : w.coeffs) {
    chars.push_back(w.character_of(key.first));
  }
  std::sort(chars.begin(), chars.end(),
            [](const IntVector& x, const IntVector& y) { return compare_vectors(x, y) < 0; });
  chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
  return chars;
}

Rational mu_kappa(const IntVector& lambda, const TensorPoint& w) {
  if (static_cast<int>(lambda.size()) != w.r) {
    throw DimensionError("mu_kappa: one-parameter subgroup length differs from r");
  }
  if (is_zero_vector(lambda)) {
    throw ParameterError("mu_kappa: zero one-parameter subgroup");
  }
  const auto chars = state_weights(w);
  bool first = true;
  mpz_class best = 0;
  for (const auto& chi : chars) {
    mpz_class v = idot(lambda, chi);
    if (first || v > best) {
      best = v;
      first = false;
    }
  }
  return Rational(best);
}

Rational mu_kappa(const OneParamSubgroup& lambda, const TensorPoint& w) {
  return mu_kappa(lambda.weights, w);
}

BlockWeightVector gamma_vector(const WeightedFlag& flag) {
  flag.validate();
  const std::size_t s = flag.steps();
  const Rational r(static_cast<long>(flag.r));
  BlockWeightVector out;
  out.block_values.reserve(s + 1);
  for (std::size_t j = 0; j < s + 1; ++j) {
    // Level j+1 value: steps at or above the level contribute alpha_i (r_i - r),
    // steps strictly below contribute alpha_i r_i.
    Rational v(0);
    for (std::size_t i = 0; i < s; ++i) {
      const Rational ri(static_cast<long>(flag.ranks[i]));
      if (i >= j) {
        v += flag.alphas[i] * (ri - r);
      } else {
        v += flag.alphas[i] * ri;
      }
    }
    out.block_values.push_back(v);
  }
  out.entry_values.reserve(static_cast<std::size_t>(flag.r));
  for (int p = 1; p <= flag.r; ++p) {
    out.entry_values.push_back(out.block_values[static_cast<std::size_t>(flag.level_of(p) - 1)]);
  }
  return out;
}

FlagOfResult weighted_flag_of_ops(const OneParamSubgroup& lambda) {
  return weighted_flag_of_ops(lambda.weights);
}

FlagOfResult weighted_flag_of_ops(const IntVector& lambda) {
  if (lambda.empty()) throw DimensionError("weighted_flag_of_ops: empty weight vector");
  if (is_zero_vector(lambda)) {
    throw ParameterError("weighted_flag_of_ops: zero one-parameter subgroup");
  }
  const int r = static_cast<int>(lambda.size());
  std::vector<int> perm(lambda.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
    return lambda[static_cast<std::size_t>(x)] < lambda[static_cast<std::size_t>(y)];
  });

  FlagOfResult out;
  out.sorted_basis_permutation = perm;
  out.flag.r = r;
  for (std::size_t p = 0; p + 1 < lambda.size(); ++p) {
    const mpz_class& cur = lambda[static_cast<std::size_t>(perm[p])];
    const mpz_class& nxt = lambda[static_cast<std::size_t>(perm[p + 1])];
    if (cur != nxt) {
      out.flag.ranks.push_back(static_cast<int>(p) + 1);
      out.flag.alphas.push_back(Rational(nxt - cur, mpz_class(r)));
    }
  }
  return out;
}

TensorPoint relabel_basis(const TensorPoint& w, const std::vector<int>& order) {
  w.validate();
  if (static_cast<int>(order.size()) != w.r) {
    throw DimensionError("relabel_basis: order length differs from r");
  }
  std::vector<int> position(order.size() + 1, 0);  // original index -> 1-based position
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int idx = order[k];
    if (idx < 1 || idx > w.r || position[static_cast<std::size_t>(idx)] != 0) {
      throw ParameterError("relabel_basis: order is not a permutation of 1..r");
    }
    position[static_cast<std::size_t>(idx)] = static_cast<int>(k) + 1;
  }
  TensorPoint out;
  out.r = w.r;
  out.a = w.a;
  out.b = w.b;
  out.c = w.c;
  for (const auto& [key, val] : w.coeffs) {
    IndexTuple mapped;
    mapped.reserve(key.first.size());
    for (int i : key.first) mapped.push_back(position[static_cast<std::size_t>(i)]);
    out.coeffs[{mapped, key.second}] = val;
  }
  return out;
}

}  // namespace decostab
