// Microbenchmarks for the hot paths: destabilizing-subgroup search,
// chamber-fan refinement, wall enumeration, and polynomial comparison.
// Run: decostab_bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "decostab/fan.hpp"
#include "decostab/instability.hpp"
#include "decostab/rational.hpp"
#include "decostab/stability.hpp"
#include "decostab/weights.hpp"

namespace {

using namespace decostab;

TensorPoint spread_point(int r, int a) {
  // A point supported on the index tuples in which 1 occurs fewer than a/r
  // times: every state character pairs strictly negatively with the
  // direction (r-1, -1, ..., -1), so the point is torus-unstable and the
  // certificate search runs its full subset enumeration.
  TensorPoint w;
  w.r = r;
  w.a = a;
  w.b = 1;
  w.c = 0;
  IndexTuple tuple(static_cast<std::size_t>(a), 1);
  int serial = 0;
  while (true) {
    ++serial;
    const long ones = std::count(tuple.begin(), tuple.end(), 1);
    if (serial % 3 != 0 && ones * r < a) {
      w.coeffs[{tuple, 1}] = Rational(serial);
    }
    std::size_t pos = tuple.size();
    bool advanced = false;
    while (pos > 0) {
      --pos;
      if (tuple[pos] < r) {
        ++tuple[pos];
        for (std::size_t j = pos + 1; j < tuple.size(); ++j) tuple[j] = 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return w;
}

void bench_instability_ops(benchmark::State& state) {
  const TensorPoint w = spread_point(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(instability_ops(w));
  }
}
BENCHMARK(bench_instability_ops)->Arg(2)->Arg(3);

void bench_chamber_fan(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  std::vector<IntVector> chars;
  for (const auto& [chi, mult] : enumerate_weights(3, 1, 0, r)) {
    (void)mult;
    chars.push_back(chi);
  }
  const std::vector<std::vector<IntVector>> sets{chars};
  for (auto _ : state) {
    benchmark::DoNotOptimize(chamber_fan(sets, r));
  }
}
BENCHMARK(bench_chamber_fan)->Arg(2)->Arg(3)->Arg(4);

void bench_candidate_walls(benchmark::State& state) {
  ConfigClass cls;
  cls.r = 2;
  cls.d = 6;
  cls.a = 2;
  cls.b = 1;
  cls.c = 0;
  cls.d_lambda = 0;
  DegreeBounds bounds;
  bounds[1] = {mpz_class(-static_cast<long>(state.range(0))),
               mpz_class(static_cast<long>(state.range(0)))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(candidate_walls(cls, bounds));
  }
}
BENCHMARK(bench_candidate_walls)->Arg(8)->Arg(32);

void bench_lex_compare(benchmark::State& state) {
  const RatPolynomial p({Rational(mpz_class(7), mpz_class(3)), Rational(5), Rational(1)});
  const RatPolynomial q({Rational(mpz_class(7), mpz_class(3)), Rational(5), Rational(1)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(lex_compare(p, q));
  }
}
BENCHMARK(bench_lex_compare);

}  // namespace

BENCHMARK_MAIN();
