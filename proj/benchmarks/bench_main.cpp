// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "quatgraph/homspace.hpp"
#include "quatgraph/quotient.hpp"

namespace {

using namespace quatgraph;

std::shared_ptr<const AlgebraData> example_algebra() {
  const Field& f = Field::get_prime(5);
  static const auto alg = build_algebra(
      f.spec(), {Poly::from_ints(f, {0, 1}), Poly::from_ints(f, {1, 1}),
                 Poly::from_ints(f, {2, 1}), Poly::from_ints(f, {3, 1})});
  return alg;
}

void BM_NewtonSqrt(benchmark::State& state) {
  const Field& f = Field::get_prime(5);
  const Poly a = Poly::from_ints(f, {3, 1, 1, 1, 1});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(newton_sqrt(a, n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_NewtonSqrt)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNCubed);

// Hom between two siblings at distance n from L(0,0).
void BM_Hom(benchmark::State& state) {
  const auto alg = example_algebra();
  const int n = static_cast<int>(state.range(0));
  const Vertex v(n);
  const Vertex w(n, n - 1, {1});
  hom(*alg, v, w);  // fills the shared sqrt(alpha) memo
  for (auto _ : state) benchmark::DoNotOptimize(hom(*alg, v, w));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Hom)->DenseRange(2, 12, 2)->Complexity();

void BM_ComputeQuotient(benchmark::State& state) {
  const Field& f = Field::get_prime(static_cast<int>(state.range(0)));
  std::vector<Poly> primes;
  for (int c = 0; c < 4; ++c) primes.push_back(Poly::from_ints(f, {c, 1}));
  const auto alg = build_algebra(f.spec(), primes);
  for (auto _ : state) benchmark::DoNotOptimize(compute_quotient(alg));
}
BENCHMARK(BM_ComputeQuotient)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Reduce(benchmark::State& state) {
  const auto alg = example_algebra();
  const QuotientGraph g = compute_quotient(alg);
  const Presentation p = presentation(g);
  std::mt19937 rng(1);
  std::vector<Vertex> targets;
  for (int t = 0; t < 64; ++t) {
    QuatElem x = alg->one();
    for (int k = 0; k < static_cast<int>(state.range(0)); ++k) {
      x = alg->mul(x, p.generators[rng() % p.generators.size()]);
    }
    targets.push_back(act_quat(*alg, x, g.vertices[rng() % g.vertices.size()].nf));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(reduce(g, p, targets[i++ % targets.size()]));
}
BENCHMARK(BM_Reduce)->Arg(2)->Arg(6)->Arg(12);

}  // namespace

// The packaged benchmark_main archive is built with a different LTO version.
BENCHMARK_MAIN();
