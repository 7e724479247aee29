// Copyright 2026 The sbmal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "sbmal/active_learning.h"
#include "sbmal/graph.h"
#include "sbmal/likelihood.h"
#include "sbmal/rng.h"
#include "sbmal/sdp_solver.h"

namespace {

using namespace sbmal;

std::pair<Graph, GroundTruth> Instance(int n) {
  return SampleSbm(SbmParams::Sparse(n, 2, 5.0, 2.0), 1);
}

Eigen::MatrixXd UnitRows(int n, int d, uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd rows(n, d);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < d; ++c) rows(i, c) = rng.NextGaussian();
    rows.row(i) /= rows.row(i).norm();
  }
  return rows;
}

void BM_ImplicitMatvec(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto [graph, truth] = Instance(n);
  const ModifiedAdjacency m(graph, 5.0 / n, 2.0 / n);
  const Eigen::MatrixXd x = UnitRows(n, 16, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.Multiply(x));
  }
}
BENCHMARK(BM_ImplicitMatvec)->Arg(500)->Arg(2000)->Unit(benchmark::kMicrosecond);

void BM_TraceScore(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto [graph, truth] = Instance(n);
  const ModifiedAdjacency m(graph, 5.0 / n, 2.0 / n);
  const Eigen::MatrixXd x = UnitRows(n, 16, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(TraceScore(m, x));
  }
}
BENCHMARK(BM_TraceScore)->Arg(500)->Arg(2000)->Unit(benchmark::kMicrosecond);

void BM_SolveSdp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto [graph, truth] = Instance(n);
  const ModifiedAdjacency m(graph, 5.0 / n, 2.0 / n);
  DiscreteLabeling pins(n, 2);
  pins.Assign(0, truth.labels[0]);
  SolverConfig cfg;
  cfg.restarts = 1;
  cfg.seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveSdp(m, pins, CanonicalSimplex(2, 1), cfg));
  }
}
BENCHMARK(BM_SolveSdp)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_MemcSelection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto [graph, truth] = Instance(n);
  const ModifiedAdjacency m(graph, 5.0 / n, 2.0 / n);
  DiscreteLabeling labels(n, 2);
  labels.Assign(0, 0);
  labels.Assign(1, 1);
  SolverConfig scfg;
  scfg.restarts = 1;
  scfg.seed = 9;
  const SolveResult solved = SolveSdp(m, labels, CanonicalSimplex(2, 1), scfg);
  const SimplexBasis basis =
      CanonicalSimplex(2, 1).EmbedIn(solved.labeling.d());
  for (auto _ : state) {
    benchmark::DoNotOptimize(MemcSelect(m, solved.labeling, labels, basis,
                                        MemcMode::kRankOne));
  }
}
BENCHMARK(BM_MemcSelection)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_BestFitSimplex(benchmark::State& state) {
  const Eigen::MatrixXd rows = UnitRows(200, 8, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BestFitSimplex(rows, 3, 5));
  }
}
BENCHMARK(BM_BestFitSimplex)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
