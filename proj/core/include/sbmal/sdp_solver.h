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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sbmal/labeling.h"
#include "sbmal/modified_adjacency.h"
#include "sbmal/simplex.h"
#include "sbmal/vector_labeling.h"

namespace sbmal {

struct SolverConfig {
  // Factorization rank d. 0 means auto: max(r+1, ceil(sqrt(2n))), which is
  // past the Barvinok-Pataki rank at which low-rank factorizations of
  // unit-diagonal SDPs stop introducing spurious optima.
  int rank = 0;
  int max_iters = 2000;
  // Gradient norm threshold; 0 means auto: 1e-6 * n.
  double grad_tol = 0.0;
  int restarts = 5;
  uint64_t seed = 1;
  // Used as one of the `restarts` initializations when present. Free rows
  // get a small seeded perturbation so an exactly-critical warm start
  // (e.g. a snapped discrete iterate that new pins turn into a saddle)
  // cannot stall the ascent.
  std::optional<VectorLabeling> warm_start;
  double warm_dither = 1e-3;
  // Backtracking line-search controls. initial_step 0 means auto: one over
  // twice the largest absolute row sum of the weight matrix.
  double backtrack = 0.5;
  double initial_step = 0.0;
  bool record_history = false;
};

struct SolveResult {
  VectorLabeling labeling;
  double objective = 0.0;  // Tr(X^T M X), recomputed from the final iterate
  double grad_norm = 0.0;
  int iterations = 0;
  int restart_index = 0;
  // Accepted objective values per iteration of the winning run, when
  // cfg.record_history is set. Non-decreasing by the line-search contract.
  std::vector<double> objective_history;
};

// Tr(X^T M X) = sum_{i != j} M_ij <X_i, X_j>, via d implicit products.
double TraceScore(const ModifiedAdjacency& m, const Eigen::MatrixXd& rows);
double TraceScore(const ModifiedAdjacency& m, const VectorLabeling& x);

// Maximizes Tr(X^T M X) over unit rows by projected gradient ascent on the
// product of spheres, with supervised rows pinned to their simplex vectors
// (the Gram constraints of the label-constrained SDP hold by construction).
// Runs `restarts` seeded initializations (warm start first, when given) and
// returns the best; if rounding the winner to simplex vertices scores
// higher (integral optimum), the rounded embedding is returned instead.
// Pinned rows are preserved bit-for-bit.
SolveResult SolveSdp(const ModifiedAdjacency& m, const DiscreteLabeling& pins,
                     const SimplexBasis& basis, const SolverConfig& cfg);

// Accessor for the relaxed labeling. Pinning already aligns the solution
// when every community has a supervised row; with fewer distinct labels the
// caller must pair the output with BestFitSimplex before rounding.
VectorLabeling ExtractSolution(
    const SolveResult& result,
    const std::optional<SimplexBasis>& basis = std::nullopt);

}  // namespace sbmal
