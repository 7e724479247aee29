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
#include <set>
#include <string>
#include <vector>

#include "sbmal/graph.h"
#include "sbmal/sdp_solver.h"
#include "sbmal/simplex.h"

namespace sbmal {

// Per-node label distributions: the model the query selection tracks.
// Rows of queried nodes are delta distributions on the revealed label.
struct ModelMatrix {
  Eigen::MatrixXd probs;  // n x r, row-stochastic

  int n() const { return static_cast<int>(probs.rows()); }
  int r() const { return static_cast<int>(probs.cols()); }
};

enum class SelectionRule { kAnchor, kMemc, kRandom };

const char* SelectionRuleName(SelectionRule rule);

struct QueryRecord {
  int step = 0;  // 1-based query index
  int node = 0;
  int revealed = 0;
  SelectionRule rule = SelectionRule::kRandom;
  double score = 0.0;
};
using QueryLog = std::vector<QueryRecord>;

enum class MemcMode { kRankOne, kExact };

struct ActiveConfig {
  SolverConfig solver;
  MemcMode memc_mode = MemcMode::kRankOne;
  // Condition the expectation on the rounded discrete labeling instead of
  // the raw relaxed rows (ablation; default keeps the relaxed rows).
  bool discrete_expectation = false;
  uint64_t best_fit_seed = 0x5331u;
  int best_fit_restarts = 20;
};

// Relax-and-round semi-supervised labeling. Solves the pinned SDP; when
// the supervised labels do not cover all r communities, fits the best-fit
// simplex to the relaxed rows (vertices matched to the seen labels),
// otherwise rounds against the canonical simplex the pins used.
struct SemiSupervisedResult {
  DiscreteLabeling labels;
  SolveResult solve;
  SimplexBasis basis;  // basis the rounding used, in solver dimension
  bool used_best_fit = false;
};

SemiSupervisedResult SemiSupervised(const ModifiedAdjacency& m,
                                    const DiscreteLabeling& labeled,
                                    const ActiveConfig& cfg);

// The model matrix: conditional distribution per free node given the
// other rows, delta rows for labeled nodes.
ModelMatrix ComputeModel(const ModifiedAdjacency& m,
                         const DiscreteLabeling& labels,
                         const Eigen::MatrixXd& rows,
                         const SimplexBasis& basis);

struct Selection {
  int node = -1;
  double score = 0.0;
};

// Expected-model-change query selection: for each free candidate q, the
// expectation over hypothesized labels of the L1 change the reassignment
// induces in the model matrix. Requires every community to have a
// supervised label. kRankOne reuses the relaxed rows with row q
// overwritten, updating the cached product by a rank-one correction;
// kExact re-solves the SDP per hypothesis (oracle-scale only).
Selection MemcSelect(const ModifiedAdjacency& m, const VectorLabeling& relaxed,
                     const DiscreteLabeling& labels, const SimplexBasis& basis,
                     MemcMode mode, const ActiveConfig& cfg = {});

// All candidate scores, ordered like DiscreteLabeling::UnlabeledNodes().
std::vector<Selection> MemcScores(const ModifiedAdjacency& m,
                                  const VectorLabeling& relaxed,
                                  const DiscreteLabeling& labels,
                                  const SimplexBasis& basis, MemcMode mode,
                                  const ActiveConfig& cfg = {});

// Anchor query selection for the stage where some community has no
// supervised label yet: picks the node most confidently assigned to an
// unseen vertex of the (fitted) basis. StateError once all labels are seen.
Selection AnchorSelect(const ModifiedAdjacency& m,
                       const VectorLabeling& relaxed,
                       const DiscreteLabeling& labels,
                       const SimplexBasis& basis);

struct ActiveRunResult {
  DiscreteLabeling labels;
  QueryLog log;
  // Accuracy against the truth after 0, 1, ..., Q queries (each entry is
  // the rounded labeling of that step's solve).
  std::vector<double> step_accuracy;
};

// The full active loop: per step, solve the pinned SDP (warm-started from
// the previous step), pick an anchor while some community is unseen and an
// expected-model-change query afterwards, reveal the truth label, repeat;
// finish with a semi-supervised solve on the collected labels.
ActiveRunResult ActiveLoop(const Graph& graph, double p, double q,
                           const GroundTruth& truth, int budget,
                           const ActiveConfig& cfg);

// Random-selection baseline: queries `budget` distinct nodes uniformly at
// random (seeded), then runs the semi-supervised algorithm once.
ActiveRunResult RandomBaselineLoop(const Graph& graph, double p, double q,
                                   const GroundTruth& truth, int budget,
                                   uint64_t seed, const ActiveConfig& cfg);

// Fraction of non-queried nodes labeled correctly. With no queries there
// is nothing anchoring label identity, so the score is maximized over all
// r! label permutations. An empty evaluation set scores 1.
double Accuracy(const DiscreteLabeling& pred, const GroundTruth& truth,
                const std::set<int>& queried);

}  // namespace sbmal
