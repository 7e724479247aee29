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

#include "sbmal/labeling.h"
#include "sbmal/modified_adjacency.h"
#include "sbmal/sdp_solver.h"
#include "sbmal/simplex.h"

namespace sbmal {

// Distribution of one node's label over the r communities.
struct LabelDistribution {
  Eigen::VectorXd probs;

  int r() const { return static_cast<int>(probs.size()); }
};

// Computable lower bound on likelihood(rounded) / likelihood(ML optimum):
// exp((r-1)/(2r) * (disc_score - relax_score)). At most 1 whenever the
// relaxed objective dominates the rounded one.
struct RatioCertificate {
  double value = 0.0;
  double disc_score = 0.0;
  double relax_score = 0.0;
};

// Unnormalized log-likelihood of a discrete labeling given the graph:
// (r-1)/(2r) * Tr(X^T M X). Differences of this score between labelings
// equal exact log-likelihood ratios, for both the unsupervised and the
// supervised-conditioned problem.
double LogLikelihoodScore(const ModifiedAdjacency& m,
                          const DiscreteLabeling& labels);

// Same score for rows already embedded as simplex vectors. Rows that match
// no basis vector raise ParameterError.
double LogLikelihoodScore(const ModifiedAdjacency& m,
                          const Eigen::MatrixXd& rows,
                          const SimplexBasis& basis);

// Conditional label distribution of one node given every other node's row:
// softmax over basis vectors of (r-1)/r * <M_i rows, basis_c>. Discrete
// conditioning rows give the exact conditional; relaxed solver rows give
// its vector-label generalization. Row `node` of `rows` is ignored (the
// diagonal of M is zero).
LabelDistribution ConditionalDistribution(const ModifiedAdjacency& m,
                                          int node,
                                          const Eigen::MatrixXd& rows,
                                          const SimplexBasis& basis);

// Likelihood-ratio certificate comparing the rounded labeling with the
// relaxed solution it came from. Both must share the pinned labeled set.
RatioCertificate ApproxRatioCertificate(const ModifiedAdjacency& m,
                                        const DiscreteLabeling& rounded,
                                        const VectorLabeling& relaxed,
                                        const SimplexBasis& basis);

// Work cap for the exhaustive routines below: r^(number of free nodes)
// completions. Larger instances raise SizeCapError instead of silently
// subsampling.
constexpr double kBruteForceCap = 2e6;

// Exhaustive maximum-likelihood completion of a partial labeling. Ties go
// to the lexicographically smallest assignment. The score is evaluated by
// pair counting, independent of the matrix-product path used elsewhere.
DiscreteLabeling BruteForceMlLabeling(const ModifiedAdjacency& m,
                                      const DiscreteLabeling& pins);

// Exact marginal P[X_node = c | graph, X_L] by summing Bernoulli-product
// probabilities p^e_in (1-p)^... q^e_out (1-q)^... over all completions.
// Works from the raw graph and probabilities; never touches M.
LabelDistribution BruteForcePosterior(const Graph& graph, double p, double q,
                                      const DiscreteLabeling& pins, int node);

}  // namespace sbmal
