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
#include <utility>
#include <vector>

#include "sbmal/labeling.h"

namespace sbmal {

// Simple undirected graph: no self-loops, no duplicate edges.
// Immutable after construction; cheap to share read-only across replicas.
class Graph {
 public:
  // Edges are unordered pairs; both (u,v) and (v,u) are accepted and stored
  // canonically with u < v. Throws on invalid endpoints, self-loops or
  // duplicates.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  int64_t edge_count() const { return static_cast<int64_t>(edges_.size()); }

  // Canonical (u < v) edge list, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Sorted neighbor list of a node.
  const std::vector<int>& Neighbors(int node) const {
    return adjacency_.at(node);
  }

  bool HasEdge(int u, int v) const;

  int Degree(int node) const {
    return static_cast<int>(adjacency_.at(node).size());
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// Stochastic block model parameters. Either dense probabilities (p, q) or
// the sparse form (a, b) with p = a/n, q = b/n.
struct SbmParams {
  int n = 0;
  int r = 2;
  double p = 0.0;  // within-community edge probability
  double q = 0.0;  // between-community edge probability
  std::optional<double> a;  // sparse within parameter, p = a/n
  std::optional<double> b;  // sparse between parameter, q = b/n

  static SbmParams Dense(int n, int r, double p, double q);
  static SbmParams Sparse(int n, int r, double a, double b);

  // Signal-to-noise ratio (a-b)^2 / (r(a+b)), with a = p*n, b = q*n when
  // the sparse form was not given. a=5, b=2, r=2 gives 9/14.
  double Snr() const;

  // Throws ParameterError when probabilities or counts are invalid.
  void Validate() const;
};

// Draws a graph and its planted labels. Labels are i.i.d. uniform over the
// r communities; each node pair gets an edge independently with probability
// p (same label) or q (different labels). Deterministic given the seed.
std::pair<Graph, GroundTruth> SampleSbm(const SbmParams& params,
                                        uint64_t seed);

// Add-one-smoothed plug-in estimate of (p, q) from the pairs among labeled
// nodes: p_hat = (e_in+1)/(pairs_in+2), q_hat = (e_out+1)/(pairs_out+2),
// clamped away from {0,1}. A side with no labeled pairs falls back to the
// given value; no pairs and no fallback raises EstimationError.
std::pair<double, double> EstimateParams(
    const Graph& graph, const DiscreteLabeling& labeling,
    std::optional<std::pair<double, double>> fallback = std::nullopt);

}  // namespace sbmal
