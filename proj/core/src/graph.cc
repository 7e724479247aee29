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

#include "sbmal/graph.h"

#include <algorithm>
#include <cmath>

#include "sbmal/errors.h"
#include "sbmal/rng.h"

namespace sbmal {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw ParameterError("node count must be nonnegative");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParameterError("edge endpoint out of range");
    if (u == v) throw ParameterError("self-loops are not allowed");
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw ParameterError("duplicate edges are not allowed");

  adjacency_.assign(static_cast<size_t>(n), {});
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::HasEdge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

SbmParams SbmParams::Dense(int n, int r, double p, double q) {
  SbmParams out;
  out.n = n;
  out.r = r;
  out.p = p;
  out.q = q;
  out.Validate();
  return out;
}

SbmParams SbmParams::Sparse(int n, int r, double a, double b) {
  SbmParams out;
  out.n = n;
  out.r = r;
  out.a = a;
  out.b = b;
  out.p = a / n;
  out.q = b / n;
  out.Validate();
  return out;
}

double SbmParams::Snr() const {
  const double aa = a.value_or(p * n);
  const double bb = b.value_or(q * n);
  return (aa - bb) * (aa - bb) / (r * (aa + bb));
}

void SbmParams::Validate() const {
  if (n < 1) throw ParameterError("n must be positive");
  if (r < 2) throw ParameterError("r must be at least 2");
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0))
    throw ParameterError("edge probabilities must lie in [0, 1]");
}

std::pair<Graph, GroundTruth> SampleSbm(const SbmParams& params,
                                        uint64_t seed) {
  params.Validate();
  Rng rng(seed);

  GroundTruth truth;
  truth.r = params.r;
  truth.labels.resize(static_cast<size_t>(params.n));
  for (int i = 0; i < params.n; ++i)
    truth.labels[i] =
        static_cast<int>(rng.NextInt(static_cast<uint64_t>(params.r)));

  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < params.n; ++u) {
    for (int v = u + 1; v < params.n; ++v) {
      const double prob =
          truth.labels[u] == truth.labels[v] ? params.p : params.q;
      if (rng.NextBernoulli(prob)) edges.emplace_back(u, v);
    }
  }
  return {Graph(params.n, std::move(edges)), std::move(truth)};
}

std::pair<double, double> EstimateParams(
    const Graph& graph, const DiscreteLabeling& labeling,
    std::optional<std::pair<double, double>> fallback) {
  if (labeling.n() != graph.n())
    throw DimensionError("labeling size does not match graph");

  const std::vector<int> labeled = labeling.LabeledNodes();
  int64_t pairs_in = 0, pairs_out = 0, edges_in = 0, edges_out = 0;
  for (size_t i = 0; i < labeled.size(); ++i) {
    for (size_t j = i + 1; j < labeled.size(); ++j) {
      const int u = labeled[i], v = labeled[j];
      const bool same = labeling.LabelOf(u) == labeling.LabelOf(v);
      const bool edge = graph.HasEdge(u, v);
      if (same) {
        ++pairs_in;
        if (edge) ++edges_in;
      } else {
        ++pairs_out;
        if (edge) ++edges_out;
      }
    }
  }

  auto clamp = [](double x) {
    constexpr double kEps = 1e-6;
    return std::min(std::max(x, kEps), 1.0 - kEps);
  };

  double p_hat, q_hat;
  if (pairs_in > 0) {
    p_hat = static_cast<double>(edges_in + 1) /
            static_cast<double>(pairs_in + 2);
  } else if (fallback) {
    p_hat = fallback->first;
  } else {
    throw EstimationError("no labeled within-community pairs and no fallback");
  }
  if (pairs_out > 0) {
    q_hat = static_cast<double>(edges_out + 1) /
            static_cast<double>(pairs_out + 2);
  } else if (fallback) {
    q_hat = fallback->second;
  } else {
    throw EstimationError(
        "no labeled between-community pairs and no fallback");
  }
  return {clamp(p_hat), clamp(q_hat)};
}

}  // namespace sbmal
