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

#include "sbmal/likelihood.h"

#include <cmath>
#include <limits>
#include <vector>

namespace sbmal {

namespace {

// Enumerates all completions of the free nodes in lexicographic order
// (free nodes ascending, labels 0..r-1, last node fastest) and calls
// visit(labels) for each. `labels` is the full label vector.
template <typename Visitor>
void ForEachCompletion(const DiscreteLabeling& pins, Visitor&& visit) {
  const std::vector<int> free_nodes = pins.UnlabeledNodes();
  const int r = pins.r();
  std::vector<int> labels = pins.labels();
  for (int node : free_nodes) labels[node] = 0;

  while (true) {
    visit(labels);
    int pos = static_cast<int>(free_nodes.size()) - 1;
    while (pos >= 0) {
      if (++labels[free_nodes[pos]] < r) break;
      labels[free_nodes[pos]] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
}

void CheckBruteForceSize(const DiscreteLabeling& pins) {
  const int free_count = pins.n() - pins.LabeledCount();
  const double work = std::pow(static_cast<double>(pins.r()), free_count);
  if (work > kBruteForceCap)
    throw SizeCapError("exhaustive enumeration too large: r^" +
                       std::to_string(free_count) + " completions");
}

// Pair-counting statistics of a complete labeling.
struct PairCounts {
  int64_t edges_in = 0;    // edges joining equal labels
  int64_t edges_out = 0;   // edges joining different labels
  int64_t pairs_in = 0;    // node pairs with equal labels
  int64_t pairs_out = 0;   // node pairs with different labels
};

PairCounts CountPairs(const Graph& graph, const std::vector<int>& labels,
                      int r) {
  PairCounts counts;
  for (auto [u, v] : graph.edges()) {
    if (labels[u] == labels[v])
      ++counts.edges_in;
    else
      ++counts.edges_out;
  }
  std::vector<int64_t> sizes(static_cast<size_t>(r), 0);
  for (int label : labels) ++sizes[label];
  for (int64_t g : sizes) counts.pairs_in += g * (g - 1) / 2;
  const int64_t n = static_cast<int64_t>(labels.size());
  counts.pairs_out = n * (n - 1) / 2 - counts.pairs_in;
  return counts;
}

// Tr(X^T M X) for a discrete labeling, from pair counts alone. Same-label
// pairs contribute inner product 1, different-label pairs -1/(r-1); each
// unordered pair appears twice in the trace.
double CountingTrace(const ModifiedAdjacency& m, const std::vector<int>& labels,
                     int r) {
  const PairCounts c = CountPairs(m.graph(), labels, r);
  const double cross = -1.0 / (r - 1);
  const double in_part =
      m.w_in() * (static_cast<double>(c.edges_in) +
                  cross * static_cast<double>(c.edges_out));
  const double out_part =
      m.w_out() * (static_cast<double>(c.pairs_in - c.edges_in) +
                   cross * static_cast<double>(c.pairs_out - c.edges_out));
  return 2.0 * (in_part + out_part);
}

}  // namespace

double LogLikelihoodScore(const ModifiedAdjacency& m,
                          const DiscreteLabeling& labels) {
  if (!labels.IsComplete())
    throw ParameterError("log-likelihood score needs a complete labeling");
  if (labels.n() != m.n())
    throw DimensionError("labeling size does not match graph");
  const int r = labels.r();
  const SimplexBasis basis = CanonicalSimplex(r, r - 1);
  Eigen::MatrixXd rows(labels.n(), basis.dim());
  for (int i = 0; i < labels.n(); ++i)
    rows.row(i) = basis.Vector(labels.LabelOf(i));
  const double factor = static_cast<double>(r - 1) / (2.0 * r);
  return factor * TraceScore(m, rows);
}

double LogLikelihoodScore(const ModifiedAdjacency& m,
                          const Eigen::MatrixXd& rows,
                          const SimplexBasis& basis) {
  if (rows.rows() != m.n())
    throw DimensionError("row count does not match graph");
  if (rows.cols() != basis.dim())
    throw DimensionError("row and basis dimensions disagree");
  constexpr double kRowTol = 1e-6;
  for (int i = 0; i < rows.rows(); ++i) {
    bool matched = false;
    for (int c = 0; c < basis.r() && !matched; ++c)
      matched = (rows.row(i) - basis.Vector(c)).norm() <= kRowTol;
    if (!matched)
      throw ParameterError("row " + std::to_string(i) +
                           " is not a simplex vector");
  }
  const double factor =
      static_cast<double>(basis.r() - 1) / (2.0 * basis.r());
  return factor * TraceScore(m, rows);
}

LabelDistribution ConditionalDistribution(const ModifiedAdjacency& m,
                                          int node,
                                          const Eigen::MatrixXd& rows,
                                          const SimplexBasis& basis) {
  if (rows.rows() != m.n())
    throw DimensionError("row count does not match graph");
  if (rows.cols() != basis.dim())
    throw DimensionError("row and basis dimensions disagree");
  if (node < 0 || node >= m.n()) throw DimensionError("node out of range");

  const Eigen::RowVectorXd row_product = m.RowProduct(node, rows);
  const double kappa = static_cast<double>(basis.r() - 1) / basis.r();
  Eigen::VectorXd logits(basis.r());
  for (int c = 0; c < basis.r(); ++c)
    logits[c] = kappa * row_product.dot(basis.Vector(c));

  const double peak = logits.maxCoeff();
  Eigen::VectorXd probs = (logits.array() - peak).exp();
  probs /= probs.sum();
  return LabelDistribution{std::move(probs)};
}

RatioCertificate ApproxRatioCertificate(const ModifiedAdjacency& m,
                                        const DiscreteLabeling& rounded,
                                        const VectorLabeling& relaxed,
                                        const SimplexBasis& basis) {
  if (rounded.n() != m.n() || relaxed.n() != m.n())
    throw DimensionError("labeling sizes do not match graph");
  if (!rounded.IsComplete())
    throw ParameterError("rounded labeling must be complete");
  for (int i = 0; i < relaxed.n(); ++i) {
    if (relaxed.IsPinned(i) && relaxed.pinned[i] != rounded.LabelOf(i))
      throw ParameterError("labeled sets of rounded and relaxed disagree");
  }

  const int r = rounded.r();
  Eigen::MatrixXd disc_rows(rounded.n(), basis.dim());
  for (int i = 0; i < rounded.n(); ++i)
    disc_rows.row(i) = basis.Vector(rounded.LabelOf(i));

  RatioCertificate out;
  out.disc_score = TraceScore(m, disc_rows);
  out.relax_score = TraceScore(m, relaxed.rows);
  const double factor = static_cast<double>(r - 1) / (2.0 * r);
  out.value = std::exp(factor * (out.disc_score - out.relax_score));
  return out;
}

DiscreteLabeling BruteForceMlLabeling(const ModifiedAdjacency& m,
                                      const DiscreteLabeling& pins) {
  if (pins.n() != m.n())
    throw DimensionError("labeling size does not match graph");
  CheckBruteForceSize(pins);

  const int r = pins.r();
  double best_score = -std::numeric_limits<double>::infinity();
  std::vector<int> best_labels;
  // Lexicographic enumeration + strict improvement keeps the smallest
  // maximizer.
  ForEachCompletion(pins, [&](const std::vector<int>& labels) {
    const double score = CountingTrace(m, labels, r);
    if (score > best_score) {
      best_score = score;
      best_labels = labels;
    }
  });
  return DiscreteLabeling::Full(best_labels, r);
}

LabelDistribution BruteForcePosterior(const Graph& graph, double p, double q,
                                      const DiscreteLabeling& pins,
                                      int node) {
  if (pins.n() != graph.n())
    throw DimensionError("labeling size does not match graph");
  if (node < 0 || node >= graph.n())
    throw DimensionError("node out of range");
  const int r = pins.r();
  if (pins.IsLabeled(node)) {
    Eigen::VectorXd probs = Eigen::VectorXd::Zero(r);
    probs[pins.LabelOf(node)] = 1.0;
    return LabelDistribution{std::move(probs)};
  }
  CheckBruteForceSize(pins);

  const double log_p = std::log(p);
  const double log_1p = std::log1p(-p);
  const double log_q = std::log(q);
  const double log_1q = std::log1p(-q);

  // Streaming log-sum-exp accumulator per label of `node`.
  std::vector<double> peak(static_cast<size_t>(r),
                           -std::numeric_limits<double>::infinity());
  std::vector<double> sum(static_cast<size_t>(r), 0.0);

  // count * log avoiding 0 * (-inf) when p or q sit at {0, 1}.
  auto term = [](int64_t count, double log_value) {
    return count == 0 ? 0.0 : static_cast<double>(count) * log_value;
  };

  ForEachCompletion(pins, [&](const std::vector<int>& labels) {
    const PairCounts c = CountPairs(graph, labels, r);
    const double log_prob = term(c.edges_in, log_p) +
                            term(c.pairs_in - c.edges_in, log_1p) +
                            term(c.edges_out, log_q) +
                            term(c.pairs_out - c.edges_out, log_1q);
    if (std::isinf(log_prob) && log_prob < 0) return;
    const int label = labels[node];
    if (log_prob > peak[label]) {
      sum[label] = sum[label] * std::exp(peak[label] - log_prob) + 1.0;
      peak[label] = log_prob;
    } else {
      sum[label] += std::exp(log_prob - peak[label]);
    }
  });

  Eigen::VectorXd log_mass(r);
  for (int c = 0; c < r; ++c)
    log_mass[c] = sum[c] > 0.0
                      ? peak[c] + std::log(sum[c])
                      : -std::numeric_limits<double>::infinity();
  const double top = log_mass.maxCoeff();
  Eigen::VectorXd probs = (log_mass.array() - top).exp();
  probs /= probs.sum();
  return LabelDistribution{std::move(probs)};
}

}  // namespace sbmal
