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

#include "sbmal/active_learning.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "sbmal/rng.h"

namespace sbmal {

namespace {

Eigen::VectorXd Softmax(const Eigen::VectorXd& logits) {
  const double peak = logits.maxCoeff();
  Eigen::VectorXd probs = (logits.array() - peak).exp();
  probs /= probs.sum();
  return probs;
}

Eigen::MatrixXd EmbedLabels(const DiscreteLabeling& labels,
                            const SimplexBasis& basis) {
  Eigen::MatrixXd rows(labels.n(), basis.dim());
  for (int i = 0; i < labels.n(); ++i)
    rows.row(i) = basis.Vector(labels.LabelOf(i));
  return rows;
}

// Logit matrix (r-1)/r * (M rows) basis^T shared by the model matrix and
// both selection rules.
Eigen::MatrixXd BuildLogits(const ModifiedAdjacency& m,
                            const Eigen::MatrixXd& rows,
                            const SimplexBasis& basis) {
  if (rows.rows() != m.n())
    throw DimensionError("row count does not match graph");
  if (rows.cols() != basis.dim())
    throw DimensionError("row and basis dimensions disagree");
  const double kappa = static_cast<double>(basis.r() - 1) / basis.r();
  return kappa * (m.Multiply(rows) * basis.vectors().transpose());
}

ModelMatrix ModelFromLogits(const DiscreteLabeling& labels,
                            const Eigen::MatrixXd& logits, int r) {
  ModelMatrix model;
  model.probs.resize(logits.rows(), r);
  for (int i = 0; i < logits.rows(); ++i) {
    if (labels.IsLabeled(i)) {
      model.probs.row(i).setZero();
      model.probs(i, labels.LabelOf(i)) = 1.0;
    } else {
      model.probs.row(i) = Softmax(logits.row(i).transpose()).transpose();
    }
  }
  return model;
}

SemiSupervisedResult SemiSupervisedStep(
    const ModifiedAdjacency& m, const DiscreteLabeling& labeled,
    const ActiveConfig& cfg, const std::optional<VectorLabeling>& warm) {
  SolverConfig solver_cfg = cfg.solver;
  if (warm) {
    // Consecutive solves reuse the previous output instead of fresh
    // random restarts.
    solver_cfg.warm_start = warm;
    solver_cfg.restarts = 1;
    solver_cfg.rank = warm->d();
  }
  const SimplexBasis canonical = CanonicalSimplex(labeled.r(), labeled.r() - 1);

  SemiSupervisedResult out{
      DiscreteLabeling(labeled.n(), labeled.r()),
      SolveSdp(m, labeled, canonical, solver_cfg),
      canonical,  // placeholder, replaced below
      false};

  const SimplexBasis embedded = canonical.EmbedIn(out.solve.labeling.d());
  if (labeled.CoversAllLabels()) {
    out.basis = embedded;
  } else {
    const SimplexBasis fitted =
        BestFitSimplex(out.solve.labeling.rows, labeled.r(), cfg.best_fit_seed,
                       cfg.best_fit_restarts);
    out.basis = MatchBasisToLabels(fitted, labeled, embedded);
    out.used_best_fit = true;
  }
  out.labels = RoundLabeling(out.solve.labeling, out.basis);
  return out;
}

}  // namespace

const char* SelectionRuleName(SelectionRule rule) {
  switch (rule) {
    case SelectionRule::kAnchor:
      return "anchor";
    case SelectionRule::kMemc:
      return "memc";
    case SelectionRule::kRandom:
      return "random";
  }
  return "unknown";
}

SemiSupervisedResult SemiSupervised(const ModifiedAdjacency& m,
                                    const DiscreteLabeling& labeled,
                                    const ActiveConfig& cfg) {
  if (labeled.n() != m.n())
    throw DimensionError("labeling size does not match graph");
  return SemiSupervisedStep(m, labeled, cfg, std::nullopt);
}

ModelMatrix ComputeModel(const ModifiedAdjacency& m,
                         const DiscreteLabeling& labels,
                         const Eigen::MatrixXd& rows,
                         const SimplexBasis& basis) {
  if (labels.n() != m.n())
    throw DimensionError("labeling size does not match graph");
  if (labels.r() != basis.r())
    throw DimensionError("labeling and basis community counts disagree");
  return ModelFromLogits(labels, BuildLogits(m, rows, basis), basis.r());
}

std::vector<Selection> MemcScores(const ModifiedAdjacency& m,
                                  const VectorLabeling& relaxed,
                                  const DiscreteLabeling& labels,
                                  const SimplexBasis& basis, MemcMode mode,
                                  const ActiveConfig& cfg) {
  relaxed.CheckConsistent();
  if (labels.n() != m.n() || relaxed.n() != m.n())
    throw DimensionError("labeling sizes do not match graph");
  if (!labels.CoversAllLabels())
    throw StateError("expected-model-change needs every community labeled");
  const std::vector<int> candidates = labels.UnlabeledNodes();
  if (candidates.empty())
    throw StateError("no unlabeled nodes left to query");

  const int r = basis.r();
  const Eigen::MatrixXd& rows = relaxed.rows;
  const Eigen::MatrixXd logits = BuildLogits(m, rows, basis);
  const ModelMatrix before = ModelFromLogits(labels, logits, r);
  const double kappa = static_cast<double>(r - 1) / r;

  std::vector<Selection> scores;
  scores.reserve(candidates.size());

  if (mode == MemcMode::kRankOne) {
    std::vector<char> is_neighbor(static_cast<size_t>(m.n()), 0);
    for (int q : candidates) {
      for (int j : m.graph().Neighbors(q)) is_neighbor[j] = 1;

      double expected = 0.0;
      for (int c = 0; c < r; ++c) {
        // Overwriting row q with vertex c shifts every other row product
        // by M_iq * (vertex_c - row_q); only the logits move, the cached
        // matrix product is corrected in O(r d) per hypothesis.
        const Eigen::RowVectorXd diff = basis.Vector(c) - rows.row(q);
        const Eigen::VectorXd shift =
            kappa * (basis.vectors() * diff.transpose());

        double change = 0.0;
        for (int i : candidates) {
          if (i == q) continue;
          const double weight = is_neighbor[i] ? m.w_in() : m.w_out();
          const Eigen::VectorXd after =
              Softmax(logits.row(i).transpose() + weight * shift);
          change += (after - before.probs.row(i).transpose()).lpNorm<1>();
        }
        // Row q itself becomes a delta on the hypothesized label.
        change += 2.0 * (1.0 - before.probs(q, c));
        expected += before.probs(q, c) * change;
      }
      scores.push_back({q, expected});

      for (int j : m.graph().Neighbors(q)) is_neighbor[j] = 0;
    }
    return scores;
  }

  // Exact mode: re-solve the pinned SDP per hypothesis, warm-started from
  // the current relaxed solution. Oracle-scale only.
  for (int q : candidates) {
    double expected = 0.0;
    for (int c = 0; c < r; ++c) {
      DiscreteLabeling hypothesis = labels;
      hypothesis.Assign(q, c);
      SolverConfig solver_cfg = cfg.solver;
      solver_cfg.warm_start = relaxed;
      solver_cfg.restarts = 1;
      solver_cfg.rank = relaxed.d();
      const SolveResult res = SolveSdp(m, hypothesis, basis, solver_cfg);
      const ModelMatrix after =
          ComputeModel(m, hypothesis, res.labeling.rows, basis);
      const double change =
          (after.probs - before.probs).cwiseAbs().sum();
      expected += before.probs(q, c) * change;
    }
    scores.push_back({q, expected});
  }
  return scores;
}

Selection MemcSelect(const ModifiedAdjacency& m, const VectorLabeling& relaxed,
                     const DiscreteLabeling& labels, const SimplexBasis& basis,
                     MemcMode mode, const ActiveConfig& cfg) {
  const std::vector<Selection> scores =
      MemcScores(m, relaxed, labels, basis, mode, cfg);
  Selection best = scores.front();
  for (const Selection& s : scores)
    if (s.score > best.score) best = s;  // ties keep the lowest node index
  return best;
}

Selection AnchorSelect(const ModifiedAdjacency& m,
                       const VectorLabeling& relaxed,
                       const DiscreteLabeling& labels,
                       const SimplexBasis& basis) {
  relaxed.CheckConsistent();
  if (labels.n() != m.n() || relaxed.n() != m.n())
    throw DimensionError("labeling sizes do not match graph");
  if (labels.CoversAllLabels())
    throw StateError("anchor selection requires an unseen community");

  std::vector<bool> seen(static_cast<size_t>(labels.r()), false);
  for (int c : labels.UniqueLabels()) seen[c] = true;

  const Eigen::MatrixXd logits = BuildLogits(m, relaxed.rows, basis);
  Selection best;
  double best_score = -std::numeric_limits<double>::infinity();
  for (int q : labels.UnlabeledNodes()) {
    const Eigen::VectorXd probs = Softmax(logits.row(q).transpose());
    double score = 0.0;
    for (int c = 0; c < labels.r(); ++c)
      if (!seen[c]) score = std::max(score, probs[c]);
    if (score > best_score) {
      best_score = score;
      best = {q, score};
    }
  }
  return best;
}

ActiveRunResult ActiveLoop(const Graph& graph, double p, double q,
                           const GroundTruth& truth, int budget,
                           const ActiveConfig& cfg) {
  const int n = graph.n();
  if (budget < 0 || budget > n)
    throw ParameterError("query budget must lie in [0, n]");
  if (truth.n() != n) throw DimensionError("truth size does not match graph");

  const ModifiedAdjacency m(graph, p, q);
  DiscreteLabeling labels(n, truth.r);
  std::set<int> queried;
  std::optional<VectorLabeling> warm;

  ActiveRunResult out{DiscreteLabeling(n, truth.r), {}, {}};
  for (int step = 0; step <= budget; ++step) {
    const SemiSupervisedResult ssr =
        SemiSupervisedStep(m, labels, cfg, warm);
    out.step_accuracy.push_back(Accuracy(ssr.labels, truth, queried));
    if (step == budget) {
      out.labels = ssr.labels;
      break;
    }

    VectorLabeling conditioning = ssr.solve.labeling;
    if (cfg.discrete_expectation)
      conditioning.rows = EmbedLabels(ssr.labels, ssr.basis);

    Selection sel;
    SelectionRule rule;
    if (!labels.CoversAllLabels()) {
      sel = AnchorSelect(m, conditioning, labels, ssr.basis);
      rule = SelectionRule::kAnchor;
    } else {
      sel = MemcSelect(m, conditioning, labels, ssr.basis, cfg.memc_mode, cfg);
      rule = SelectionRule::kMemc;
    }

    const int revealed = truth.LabelOf(sel.node);
    labels.Assign(sel.node, revealed);
    queried.insert(sel.node);
    out.log.push_back({step + 1, sel.node, revealed, rule, sel.score});
    warm = ssr.solve.labeling;
  }
  return out;
}

ActiveRunResult RandomBaselineLoop(const Graph& graph, double p, double q,
                                   const GroundTruth& truth, int budget,
                                   uint64_t seed, const ActiveConfig& cfg) {
  const int n = graph.n();
  if (budget < 0 || budget > n)
    throw ParameterError("query budget must lie in [0, n]");
  if (truth.n() != n) throw DimensionError("truth size does not match graph");

  const ModifiedAdjacency m(graph, p, q);
  DiscreteLabeling labels(n, truth.r);
  ActiveRunResult out{DiscreteLabeling(n, truth.r), {}, {}};

  const std::vector<int> order = Rng(seed).Permutation(n);
  std::set<int> queried;
  for (int t = 0; t < budget; ++t) {
    const int node = order[t];
    const int revealed = truth.LabelOf(node);
    labels.Assign(node, revealed);
    queried.insert(node);
    out.log.push_back({t + 1, node, revealed, SelectionRule::kRandom, 0.0});
  }

  const SemiSupervisedResult ssr = SemiSupervised(m, labels, cfg);
  out.labels = ssr.labels;
  out.step_accuracy.push_back(Accuracy(ssr.labels, truth, queried));
  return out;
}

double Accuracy(const DiscreteLabeling& pred, const GroundTruth& truth,
                const std::set<int>& queried) {
  if (pred.n() != truth.n())
    throw DimensionError("prediction size does not match truth");
  if (pred.r() != truth.r) throw ParameterError("community counts disagree");

  std::vector<int> eval_nodes;
  for (int i = 0; i < pred.n(); ++i)
    if (!queried.count(i)) eval_nodes.push_back(i);
  if (eval_nodes.empty()) return 1.0;

  if (!queried.empty()) {
    int hits = 0;
    for (int i : eval_nodes)
      if (pred.LabelOf(i) == truth.LabelOf(i)) ++hits;
    return static_cast<double>(hits) / eval_nodes.size();
  }

  // Nothing anchors label identity without queries: score the best match
  // over all label permutations.
  const int r = pred.r();
  Eigen::MatrixXi confusion = Eigen::MatrixXi::Zero(r, r);
  for (int i : eval_nodes)
    confusion(pred.LabelOf(i), truth.LabelOf(i)) += 1;

  std::vector<int> sigma(static_cast<size_t>(r));
  for (int c = 0; c < r; ++c) sigma[c] = c;
  int best = 0;
  do {
    int hits = 0;
    for (int c = 0; c < r; ++c) hits += confusion(c, sigma[c]);
    best = std::max(best, hits);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return static_cast<double>(best) / eval_nodes.size();
}

}  // namespace sbmal
