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

#include "sbmal/sdp_solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "sbmal/rng.h"

namespace sbmal {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-20;

int AutoRank(int n, int r) {
  const int barvinok = static_cast<int>(std::ceil(std::sqrt(2.0 * n)));
  return std::max(r + 1, barvinok);
}

double AutoStep(const ModifiedAdjacency& m) {
  // One over twice the largest absolute row sum, a cheap bound on the
  // gradient Lipschitz constant 2*||M||_2.
  const int n = m.n();
  double max_row = 0.0;
  for (int i = 0; i < n; ++i) {
    const double row = std::abs(m.w_in()) * m.graph().Degree(i) +
                       std::abs(m.w_out()) * (n - 1 - m.graph().Degree(i));
    max_row = std::max(max_row, row);
  }
  return max_row > 0.0 ? 1.0 / (2.0 * max_row) : 1.0;
}

struct AscentOutcome {
  Eigen::MatrixXd rows;
  double objective = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  std::vector<double> history;
};

// Single gradient-ascent run from the given feasible initialization.
// free_nodes lists the rows that move; the rest stay bit-identical.
AscentOutcome RunAscent(const ModifiedAdjacency& m, Eigen::MatrixXd rows,
                        const std::vector<int>& free_nodes,
                        const SolverConfig& cfg, double grad_tol,
                        double initial_step) {
  AscentOutcome out;
  Eigen::MatrixXd product = m.Multiply(rows);
  double objective = rows.cwiseProduct(product).sum();
  if (cfg.record_history) out.history.push_back(objective);

  double step = initial_step;
  double grad_norm = 0.0;
  int iter = 0;
  Eigen::MatrixXd gradient(rows.rows(), rows.cols());
  for (; iter < cfg.max_iters; ++iter) {
    // Riemannian gradient: tangent projection of 2 M X, free rows only.
    gradient.setZero();
    double sq_norm = 0.0;
    for (int i : free_nodes) {
      const double radial = product.row(i).dot(rows.row(i));
      gradient.row(i) = 2.0 * (product.row(i) - radial * rows.row(i));
      sq_norm += gradient.row(i).squaredNorm();
    }
    grad_norm = std::sqrt(sq_norm);
    if (grad_norm <= grad_tol) break;

    // Backtracking line search with row-renormalization retraction.
    bool accepted = false;
    while (step >= kMinStep) {
      Eigen::MatrixXd trial = rows;
      for (int i : free_nodes) {
        trial.row(i) += step * gradient.row(i);
        trial.row(i) /= trial.row(i).norm();
      }
      Eigen::MatrixXd trial_product = m.Multiply(trial);
      const double trial_objective =
          trial.cwiseProduct(trial_product).sum();
      if (trial_objective >= objective + kArmijo * step * sq_norm) {
        rows.swap(trial);
        product.swap(trial_product);
        objective = trial_objective;
        accepted = true;
        break;
      }
      step *= cfg.backtrack;
    }
    if (!accepted) break;  // no ascent direction at floating-point scale
    if (cfg.record_history) out.history.push_back(objective);
    step = std::min(step * 2.0, 1e8);
  }

  out.rows = std::move(rows);
  out.objective = objective;
  out.grad_norm = grad_norm;
  out.iterations = iter;
  return out;
}

}  // namespace

double TraceScore(const ModifiedAdjacency& m, const Eigen::MatrixXd& rows) {
  if (rows.rows() != m.n())
    throw DimensionError("row count does not match graph");
  return rows.cwiseProduct(m.Multiply(rows)).sum();
}

double TraceScore(const ModifiedAdjacency& m, const VectorLabeling& x) {
  return TraceScore(m, x.rows);
}

SolveResult SolveSdp(const ModifiedAdjacency& m, const DiscreteLabeling& pins,
                     const SimplexBasis& basis, const SolverConfig& cfg) {
  const int n = m.n();
  if (pins.n() != n) throw DimensionError("pin labeling does not match graph");
  if (basis.r() != pins.r())
    throw DimensionError("basis and labeling community counts disagree");
  if (cfg.restarts < 1) throw ParameterError("restarts must be at least 1");

  const int rank = cfg.rank > 0 ? cfg.rank : AutoRank(n, basis.r());
  if (rank < basis.r()) throw ParameterError("rank must be at least r");
  const SimplexBasis embedded = basis.EmbedIn(rank);
  const double grad_tol = cfg.grad_tol > 0.0 ? cfg.grad_tol : 1e-6 * n;
  const double initial_step =
      cfg.initial_step > 0.0 ? cfg.initial_step : AutoStep(m);

  std::vector<int> free_nodes = pins.UnlabeledNodes();

  if (cfg.warm_start) {
    cfg.warm_start->CheckConsistent();
    if (cfg.warm_start->n() != n)
      throw DimensionError("warm start row count does not match graph");
    if (cfg.warm_start->d() > rank)
      throw DimensionError("warm start rank exceeds solver rank");
  }

  // Pinned rows are copied from the embedded basis once and never touched
  // by the ascent, so they survive bit-for-bit.
  Eigen::MatrixXd pinned_rows = Eigen::MatrixXd::Zero(n, rank);
  for (int i = 0; i < n; ++i)
    if (pins.IsLabeled(i)) pinned_rows.row(i) = embedded.Vector(pins.LabelOf(i));

  Rng base(cfg.seed);
  SolveResult best;
  double best_objective = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < cfg.restarts; ++t) {
    Eigen::MatrixXd init = pinned_rows;
    Rng rng = base.Fork(static_cast<uint64_t>(t));
    if (t == 0 && cfg.warm_start) {
      for (int i : free_nodes) {
        init.row(i).setZero();
        init.row(i).head(cfg.warm_start->d()) = cfg.warm_start->rows.row(i);
        for (int c = 0; c < rank; ++c)
          init(i, c) += cfg.warm_dither * rng.NextGaussian();
        const double norm = init.row(i).norm();
        if (norm > 0.0)
          init.row(i) /= norm;
        else
          init.row(i) = Eigen::RowVectorXd::Unit(rank, 0);
      }
    } else {
      for (int i : free_nodes) {
        for (int c = 0; c < rank; ++c) init(i, c) = rng.NextGaussian();
        init.row(i) /= init.row(i).norm();
      }
    }

    AscentOutcome outcome =
        RunAscent(m, std::move(init), free_nodes, cfg, grad_tol, initial_step);
    if (outcome.objective > best_objective) {
      best_objective = outcome.objective;
      best.labeling.rows = std::move(outcome.rows);
      best.labeling.pinned = pins.labels();
      best.grad_norm = outcome.grad_norm;
      best.iterations = outcome.iterations;
      best.restart_index = t;
      best.objective_history = std::move(outcome.history);
    }
  }
  best.objective = TraceScore(m, best.labeling.rows);

  // Polish: the canonical rounding of the iterate is itself feasible for
  // the relaxation. When the optimum is integral the ascent stops a hair
  // below it; snapping recovers the exact value.
  const DiscreteLabeling rounded = RoundLabeling(best.labeling, embedded);
  Eigen::MatrixXd snapped(n, rank);
  for (int i = 0; i < n; ++i)
    snapped.row(i) = embedded.Vector(rounded.LabelOf(i));
  const double snapped_objective = TraceScore(m, snapped);
  if (snapped_objective > best.objective) {
    best.labeling.rows = std::move(snapped);
    best.objective = snapped_objective;
    if (cfg.record_history)
      best.objective_history.push_back(snapped_objective);
  }
  return best;
}

VectorLabeling ExtractSolution(const SolveResult& result,
                               const std::optional<SimplexBasis>& basis) {
  if (basis && basis->dim() != result.labeling.d())
    throw DimensionError("basis dimension does not match solution");
  return result.labeling;
}

}  // namespace sbmal
