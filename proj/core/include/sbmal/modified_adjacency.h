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

#include <Eigen/Core>

#include "sbmal/graph.h"

namespace sbmal {

// Log-likelihood-ratio reweighting of the adjacency matrix.
//
// Entry (i,j) is w_in = log(p/q) on edges, w_out = log((1-p)/(1-q)) on
// non-edges with i != j, and 0 on the diagonal. The matrix is never
// materialized: products use the sparse edge structure plus the constant
// off-edge value, in O(|E| + n) per column.
class ModifiedAdjacency {
 public:
  // Probabilities are clamped into [1e-6, 1 - 1e-6] before the logs, so
  // degenerate inputs (p or q in {0,1}) stay finite. Disassortative inputs
  // (p <= q) are allowed; a warning is printed to stderr.
  ModifiedAdjacency(Graph graph, double p, double q);

  const Graph& graph() const { return graph_; }
  int n() const { return graph_.n(); }
  double w_in() const { return w_in_; }
  double w_out() const { return w_out_; }
  double p() const { return p_; }
  double q() const { return q_; }

  // Entry M(i, j); intended for tests and small-instance oracles.
  double Entry(int i, int j) const;

  // Implicit matrix-vector product M v.
  Eigen::VectorXd Multiply(const Eigen::VectorXd& v) const;

  // Implicit product M X for a row-per-node matrix X (n x d), computed as
  // (w_in - w_out) * (A X) + w_out * (1 colsum(X) - X). O(d(|E| + n)).
  Eigen::MatrixXd Multiply(const Eigen::MatrixXd& x) const;

  // Row product M_i X: the i-th row of Multiply(x), in O(deg(i) * d + d).
  Eigen::RowVectorXd RowProduct(int i, const Eigen::MatrixXd& x) const;

 private:
  Graph graph_;
  double p_, q_;
  double w_in_, w_out_;
};

}  // namespace sbmal
