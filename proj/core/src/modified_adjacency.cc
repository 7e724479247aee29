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

#include "sbmal/modified_adjacency.h"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <utility>

#include "sbmal/errors.h"

namespace sbmal {

namespace {
constexpr double kProbEps = 1e-6;

double ClampProb(double x) {
  return std::min(std::max(x, kProbEps), 1.0 - kProbEps);
}
}  // namespace

ModifiedAdjacency::ModifiedAdjacency(Graph graph, double p, double q)
    : graph_(std::move(graph)), p_(ClampProb(p)), q_(ClampProb(q)) {
  if (p_ <= q_) {
    std::cerr << "sbmal: warning: p <= q (disassortative weights, w_in <= 0)"
              << std::endl;
  }
  w_in_ = std::log(p_ / q_);
  w_out_ = std::log((1.0 - p_) / (1.0 - q_));
}

double ModifiedAdjacency::Entry(int i, int j) const {
  if (i < 0 || i >= n() || j < 0 || j >= n())
    throw DimensionError("index out of range");
  if (i == j) return 0.0;
  return graph_.HasEdge(i, j) ? w_in_ : w_out_;
}

Eigen::VectorXd ModifiedAdjacency::Multiply(const Eigen::VectorXd& v) const {
  if (v.size() != n()) throw DimensionError("vector length does not match n");
  Eigen::VectorXd av = Eigen::VectorXd::Zero(n());
  for (auto [u, w] : graph_.edges()) {
    av[u] += v[w];
    av[w] += v[u];
  }
  const double total = v.sum();
  return (w_in_ - w_out_) * av +
         w_out_ * (Eigen::VectorXd::Constant(n(), total) - v);
}

Eigen::MatrixXd ModifiedAdjacency::Multiply(const Eigen::MatrixXd& x) const {
  if (x.rows() != n()) throw DimensionError("row count does not match n");
  Eigen::MatrixXd ax = Eigen::MatrixXd::Zero(x.rows(), x.cols());
  for (auto [u, w] : graph_.edges()) {
    ax.row(u) += x.row(w);
    ax.row(w) += x.row(u);
  }
  const Eigen::RowVectorXd colsum = x.colwise().sum();
  Eigen::MatrixXd out = (w_in_ - w_out_) * ax;
  out.rowwise() += w_out_ * colsum;
  out -= w_out_ * x;
  return out;
}

Eigen::RowVectorXd ModifiedAdjacency::RowProduct(
    int i, const Eigen::MatrixXd& x) const {
  if (x.rows() != n()) throw DimensionError("row count does not match n");
  if (i < 0 || i >= n()) throw DimensionError("node out of range");
  Eigen::RowVectorXd nbr_sum = Eigen::RowVectorXd::Zero(x.cols());
  for (int j : graph_.Neighbors(i)) nbr_sum += x.row(j);
  return (w_in_ - w_out_) * nbr_sum +
         w_out_ * (x.colwise().sum() - x.row(i));
}

}  // namespace sbmal
