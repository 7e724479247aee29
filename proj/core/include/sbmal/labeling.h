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

#include <vector>

#include "sbmal/errors.h"

namespace sbmal {

// A (possibly partial) assignment of nodes to community labels.
//
// Every node is either labeled with an index in [0, r) or unlabeled. The
// labeled set plays the role of the supervised nodes; the unlabeled set is
// what the algorithms infer.
class DiscreteLabeling {
 public:
  DiscreteLabeling(int n, int r)
      : r_(r), labels_(static_cast<size_t>(n), kUnlabeled) {
    if (n < 0) throw ParameterError("node count must be nonnegative");
    if (r < 2) throw ParameterError("label count must be at least 2");
  }

  // Complete labeling from a full label vector.
  static DiscreteLabeling Full(const std::vector<int>& labels, int r) {
    DiscreteLabeling out(static_cast<int>(labels.size()), r);
    for (int i = 0; i < out.n(); ++i) out.Assign(i, labels[i]);
    return out;
  }

  int n() const { return static_cast<int>(labels_.size()); }
  int r() const { return r_; }

  void Assign(int node, int label) {
    CheckNode(node);
    if (label < 0 || label >= r_) throw ParameterError("label out of range");
    labels_[node] = label;
  }

  bool IsLabeled(int node) const {
    CheckNode(node);
    return labels_[node] != kUnlabeled;
  }

  // Label of a node; kUnlabeled (-1) if unsupervised.
  int LabelOf(int node) const {
    CheckNode(node);
    return labels_[node];
  }

  const std::vector<int>& labels() const { return labels_; }

  std::vector<int> LabeledNodes() const {
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
      if (labels_[i] != kUnlabeled) out.push_back(i);
    return out;
  }

  std::vector<int> UnlabeledNodes() const {
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
      if (labels_[i] == kUnlabeled) out.push_back(i);
    return out;
  }

  int LabeledCount() const {
    int count = 0;
    for (int label : labels_)
      if (label != kUnlabeled) ++count;
    return count;
  }

  bool IsComplete() const { return LabeledCount() == n(); }

  // Distinct labels currently assigned, ascending.
  std::vector<int> UniqueLabels() const {
    std::vector<bool> seen(static_cast<size_t>(r_), false);
    for (int label : labels_)
      if (label != kUnlabeled) seen[label] = true;
    std::vector<int> out;
    for (int c = 0; c < r_; ++c)
      if (seen[c]) out.push_back(c);
    return out;
  }

  bool CoversAllLabels() const {
    return static_cast<int>(UniqueLabels().size()) == r_;
  }

  static constexpr int kUnlabeled = -1;

 private:
  void CheckNode(int node) const {
    if (node < 0 || node >= n()) throw ParameterError("node out of range");
  }

  int r_;
  std::vector<int> labels_;
};

// The planted (or annotated) truth for every node. Acts as the label oracle
// that active learning queries.
struct GroundTruth {
  std::vector<int> labels;
  int r = 0;

  int LabelOf(int node) const { return labels.at(node); }
  int n() const { return static_cast<int>(labels.size()); }

  DiscreteLabeling AsLabeling() const {
    return DiscreteLabeling::Full(labels, r);
  }
};

}  // namespace sbmal
