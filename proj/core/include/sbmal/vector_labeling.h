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

#include <Eigen/Core>

#include "sbmal/errors.h"

namespace sbmal {

// Relaxed labeling: one unit vector per node in ambient dimension d.
//
// Rows of supervised nodes are pinned to simplex vectors and are never
// updated by the solver; pinned[i] holds the label index, or -1 for free
// rows. The Gram matrix of the rows is the SDP variable, held implicitly.
struct VectorLabeling {
  Eigen::MatrixXd rows;     // n x d, each row unit norm
  std::vector<int> pinned;  // label index per node, -1 when free

  int n() const { return static_cast<int>(rows.rows()); }
  int d() const { return static_cast<int>(rows.cols()); }

  bool IsPinned(int node) const { return pinned.at(node) != -1; }

  int PinnedCount() const {
    int count = 0;
    for (int label : pinned)
      if (label != -1) ++count;
    return count;
  }

  void CheckConsistent() const {
    if (static_cast<int>(pinned.size()) != n())
      throw DimensionError("pinned mask size does not match rows");
  }
};

}  // namespace sbmal
