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
#include <vector>

#include <Eigen/Core>

#include "sbmal/labeling.h"
#include "sbmal/vector_labeling.h"

namespace sbmal {

// The discrete label alphabet: r unit vectors whose pairwise inner product
// is -1/(r-1), i.e. the vertices of a regular (r-1)-simplex embedded in
// dimension dim >= r-1.
class SimplexBasis {
 public:
  // Validates the simplex invariants (unit norms and pairwise inner
  // products, both to 1e-9) and throws ParameterError on violation.
  SimplexBasis(Eigen::MatrixXd vectors);

  int r() const { return static_cast<int>(vectors_.rows()); }
  int dim() const { return static_cast<int>(vectors_.cols()); }
  const Eigen::MatrixXd& vectors() const { return vectors_; }
  Eigen::RowVectorXd Vector(int label) const { return vectors_.row(label); }

  // Same simplex zero-padded to a larger ambient dimension.
  SimplexBasis EmbedIn(int dim) const;

  // Vertices reordered: out.Vector(i) == Vector(perm[i]).
  SimplexBasis Permuted(const std::vector<int>& perm) const;

 private:
  Eigen::MatrixXd vectors_;
};

// The canonical regular simplex in the first r-1 coordinates, zero-padded
// to dim. Throws DimensionError when dim < r-1.
SimplexBasis CanonicalSimplex(int r, int dim);

// Snaps each free row to the basis vector of maximal inner product; pinned
// rows keep their labels. Ties go to the lowest label index.
DiscreteLabeling RoundLabeling(const VectorLabeling& x,
                               const SimplexBasis& basis);

// Best-fit simplex for a cloud of unit vectors: spherical k-means (k-means++
// seeding, renormalized centroids, `restarts` restarts) followed by an
// orthogonal alignment of the canonical simplex onto the centroids. The
// alignment maximizes sum_i <simplex_i, centroid_i> over all rotated
// regular simplices; the closed form is R = W U^T from the SVD
// U S W^T = centroids^T * canonical.
struct SimplexFit {
  SimplexBasis basis;        // aligned simplex, vertex i paired with centroid i
  Eigen::MatrixXd centroids; // r x d unit rows from k-means
  double alignment = 0.0;    // sum_i <basis[i], centroids[i]>
};

SimplexFit FitSimplex(const Eigen::MatrixXd& rows, int r,
                      uint64_t seed = 0x5331u, int restarts = 20);

// Convenience wrapper returning only the basis. Throws ParameterError when
// rows has fewer than r rows.
SimplexBasis BestFitSimplex(const Eigen::MatrixXd& rows, int r,
                            uint64_t seed = 0x5331u, int restarts = 20);

// Reorders a fitted basis so vertex index agrees with label identity: each
// label already present in `labels` maps to the fitted vertex closest (max
// inner product, exact assignment) to that label's vector in `reference`;
// absent labels take the remaining vertices in order. Keeps rounding
// consistent with the supervised labels when the simplex came from a fit.
SimplexBasis MatchBasisToLabels(const SimplexBasis& fitted,
                                const DiscreteLabeling& labels,
                                const SimplexBasis& reference);

}  // namespace sbmal
