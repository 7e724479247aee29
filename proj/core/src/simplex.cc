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

#include "sbmal/simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include <Eigen/SVD>

#include "sbmal/rng.h"

namespace sbmal {

namespace {
constexpr double kSimplexTol = 1e-9;
}

SimplexBasis::SimplexBasis(Eigen::MatrixXd vectors)
    : vectors_(std::move(vectors)) {
  const int r = static_cast<int>(vectors_.rows());
  if (r < 2) throw ParameterError("simplex needs at least 2 vertices");
  if (vectors_.cols() < r - 1)
    throw DimensionError("ambient dimension below r-1");
  const double target = -1.0 / (r - 1);
  for (int i = 0; i < r; ++i) {
    if (std::abs(vectors_.row(i).norm() - 1.0) > kSimplexTol)
      throw ParameterError("simplex vertex is not unit norm");
    for (int j = i + 1; j < r; ++j) {
      if (std::abs(vectors_.row(i).dot(vectors_.row(j)) - target) >
          kSimplexTol)
        throw ParameterError("simplex pairwise inner product violated");
    }
  }
}

SimplexBasis SimplexBasis::EmbedIn(int dim) const {
  if (dim < this->dim()) throw DimensionError("cannot shrink ambient dimension");
  if (dim == this->dim()) return *this;
  Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(r(), dim);
  padded.leftCols(this->dim()) = vectors_;
  return SimplexBasis(std::move(padded));
}

SimplexBasis SimplexBasis::Permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != r())
    throw DimensionError("permutation size does not match r");
  Eigen::MatrixXd out(r(), dim());
  for (int i = 0; i < r(); ++i) out.row(i) = vectors_.row(perm.at(i));
  return SimplexBasis(std::move(out));
}

SimplexBasis CanonicalSimplex(int r, int dim) {
  if (r < 2) throw ParameterError("r must be at least 2");
  if (dim < r - 1) throw DimensionError("dim must be at least r-1");
  const double target = -1.0 / (r - 1);

  // Rows of the (rank r-1) Cholesky-style factor of the simplex Gram
  // matrix: vertex i gets coordinates in the first min(i+1, r-1) axes.
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(r, dim);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < std::min(i, r - 1); ++j) {
      double dot = 0.0;
      for (int t = 0; t < j; ++t) dot += v(i, t) * v(j, t);
      v(i, j) = (target - dot) / v(j, j);
    }
    if (i < r - 1) {
      double sq = 1.0;
      for (int t = 0; t < i; ++t) sq -= v(i, t) * v(i, t);
      v(i, i) = std::sqrt(std::max(sq, 0.0));
    }
  }
  return SimplexBasis(std::move(v));
}

DiscreteLabeling RoundLabeling(const VectorLabeling& x,
                               const SimplexBasis& basis) {
  x.CheckConsistent();
  if (x.d() != basis.dim())
    throw DimensionError("labeling and basis dimensions disagree");
  DiscreteLabeling out(x.n(), basis.r());
  for (int i = 0; i < x.n(); ++i) {
    if (x.IsPinned(i)) {
      out.Assign(i, x.pinned[i]);
      continue;
    }
    int best = 0;
    double best_dot = x.rows.row(i).dot(basis.Vector(0));
    for (int c = 1; c < basis.r(); ++c) {
      const double dot = x.rows.row(i).dot(basis.Vector(c));
      if (dot > best_dot) {
        best = c;
        best_dot = dot;
      }
    }
    out.Assign(i, best);
  }
  return out;
}

namespace {

struct KMeansRun {
  Eigen::MatrixXd centroids;  // r x d unit rows
  double objective = -std::numeric_limits<double>::infinity();
};

// Assignment by maximal inner product; ties to the lowest centroid index.
int Nearest(const Eigen::MatrixXd& centroids, const Eigen::RowVectorXd& x) {
  int best = 0;
  double best_dot = centroids.row(0).dot(x);
  for (int c = 1; c < centroids.rows(); ++c) {
    const double dot = centroids.row(c).dot(x);
    if (dot > best_dot) {
      best = c;
      best_dot = dot;
    }
  }
  return best;
}

// k-means++ seeding with the chordal distance 2 - 2<x, mu>.
Eigen::MatrixXd SeedCentroids(const Eigen::MatrixXd& rows, int r, Rng& rng) {
  const int n = static_cast<int>(rows.rows());
  Eigen::MatrixXd centroids(r, rows.cols());
  centroids.row(0) = rows.row(static_cast<int>(rng.NextInt(n)));
  Eigen::VectorXd dist2(n);
  for (int c = 1; c < r; ++c) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (int k = 0; k < c; ++k) {
        const double d2 = 2.0 - 2.0 * centroids.row(k).dot(rows.row(i));
        best = std::min(best, d2);
      }
      dist2[i] = std::max(best, 0.0);
      total += dist2[i];
    }
    if (total <= 0.0) {
      // All points coincide with chosen centroids; fall back to uniform.
      centroids.row(c) = rows.row(static_cast<int>(rng.NextInt(n)));
      continue;
    }
    const double pick = rng.NextDouble() * total;
    double acc = 0.0;
    int chosen = n - 1;
    for (int i = 0; i < n; ++i) {
      acc += dist2[i];
      if (acc >= pick) {
        chosen = i;
        break;
      }
    }
    centroids.row(c) = rows.row(chosen);
  }
  return centroids;
}

KMeansRun SphericalKMeansOnce(const Eigen::MatrixXd& rows, int r, Rng& rng,
                              int max_iters) {
  const int n = static_cast<int>(rows.rows());
  Eigen::MatrixXd centroids = SeedCentroids(rows, r, rng);
  std::vector<int> assign(n, -1);

  for (int iter = 0; iter < max_iters; ++iter) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      const int c = Nearest(centroids, rows.row(i));
      if (c != assign[i]) {
        assign[i] = c;
        changed = true;
      }
    }
    if (!changed && iter > 0) break;

    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(r, rows.cols());
    Eigen::VectorXi counts = Eigen::VectorXi::Zero(r);
    for (int i = 0; i < n; ++i) {
      sums.row(assign[i]) += rows.row(i);
      counts[assign[i]] += 1;
    }
    for (int c = 0; c < r; ++c) {
      const double norm = sums.row(c).norm();
      if (counts[c] == 0 || norm < 1e-12) {
        // Empty (or degenerate) cluster: re-seed it with the point
        // farthest from its own centroid.
        int far = 0;
        double far_d2 = -1.0;
        for (int i = 0; i < n; ++i) {
          const double d2 =
              2.0 - 2.0 * centroids.row(assign[i]).dot(rows.row(i));
          if (d2 > far_d2) {
            far_d2 = d2;
            far = i;
          }
        }
        centroids.row(c) = rows.row(far);
      } else {
        centroids.row(c) = sums.row(c) / norm;
      }
    }
  }

  KMeansRun run;
  run.centroids = centroids;
  run.objective = 0.0;
  for (int i = 0; i < n; ++i)
    run.objective += centroids.row(Nearest(centroids, rows.row(i))).dot(
        rows.row(i));
  return run;
}

}  // namespace

SimplexFit FitSimplex(const Eigen::MatrixXd& rows, int r, uint64_t seed,
                      int restarts) {
  if (rows.rows() < r)
    throw ParameterError("need at least r rows to fit a simplex");
  if (rows.cols() < r - 1)
    throw DimensionError("ambient dimension below r-1");
  if (restarts < 1) throw ParameterError("restarts must be positive");

  Rng base(seed);
  KMeansRun best;
  for (int t = 0; t < restarts; ++t) {
    Rng rng = base.Fork(static_cast<uint64_t>(t));
    KMeansRun run = SphericalKMeansOnce(rows, r, rng, /*max_iters=*/100);
    if (run.objective > best.objective) best = std::move(run);
  }

  // Align the canonical simplex onto the centroids: maximize
  // Tr(C R V^T) over orthogonal R, solved by R = W U^T with
  // U S W^T = svd(V^T C).
  const int dim = static_cast<int>(rows.cols());
  const Eigen::MatrixXd canonical = CanonicalSimplex(r, dim).vectors();
  const Eigen::MatrixXd b = best.centroids.transpose() * canonical;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      b, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::MatrixXd rotation = svd.matrixV() * svd.matrixU().transpose();

  SimplexFit fit{SimplexBasis(canonical * rotation), best.centroids, 0.0};
  for (int i = 0; i < r; ++i)
    fit.alignment += fit.basis.Vector(i).dot(best.centroids.row(i));
  return fit;
}

SimplexBasis BestFitSimplex(const Eigen::MatrixXd& rows, int r, uint64_t seed,
                            int restarts) {
  return FitSimplex(rows, r, seed, restarts).basis;
}

namespace {

// Exhaustive injective assignment of the seen labels to fitted vertices,
// maximizing the total inner product against the reference vectors. Sizes
// here are tiny (r <= ~10), so enumeration is fine.
void BestInjection(const Eigen::MatrixXd& score, size_t next,
                   std::vector<int>& current, std::vector<bool>& used,
                   double acc, double* best, std::vector<int>* best_map) {
  const size_t k = static_cast<size_t>(score.rows());
  if (next == k) {
    if (acc > *best) {
      *best = acc;
      *best_map = current;
    }
    return;
  }
  for (int j = 0; j < score.cols(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    current[next] = j;
    BestInjection(score, next + 1, current, used, acc + score(next, j), best,
                  best_map);
    used[j] = false;
  }
}

}  // namespace

SimplexBasis MatchBasisToLabels(const SimplexBasis& fitted,
                                const DiscreteLabeling& labels,
                                const SimplexBasis& reference) {
  if (fitted.r() != reference.r())
    throw DimensionError("basis sizes disagree");
  if (fitted.dim() != reference.dim())
    throw DimensionError("basis dimensions disagree");

  const std::vector<int> seen = labels.UniqueLabels();
  const int r = fitted.r();
  if (seen.empty()) return fitted;

  Eigen::MatrixXd score(seen.size(), r);
  for (size_t s = 0; s < seen.size(); ++s)
    for (int j = 0; j < r; ++j)
      score(s, j) = reference.Vector(seen[s]).dot(fitted.Vector(j));

  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> map(seen.size(), -1), current(seen.size(), -1);
  std::vector<bool> used(static_cast<size_t>(r), false);
  BestInjection(score, 0, current, used, 0.0, &best, &map);

  std::vector<int> perm(static_cast<size_t>(r), -1);
  std::vector<bool> taken(static_cast<size_t>(r), false);
  for (size_t s = 0; s < seen.size(); ++s) {
    perm[seen[s]] = map[s];
    taken[map[s]] = true;
  }
  int cursor = 0;
  for (int c = 0; c < r; ++c) {
    if (perm[c] != -1) continue;
    while (taken[cursor]) ++cursor;
    perm[c] = cursor;
    taken[cursor] = true;
  }
  return fitted.Permuted(perm);
}

}  // namespace sbmal
