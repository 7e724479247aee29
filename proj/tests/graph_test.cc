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

#include <cmath>
#include <fstream>

#include "gtest/gtest.h"
#include "sbmal/edge_list_io.h"
#include "sbmal/errors.h"
#include "sbmal/modified_adjacency.h"
#include "test_oracles.h"

namespace sbmal {
namespace {

TEST(GraphTest, RejectsInvalidEdges) {
  EXPECT_THROW(Graph(3, {{0, 3}}), ParameterError);
  EXPECT_THROW(Graph(3, {{1, 1}}), ParameterError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), ParameterError);
}

TEST(GraphTest, CanonicalizesAndSortsEdges) {
  Graph g(4, {{2, 0}, {3, 1}});
  ASSERT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.edges()[0], (std::pair<int, int>{0, 2}));
  EXPECT_EQ(g.edges()[1], (std::pair<int, int>{1, 3}));
  EXPECT_TRUE(g.HasEdge(0, 2));
  EXPECT_TRUE(g.HasEdge(2, 0));
  EXPECT_FALSE(g.HasEdge(0, 1));
  EXPECT_EQ(g.Degree(3), 1);
}

TEST(SbmSampleTest, DegenerateProbabilitiesGiveTwoCliques) {
  const auto [graph, truth] = SampleSbm(SbmParams::Dense(6, 2, 1.0, 0.0), 7);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      EXPECT_EQ(graph.HasEdge(u, v), truth.labels[u] == truth.labels[v]);
}

TEST(SbmSampleTest, ZeroProbabilitiesGiveEmptyGraph) {
  const auto [graph, truth] = SampleSbm(SbmParams::Dense(10, 3, 0.0, 0.0), 3);
  EXPECT_EQ(graph.edge_count(), 0);
  EXPECT_EQ(truth.n(), 10);
}

TEST(SbmSampleTest, SameSeedIsBitIdentical) {
  const SbmParams params = SbmParams::Sparse(60, 3, 6.0, 2.0);
  const auto [g1, t1] = SampleSbm(params, 42);
  const auto [g2, t2] = SampleSbm(params, 42);
  EXPECT_EQ(g1.edges(), g2.edges());
  EXPECT_EQ(t1.labels, t2.labels);
  const auto [g3, t3] = SampleSbm(params, 43);
  EXPECT_TRUE(g3.edges() != g1.edges() || t3.labels != t1.labels);
}

TEST(SbmSampleTest, SparseDensitiesMatchPaperParameters) {
  // n=500, r=2, a=5, b=2: empirical densities close to 5/500 and 2/500.
  const SbmParams params = SbmParams::Sparse(500, 2, 5.0, 2.0);
  EXPECT_NEAR(params.Snr(), 9.0 / 14.0, 1e-12);

  int64_t pairs_in = 0, pairs_out = 0, edges_in = 0, edges_out = 0;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const auto [graph, truth] = SampleSbm(params, seed);
    for (int u = 0; u < graph.n(); ++u) {
      for (int v = u + 1; v < graph.n(); ++v) {
        const bool same = truth.labels[u] == truth.labels[v];
        const bool edge = graph.HasEdge(u, v);
        (same ? pairs_in : pairs_out) += 1;
        if (edge) (same ? edges_in : edges_out) += 1;
      }
    }
  }
  const double p_emp = static_cast<double>(edges_in) / pairs_in;
  const double q_emp = static_cast<double>(edges_out) / pairs_out;
  const double p_se = std::sqrt(params.p * (1 - params.p) / pairs_in);
  const double q_se = std::sqrt(params.q * (1 - params.q) / pairs_out);
  EXPECT_NEAR(p_emp, params.p, 3 * p_se);
  EXPECT_NEAR(q_emp, params.q, 3 * q_se);
}

TEST(SbmSampleTest, InvalidProbabilitiesRejected) {
  EXPECT_THROW(SampleSbm(SbmParams::Dense(4, 2, 1.5, 0.1), 1), ParameterError);
  EXPECT_THROW(SampleSbm(SbmParams::Dense(4, 2, 0.5, -0.1), 1),
               ParameterError);
  EXPECT_THROW(SampleSbm(SbmParams::Dense(4, 1, 0.5, 0.1), 1), ParameterError);
}

TEST(ModifiedAdjacencyTest, EntriesFollowLogRatios) {
  const Graph g(3, {{0, 1}});
  const ModifiedAdjacency m(g, 0.5, 0.25);
  EXPECT_NEAR(m.Entry(0, 1), std::log(2.0), 1e-15);
  EXPECT_EQ(m.Entry(0, 0), 0.0);

  const ModifiedAdjacency flat(g, 0.3, 0.3);
  EXPECT_EQ(flat.Entry(0, 1), 0.0);
  EXPECT_EQ(flat.Entry(0, 2), 0.0);

  const ModifiedAdjacency wide(g, 0.8, 0.2);
  EXPECT_NEAR(wide.Entry(0, 2), -std::log(4.0), 1e-15);
}

TEST(ModifiedAdjacencyTest, AssortativeWeightsHaveOppositeSigns) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const double q = 0.05 + 0.4 * rng.NextDouble();
    const double p = q + (1.0 - q - 0.05) * rng.NextDouble();
    const ModifiedAdjacency m(Graph(2, {}), p, q);
    EXPECT_GT(m.w_in(), 0.0);
    EXPECT_LT(m.w_out(), 0.0);
  }
}

TEST(ModifiedAdjacencyTest, ClampsDegenerateProbabilities) {
  const ModifiedAdjacency m(Graph(2, {{0, 1}}), 1.0, 0.0);
  EXPECT_TRUE(std::isfinite(m.w_in()));
  EXPECT_TRUE(std::isfinite(m.w_out()));
  EXPECT_NEAR(m.p(), 1.0 - 1e-6, 1e-12);
  EXPECT_NEAR(m.q(), 1e-6, 1e-12);
}

TEST(MatvecTest, EmptyGraphWithZeroWeightsGivesZero) {
  const ModifiedAdjacency m(Graph(5, {}), 0.4, 0.4);  // w_in = w_out = 0
  const Eigen::VectorXd v = Eigen::VectorXd::Random(5);
  EXPECT_EQ(m.Multiply(v).norm(), 0.0);
}

TEST(MatvecTest, AllOnesGivesDegreeFormula) {
  Rng rng(5);
  const Graph g = testing::RandomGraph(9, 0.4, rng);
  const ModifiedAdjacency m(g, 0.6, 0.2);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(9);
  const Eigen::VectorXd out = m.Multiply(ones);
  for (int i = 0; i < 9; ++i) {
    const double expected =
        m.w_in() * g.Degree(i) + m.w_out() * (9 - 1 - g.Degree(i));
    EXPECT_NEAR(out[i], expected, 1e-12);
  }
}

TEST(MatvecTest, MatchesDenseProduct) {
  Rng rng(17);
  const Graph g = testing::RandomGraph(7, 0.5, rng);
  const ModifiedAdjacency m(g, 0.7, 0.2);
  const Eigen::MatrixXd dense = testing::DenseModified(m);
  Eigen::VectorXd v(7);
  for (int i = 0; i < 7; ++i) v[i] = rng.NextGaussian();
  EXPECT_LT((m.Multiply(v) - dense * v).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(MatvecTest, MatchesDenseProductOnManyGraphs) {
  Rng rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng.NextInt(49));
    const Graph g = testing::RandomGraph(n, 0.1 + 0.8 * rng.NextDouble(), rng);
    const double q = 0.05 + 0.4 * rng.NextDouble();
    const double p = q + 0.3 * rng.NextDouble();
    const ModifiedAdjacency m(g, p, q);
    const Eigen::MatrixXd dense = testing::DenseModified(m);

    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.NextGaussian();
    EXPECT_LT((m.Multiply(v) - dense * v).cwiseAbs().maxCoeff(), 1e-12);

    const Eigen::MatrixXd x = testing::RandomUnitRows(n, 3, rng);
    EXPECT_LT((m.Multiply(x) - dense * x).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(
        (m.RowProduct(1, x) - (dense * x).row(1)).cwiseAbs().maxCoeff(),
        1e-12);
  }
}

TEST(MatvecTest, DimensionMismatchThrows) {
  const ModifiedAdjacency m(Graph(4, {{0, 1}}), 0.5, 0.2);
  const Eigen::VectorXd wrong_size = Eigen::VectorXd::Ones(5);
  EXPECT_THROW(m.Multiply(wrong_size), DimensionError);
}

TEST(EstimateParamsTest, SingleWithinPairUsesAddOneSmoothing) {
  const Graph g(2, {{0, 1}});
  DiscreteLabeling labels(2, 2);
  labels.Assign(0, 0);
  labels.Assign(1, 0);
  const auto [p_hat, q_hat] =
      EstimateParams(g, labels, std::make_pair(0.1, 0.05));
  EXPECT_NEAR(p_hat, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(q_hat, 0.05, 1e-15);  // no between pairs -> fallback
}

TEST(EstimateParamsTest, NoLabelsReturnsFallback) {
  const Graph g(4, {{0, 1}});
  const DiscreteLabeling labels(4, 2);
  const auto [p_hat, q_hat] =
      EstimateParams(g, labels, std::make_pair(0.1, 0.05));
  EXPECT_NEAR(p_hat, 0.1, 1e-15);
  EXPECT_NEAR(q_hat, 0.05, 1e-15);
}

TEST(EstimateParamsTest, NoLabelsNoFallbackThrows) {
  const Graph g(4, {{0, 1}});
  EXPECT_THROW(EstimateParams(g, DiscreteLabeling(4, 2)), EstimationError);
}

TEST(EstimateParamsTest, FullyLabeledTwoCliques) {
  // Planted p=1, q=0 on communities {0,1,2} and {3,4,5}.
  const Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  const DiscreteLabeling labels =
      DiscreteLabeling::Full({0, 0, 0, 1, 1, 1}, 2);
  const auto [p_hat, q_hat] = EstimateParams(g, labels);
  EXPECT_NEAR(p_hat, 7.0 / 8.0, 1e-15);   // (6+1)/(6+2)
  EXPECT_NEAR(q_hat, 1.0 / 11.0, 1e-15);  // (0+1)/(9+2)
}

TEST(EstimateParamsTest, ConvergesOnFullyLabeledSample) {
  const SbmParams params = SbmParams::Dense(500, 2, 0.05, 0.02);
  const auto [graph, truth] = SampleSbm(params, 2024);
  const auto [p_hat, q_hat] = EstimateParams(graph, truth.AsLabeling());

  int64_t pairs_in = 0;
  for (int u = 0; u < 500; ++u)
    for (int v = u + 1; v < 500; ++v)
      if (truth.labels[u] == truth.labels[v]) ++pairs_in;
  const int64_t pairs_out = 500LL * 499 / 2 - pairs_in;
  EXPECT_NEAR(p_hat, params.p,
              3 * std::sqrt(params.p * (1 - params.p) / pairs_in));
  EXPECT_NEAR(q_hat, params.q,
              3 * std::sqrt(params.q * (1 - params.q) / pairs_out));
}

class EdgeListIoTest : public ::testing::Test {
 protected:
  std::string Path(const std::string& name) {
    return ::testing::TempDir() + "sbmal_" + name;
  }
  void Write(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
  }
};

TEST_F(EdgeListIoTest, ParsesSimpleFiles) {
  const std::string edges = Path("simple.edges");
  const std::string labels = Path("simple.labels");
  Write(edges, "3\n0 1\n1 2\n");
  Write(labels, "0,0\n1,0\n2,1\n");
  const EdgeListData data = ReadEdgeList(edges, labels);
  EXPECT_EQ(data.graph.n(), 3);
  EXPECT_EQ(data.graph.edge_count(), 2);
  EXPECT_TRUE(data.graph.HasEdge(0, 1));
  EXPECT_TRUE(data.graph.HasEdge(1, 2));
  EXPECT_EQ(data.truth.labels, (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(data.dropped_self_loops, 0);
  EXPECT_EQ(data.dropped_duplicates, 0);
}

TEST_F(EdgeListIoTest, DropsSelfLoopsAndDuplicatesWithCounts) {
  const std::string edges = Path("loops.edges");
  const std::string labels = Path("loops.labels");
  Write(edges, "# comment\n3\n0 0\n0 1\n1 0\n0 1\n1 2\n");
  Write(labels, "0,0\n1,1\n2,0\n");
  const EdgeListData data = ReadEdgeList(edges, labels);
  EXPECT_EQ(data.dropped_self_loops, 1);
  EXPECT_EQ(data.dropped_duplicates, 2);
  EXPECT_EQ(data.graph.edge_count(), 2);
}

TEST_F(EdgeListIoTest, MalformedLineReportsLineNumber) {
  const std::string edges = Path("bad.edges");
  const std::string labels = Path("bad.labels");
  Write(edges, "3\n0 1\nnope 2\n");
  Write(labels, "0,0\n1,0\n2,1\n");
  try {
    ReadEdgeList(edges, labels);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos);
  }
}

TEST_F(EdgeListIoTest, LabelOutOfRangeThrows) {
  const std::string edges = Path("range.edges");
  const std::string labels = Path("range.labels");
  Write(edges, "2\n0 1\n");
  Write(labels, "0,0\n1,5\n");
  EXPECT_THROW(ReadEdgeList(edges, labels, /*expected_r=*/2), DataError);
}

TEST_F(EdgeListIoTest, MissingLabelRejected) {
  const std::string edges = Path("missing.edges");
  const std::string labels = Path("missing.labels");
  Write(edges, "3\n0 1\n");
  Write(labels, "0,0\n1,1\n");
  EXPECT_THROW(ReadEdgeList(edges, labels), DataError);
}

TEST_F(EdgeListIoTest, RoundTripsThroughWriters) {
  const auto [graph, truth] = SampleSbm(SbmParams::Dense(12, 3, 0.6, 0.1), 9);
  const std::string edges = Path("rt.edges");
  const std::string labels = Path("rt.labels");
  WriteEdgeList(graph, edges);
  WriteLabels(truth, labels);
  const EdgeListData data = ReadEdgeList(edges, labels, 3);
  EXPECT_EQ(data.graph.edges(), graph.edges());
  EXPECT_EQ(data.truth.labels, truth.labels);
  EXPECT_EQ(data.truth.r, 3);
}

}  // namespace
}  // namespace sbmal
