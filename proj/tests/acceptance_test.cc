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

// Acceptance suite: ten release criteria, one pass/fail line each. They
// pin the library to its independent oracles (exhaustive enumeration,
// Bernoulli products, finite differences) and reproduce the qualitative
// behavior expected on below-threshold SBM ensembles.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "sbmal/active_learning.h"
#include "sbmal/bench.h"
#include "sbmal/likelihood.h"
#include "test_oracles.h"

namespace sbmal {
namespace {

void Report(int index, bool pass, const std::string& detail) {
  std::printf("[C%d] %s  %s\n", index, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
}

struct Instance {
  Graph graph;
  double p, q;
  int r;
};

Instance RandomInstance(Rng& rng, int max_n, int min_n = 4) {
  const int n = min_n + static_cast<int>(rng.NextInt(max_n - min_n + 1));
  const int r = 2 + static_cast<int>(rng.NextInt(2));
  const double q = 0.08 + 0.3 * rng.NextDouble();
  const double p = q + 0.08 + 0.4 * rng.NextDouble();
  Graph g = testing::RandomGraph(n, 0.25 + 0.5 * rng.NextDouble(), rng);
  return Instance{std::move(g), p, q, r};
}

Eigen::MatrixXd Embed(const std::vector<int>& labels,
                      const SimplexBasis& basis) {
  Eigen::MatrixXd rows(static_cast<int>(labels.size()), basis.dim());
  for (size_t i = 0; i < labels.size(); ++i)
    rows.row(static_cast<int>(i)) = basis.Vector(labels[i]);
  return rows;
}

// ---------------------------------------------------------------------
// Criterion 1: log-likelihood score differences equal exact Bernoulli
// log-ratios for every labeling pair on 30 random instances (n <= 8).
// Equivalent form: score - log P[M|X] is constant across labelings.
TEST(Acceptance, C1_LikelihoodScoreIdentity) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(101);
  double worst = 0.0;
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = RandomInstance(rng, 8);
    const ModifiedAdjacency m(inst.graph, inst.p, inst.q);
    double reference = 0.0;
    bool first = true;
    testing::ForEachCompletion(
        DiscreteLabeling(inst.graph.n(), inst.r),
        [&](const std::vector<int>& labels) {
          const double gap =
              LogLikelihoodScore(m, DiscreteLabeling::Full(labels, inst.r)) -
              testing::BernoulliLogProb(inst.graph, inst.p, inst.q, labels);
          if (first) {
            reference = gap;
            first = false;
          }
          worst = std::max(worst, std::abs(gap - reference));
        });
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const bool pass = worst <= 1e-10 && seconds < 30.0;
  std::ostringstream detail;
  detail << "likelihood-score identity: max |err| = " << worst << ", " << seconds
         << " s";
  Report(1, pass, detail.str());
  EXPECT_LE(worst, 1e-10);
  EXPECT_LT(seconds, 30.0);
}

// ---------------------------------------------------------------------
// Criterion 2: the conditional distribution with discrete conditioning
// equals brute-force normalization of Bernoulli products, per entry.
TEST(Acceptance, C2_ConditionalDistributionIdentity) {
  Rng rng(202);
  double worst = 0.0;
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = RandomInstance(rng, 8);
    const int n = inst.graph.n();
    const ModifiedAdjacency m(inst.graph, inst.p, inst.q);
    const SimplexBasis basis = CanonicalSimplex(inst.r, inst.r - 1);
    for (int probe = 0; probe < 3; ++probe) {
      std::vector<int> labels(n);
      for (int& c : labels) c = static_cast<int>(rng.NextInt(inst.r));
      const Eigen::MatrixXd rows = Embed(labels, basis);
      for (int node = 0; node < n; ++node) {
        const LabelDistribution dist =
            ConditionalDistribution(m, node, rows, basis);
        Eigen::VectorXd log_prob(inst.r);
        std::vector<int> flipped = labels;
        for (int c = 0; c < inst.r; ++c) {
          flipped[node] = c;
          log_prob[c] =
              testing::BernoulliLogProb(inst.graph, inst.p, inst.q, flipped);
        }
        Eigen::VectorXd expected =
            (log_prob.array() - log_prob.maxCoeff()).exp();
        expected /= expected.sum();
        worst = std::max(worst,
                         (dist.probs - expected).cwiseAbs().maxCoeff());
      }
    }
  }
  const bool pass = worst <= 1e-10;
  std::ostringstream detail;
  detail << "conditional-distribution identity: max per-entry |err| = " << worst;
  Report(2, pass, detail.str());
  EXPECT_LE(worst, 1e-10);
}

// ---------------------------------------------------------------------
// Criterion 3: the relaxed solver dominates the exhaustive discrete
// maximum, and the likelihood-ratio certificate is a valid lower bound.
TEST(Acceptance, C3_RelaxationDominanceAndCertificate) {
  Rng rng(303);
  double worst_slack = 1e300;
  bool certificates_valid = true;
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = RandomInstance(rng, 10, 6);
    const int n = inst.graph.n();
    const ModifiedAdjacency m(inst.graph, inst.p, inst.q);
    const SimplexBasis basis = CanonicalSimplex(inst.r, inst.r - 1);

    DiscreteLabeling pins(n, inst.r);
    for (int c = 0; c < inst.r; ++c) pins.Assign(c, c);

    SolverConfig cfg;
    cfg.seed = 1000 + trial;
    cfg.restarts = 8;
    const SolveResult solved = SolveSdp(m, pins, basis, cfg);
    const SimplexBasis embedded = basis.EmbedIn(solved.labeling.d());
    const DiscreteLabeling rounded =
        RoundLabeling(solved.labeling, embedded);

    const DiscreteLabeling ml = BruteForceMlLabeling(m, pins);
    const double ml_score = TraceScore(m, Embed(ml.labels(), basis));
    worst_slack = std::min(worst_slack, solved.objective - ml_score);

    const RatioCertificate cert =
        ApproxRatioCertificate(m, rounded, solved.labeling, embedded);
    const double true_ratio =
        std::exp(LogLikelihoodScore(m, rounded) - LogLikelihoodScore(m, ml));
    if (!(true_ratio >= cert.value - 1e-12)) certificates_valid = false;
  }
  const bool pass = worst_slack >= -1e-6 && certificates_valid;
  std::ostringstream detail;
  detail << "relaxation dominance: min(objective - discrete max) = "
         << worst_slack << ", certificates valid = "
         << (certificates_valid ? "yes" : "no");
  Report(3, pass, detail.str());
  EXPECT_GE(worst_slack, -1e-6);
  EXPECT_TRUE(certificates_valid);
}

// ---------------------------------------------------------------------
// Criterion 4: analytic ascent direction vs central finite differences of
// the trace score along random tangent directions, 10 points/instance.
TEST(Acceptance, C4_GradientCheck) {
  Rng rng(404);
  double worst = 0.0;
  for (int trial = 0; trial < 3; ++trial) {
    const Instance inst = RandomInstance(rng, 10, 8);
    const int n = inst.graph.n();
    const ModifiedAdjacency m(inst.graph, inst.p, inst.q);
    const int d = 4;
    for (int point = 0; point < 10; ++point) {
      const Eigen::MatrixXd x = testing::RandomUnitRows(n, d, rng);
      const Eigen::MatrixXd product = m.Multiply(x);
      Eigen::MatrixXd grad(n, d);
      for (int i = 0; i < n; ++i)
        grad.row(i) = 2.0 * (product.row(i) -
                             product.row(i).dot(x.row(i)) * x.row(i));
      Eigen::MatrixXd dir(n, d);
      for (int i = 0; i < n; ++i) {
        for (int c = 0; c < d; ++c) dir(i, c) = rng.NextGaussian();
        dir.row(i) -= dir.row(i).dot(x.row(i)) * x.row(i);
      }
      dir /= dir.norm();
      const auto value_at = [&](double t) {
        Eigen::MatrixXd moved = x + t * dir;
        for (int i = 0; i < n; ++i) moved.row(i) /= moved.row(i).norm();
        return TraceScore(m, moved);
      };
      const double h = 1e-5;
      const double fd = (value_at(h) - value_at(-h)) / (2.0 * h);
      const double analytic = grad.cwiseProduct(dir).sum();
      worst = std::max(
          worst, std::abs(analytic - fd) / std::max(1.0, std::abs(fd)));
    }
  }
  const bool pass = worst <= 1e-5;
  std::ostringstream detail;
  detail << "gradient check: max relative error = " << worst;
  Report(4, pass, detail.str());
  EXPECT_LE(worst, 1e-5);
}

// ---------------------------------------------------------------------
// Criterion 5: near-deterministic planted instances with one anchor per
// community are recovered exactly, every seed.
TEST(Acceptance, C5_PlantedRecovery) {
  bool all_exact = true;
  std::ostringstream detail;
  for (int n : {8, 50}) {
    for (int r : {2, 3}) {
      const SbmParams params = SbmParams::Dense(n, r, 0.999999, 1e-6);
      int accepted = 0;
      for (uint64_t seed = 1; accepted < 3 && seed < 60; ++seed) {
        const auto [graph, truth] = SampleSbm(params, seed);
        // One anchor per community requires every community non-empty.
        std::vector<int> first(static_cast<size_t>(r), -1);
        for (int i = 0; i < n; ++i)
          if (first[truth.labels[i]] == -1) first[truth.labels[i]] = i;
        bool complete = true;
        for (int c = 0; c < r; ++c) complete = complete && first[c] != -1;
        if (!complete) continue;
        ++accepted;

        DiscreteLabeling anchors(n, r);
        std::set<int> queried;
        for (int c = 0; c < r; ++c) {
          anchors.Assign(first[c], truth.labels[first[c]]);
          queried.insert(first[c]);
        }
        ActiveConfig cfg;
        cfg.solver.seed = seed;
        const SemiSupervisedResult out =
            SemiSupervised(ModifiedAdjacency(graph, params.p, params.q),
                           anchors, cfg);
        const double acc = Accuracy(out.labels, truth, queried);
        if (acc != 1.0) {
          all_exact = false;
          detail << " [n=" << n << " r=" << r << " seed=" << seed
                 << " acc=" << acc << "]";
        }
      }
      EXPECT_EQ(accepted, 3) << "not enough non-degenerate samples";
    }
  }
  Report(5, all_exact, "planted recovery, one anchor per community" +
                           detail.str());
  EXPECT_TRUE(all_exact);
}

// ---------------------------------------------------------------------
// Shared below-threshold ensemble for criteria 6 and 7:
// SBM(n=300, r=2, a=5, b=2), 10 seeds, active and random to 10% queried.
struct EnsembleResults {
  std::vector<double> unsupervised;  // permutation-matched, zero queries
  std::vector<double> active_at_10;
  std::vector<double> random_at_10;
  double seconds = 0.0;
};

const EnsembleResults& BelowThresholdEnsemble() {
  static const EnsembleResults results = [] {
    const auto start = std::chrono::steady_clock::now();
    const SbmParams params = SbmParams::Sparse(300, 2, 5.0, 2.0);
    const int budget = 30;  // 10% of n
    EnsembleResults out;
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      const auto [graph, truth] = SampleSbm(params, seed);
      ActiveConfig cfg;
      cfg.solver.seed = seed;
      const ActiveRunResult active =
          ActiveLoop(graph, params.p, params.q, truth, budget, cfg);
      out.unsupervised.push_back(active.step_accuracy.front());
      out.active_at_10.push_back(active.step_accuracy.back());
      const ActiveRunResult random = RandomBaselineLoop(
          graph, params.p, params.q, truth, budget, seed, cfg);
      std::set<int> queried;
      for (const QueryRecord& rec : random.log) queried.insert(rec.node);
      out.random_at_10.push_back(Accuracy(random.labels, truth, queried));
    }
    out.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return out;
  }();
  return results;
}

double Mean(const std::vector<double>& xs) {
  double total = 0.0;
  for (double x : xs) total += x;
  return total / xs.size();
}

// Criterion 6: below the detection threshold the unsupervised output has
// essentially random accuracy.
TEST(Acceptance, C6_BelowThresholdBaseline) {
  const EnsembleResults& ensemble = BelowThresholdEnsemble();
  const double mean = Mean(ensemble.unsupervised);
  const bool pass = mean >= 0.43 && mean <= 0.57;
  std::ostringstream detail;
  detail << "unsupervised mean accuracy = " << mean
         << " (SNR = " << SbmParams::Sparse(300, 2, 5.0, 2.0).Snr() << ")";
  Report(6, pass, detail.str());
  EXPECT_GE(mean, 0.43);
  EXPECT_LE(mean, 0.57);
}

// Criterion 7: at 10% queried the active learner beats the random
// baseline on average and in at least 8 of 10 paired seeds.
TEST(Acceptance, C7_ActiveBeatsRandom) {
  const EnsembleResults& ensemble = BelowThresholdEnsemble();
  const double active_mean = Mean(ensemble.active_at_10);
  const double random_mean = Mean(ensemble.random_at_10);
  int wins = 0;
  for (size_t k = 0; k < ensemble.active_at_10.size(); ++k)
    if (ensemble.active_at_10[k] > ensemble.random_at_10[k]) ++wins;
  const bool pass = active_mean >= random_mean && wins >= 8 &&
                    ensemble.seconds <= 600.0;
  std::ostringstream detail;
  detail << "active mean = " << active_mean << ", random mean = "
         << random_mean << ", paired wins = " << wins << "/10, ensemble in "
         << ensemble.seconds << " s";
  Report(7, pass, detail.str());
  EXPECT_GE(active_mean, random_mean);
  EXPECT_GE(wins, 8);
  EXPECT_LE(ensemble.seconds, 600.0);
}

// ---------------------------------------------------------------------
// Criterion 8: rank-one expected-model-change scores equal an uncached
// recomputation under the row-overwrite definition.
TEST(Acceptance, C8_RankOneSpeedupExactness) {
  Rng rng(808);
  double worst = 0.0;
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 8 + static_cast<int>(rng.NextInt(5));  // 8..12
    const int r = 2 + static_cast<int>(rng.NextInt(2));
    const Graph g = testing::RandomGraph(n, 0.4, rng);
    const double q = 0.1 + 0.2 * rng.NextDouble();
    const double p = q + 0.2 + 0.2 * rng.NextDouble();
    const ModifiedAdjacency m(g, p, q);
    DiscreteLabeling labels(n, r);
    for (int c = 0; c < r; ++c) labels.Assign(c, c);

    SolverConfig scfg;
    scfg.seed = trial + 5;
    scfg.restarts = 2;
    const SolveResult solved =
        SolveSdp(m, labels, CanonicalSimplex(r, r - 1), scfg);
    const SimplexBasis basis =
        CanonicalSimplex(r, r - 1).EmbedIn(solved.labeling.d());

    const ModelMatrix before =
        ComputeModel(m, labels, solved.labeling.rows, basis);
    const std::vector<Selection> fast =
        MemcScores(m, solved.labeling, labels, basis, MemcMode::kRankOne);
    for (const Selection& s : fast) {
      double slow = 0.0;
      for (int c = 0; c < r; ++c) {
        DiscreteLabeling hypothesis = labels;
        hypothesis.Assign(s.node, c);
        Eigen::MatrixXd rows = solved.labeling.rows;
        rows.row(s.node) = basis.Vector(c);
        const ModelMatrix after = ComputeModel(m, hypothesis, rows, basis);
        slow += before.probs(s.node, c) *
                (after.probs - before.probs).cwiseAbs().sum();
      }
      worst = std::max(worst, std::abs(s.score - slow));
    }
  }
  const bool pass = worst <= 1e-10;
  std::ostringstream detail;
  detail << "rank-1 speedup exactness: max |err| = " << worst;
  Report(8, pass, detail.str());
  EXPECT_LE(worst, 1e-10);
}

// ---------------------------------------------------------------------
// Criterion 9: noisy planted simplices are recovered within 0.1 rad per
// matched vertex in at least 9 of 10 seeds, for r in {2, 3, 4}.
TEST(Acceptance, C9_BestFitSimplexRecovery) {
  bool pass = true;
  std::ostringstream detail;
  detail << "best-fit recovery:";
  for (int r : {2, 3, 4}) {
    const int dim = r + 1, n = 60;
    int good = 0;
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      Rng rng(900 + 10 * r + seed);
      const Eigen::MatrixXd truth = CanonicalSimplex(r, dim).vectors() *
                                    testing::RandomOrthogonal(dim, rng);
      Eigen::MatrixXd rows(n, dim);
      for (int i = 0; i < n; ++i) {
        Eigen::RowVectorXd row = truth.row(i % r);
        for (int c = 0; c < dim; ++c) row[c] += 0.05 * rng.NextGaussian();
        rows.row(i) = row / row.norm();
      }
      const SimplexBasis fitted = BestFitSimplex(rows, r, seed);
      bool all_close = true;
      for (double angle :
           testing::MatchedVertexAngles(fitted.vectors(), truth))
        all_close = all_close && angle <= 0.1;
      if (all_close) ++good;
    }
    detail << " r=" << r << ": " << good << "/10";
    pass = pass && good >= 9;
    EXPECT_GE(good, 9) << "r = " << r;
  }
  Report(9, pass, detail.str());
}

// ---------------------------------------------------------------------
// Criterion 10: two `bench` runs with an identical configuration produce
// byte-identical CSV files.
TEST(Acceptance, C10_BenchDeterminism) {
#ifdef SBMAL_CLI_PATH
  const std::string dir = ::testing::TempDir();
  const std::string csv_a = dir + "accept_det_a.csv";
  const std::string csv_b = dir + "accept_det_b.csv";
  const std::string args =
      " bench --n 60 --r 2 --a 8 --b 2 --seeds 1,2,3 --grid 0,0.05,0.1"
      " --algorithms active,random --restarts 2 --out ";
  const auto run = [&](const std::string& out) {
    const std::string command = std::string(SBMAL_CLI_PATH) + args + out +
                                " > /dev/null 2>&1";
    return WEXITSTATUS(std::system(command.c_str()));
  };
  ASSERT_EQ(run(csv_a), 0);
  ASSERT_EQ(run(csv_b), 0);

  const auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };
  const std::string bytes_a = slurp(csv_a);
  const std::string bytes_b = slurp(csv_b);
  const bool pass = !bytes_a.empty() && bytes_a == bytes_b;
  Report(10, pass, "bench determinism: " +
                       std::to_string(bytes_a.size()) + " bytes, " +
                       (pass ? "byte-identical" : "MISMATCH"));
  EXPECT_TRUE(pass);
#else
  Report(10, false, "CLI binary unavailable");
  FAIL() << "acceptance requires the CLI target";
#endif
}

}  // namespace
}  // namespace sbmal
