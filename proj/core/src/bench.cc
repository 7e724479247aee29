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

#include "sbmal/bench.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sbmal/edge_list_io.h"

namespace sbmal {

namespace {

int GridQueries(double pct, int n) {
  return static_cast<int>(std::lround(pct * n));
}

struct ReplicateInput {
  Graph graph;
  GroundTruth truth;
  double p = 0.0;
  double q = 0.0;
};

ReplicateInput BuildReplicate(const ExperimentConfig& cfg, uint64_t seed) {
  if (cfg.sbm) {
    auto [graph, truth] = SampleSbm(*cfg.sbm, seed);
    ReplicateInput in{std::move(graph), std::move(truth), cfg.sbm->p,
                      cfg.sbm->q};
    if (cfg.given_pq) {
      in.p = cfg.given_pq->first;
      in.q = cfg.given_pq->second;
    } else if (cfg.estimate_pq) {
      std::tie(in.p, in.q) = EstimateParams(
          in.graph, in.truth.AsLabeling(), std::make_pair(in.p, in.q));
    }
    return in;
  }

  EdgeListData data = ReadEdgeList(cfg.edges_path, cfg.labels_path, cfg.r);
  ReplicateInput in{std::move(data.graph), std::move(data.truth), 0.0, 0.0};
  if (cfg.given_pq) {
    in.p = cfg.given_pq->first;
    in.q = cfg.given_pq->second;
  } else {
    // No probabilities for a real network: plug-in estimate from the
    // annotated labels.
    std::tie(in.p, in.q) = EstimateParams(in.graph, in.truth.AsLabeling());
  }
  return in;
}

template <typename Fn>
auto WithReplicateContext(const std::string& algorithm, uint64_t seed,
                          Fn&& fn) {
  const auto context = [&](const std::string& what) {
    std::ostringstream msg;
    msg << "replicate (algorithm=" << algorithm << ", seed=" << seed
        << "): " << what;
    return msg.str();
  };
  try {
    return fn();
  } catch (const DataError& e) {
    throw DataError(context(e.what()));
  } catch (const SizeCapError& e) {
    throw SizeCapError(context(e.what()));
  } catch (const Error& e) {
    throw ParameterError(context(e.what()));
  }
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (!sbm && (edges_path.empty() || labels_path.empty()))
    throw ParameterError("experiment needs an SBM source or edge/label files");
  if (seeds.empty()) throw ParameterError("at least one seed is required");
  if (algorithms.empty())
    throw ParameterError("at least one algorithm is required");
  for (const std::string& name : algorithms)
    if (name != "active" && name != "random")
      throw ParameterError("unknown algorithm: " + name);
  if (grid.empty()) throw ParameterError("query grid is empty");
  for (size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0 || grid[i] > 1.0)
      throw ParameterError("grid fractions must lie in [0, 1]");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw ParameterError("grid fractions must be strictly increasing");
  }
  if (sbm) sbm->Validate();
}

std::vector<AccuracyCurve> RunExperiment(const ExperimentConfig& cfg) {
  cfg.Validate();

  // accuracies[(algorithm, pct)] -> one accuracy per seed, seed order.
  std::map<std::pair<std::string, double>, std::vector<double>> accuracies;

  for (uint64_t seed : cfg.seeds) {
    const ReplicateInput in = WithReplicateContext(
        "setup", seed, [&] { return BuildReplicate(cfg, seed); });
    const int n = in.graph.n();
    const int max_queries = GridQueries(cfg.grid.back(), n);
    if (max_queries > n)
      throw ParameterError("query grid exceeds the node count");

    ActiveConfig active_cfg = cfg.active;
    active_cfg.solver.seed = seed;

    for (const std::string& algorithm : cfg.algorithms) {
      if (algorithm == "active") {
        const ActiveRunResult run =
            WithReplicateContext(algorithm, seed, [&] {
              return ActiveLoop(in.graph, in.p, in.q, in.truth, max_queries,
                                active_cfg);
            });
        for (double pct : cfg.grid)
          accuracies[{algorithm, pct}].push_back(
              run.step_accuracy.at(GridQueries(pct, n)));
      } else {
        for (double pct : cfg.grid) {
          const ActiveRunResult run =
              WithReplicateContext(algorithm, seed, [&] {
                return RandomBaselineLoop(in.graph, in.p, in.q, in.truth,
                                          GridQueries(pct, n), seed,
                                          active_cfg);
              });
          accuracies[{algorithm, pct}].push_back(run.step_accuracy.front());
        }
      }
    }
  }

  std::vector<AccuracyCurve> curves;
  for (const std::string& algorithm : std::set<std::string>(
           cfg.algorithms.begin(), cfg.algorithms.end())) {
    AccuracyCurve curve{algorithm, {}};
    for (double pct : cfg.grid) {
      const std::vector<double>& values = accuracies.at({algorithm, pct});
      double mean = 0.0;
      for (double v : values) mean += v;
      mean /= values.size();
      double var = 0.0;
      for (double v : values) var += (v - mean) * (v - mean);
      var /= values.size();
      curve.points.push_back(
          {pct, mean, std::sqrt(var), static_cast<int>(values.size())});
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

std::string CurvesToCsv(const std::vector<AccuracyCurve>& curves) {
  if (curves.empty()) throw ParameterError("no curves to write");

  std::vector<const AccuracyCurve*> sorted;
  for (const AccuracyCurve& curve : curves) sorted.push_back(&curve);
  std::sort(sorted.begin(), sorted.end(),
            [](const AccuracyCurve* a, const AccuracyCurve* b) {
              return a->algorithm < b->algorithm;
            });

  std::string out = "algorithm,pct_queried,acc_mean,acc_std,n_replicates\n";
  char line[160];
  for (const AccuracyCurve* curve : sorted) {
    for (const CurvePoint& p : curve->points) {
      std::snprintf(line, sizeof(line), "%s,%.6f,%.6f,%.6f,%d\n",
                    curve->algorithm.c_str(), p.pct_queried, p.acc_mean,
                    p.acc_std, p.replicates);
      out += line;
    }
  }
  return out;
}

void WriteCsv(const std::vector<AccuracyCurve>& curves,
              const std::string& path) {
  const std::string csv = CurvesToCsv(curves);  // may throw before the open
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot write CSV: " + path);
  file << csv;
  if (!file) throw DataError("failed writing CSV: " + path);
}

}  // namespace sbmal
