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

#include <optional>
#include <string>
#include <vector>

#include "sbmal/active_learning.h"
#include "sbmal/graph.h"

namespace sbmal {

// One experiment: a graph source, a query-percentage grid, the algorithms
// to compare and the solver settings, replicated over seeds.
struct ExperimentConfig {
  // Graph source: synthetic SBM or an ingested edge list (labels required).
  std::optional<SbmParams> sbm;
  std::string edges_path;
  std::string labels_path;
  int r = 2;

  std::vector<uint64_t> seeds;
  std::vector<double> grid;  // fractions of n queried, strictly increasing
  std::vector<std::string> algorithms;  // subset of {"active", "random"}

  ActiveConfig active;

  // Edge probabilities: taken from the SBM parameters, overridden by
  // given_pq, or estimated from the full ground-truth labeling when
  // estimate_pq is set (the default for ingested graphs without a given
  // pair).
  std::optional<std::pair<double, double>> given_pq;
  bool estimate_pq = false;

  std::string out_path;

  void Validate() const;
};

struct CurvePoint {
  double pct_queried = 0.0;
  double acc_mean = 0.0;
  double acc_std = 0.0;
  int replicates = 0;
};

struct AccuracyCurve {
  std::string algorithm;
  std::vector<CurvePoint> points;  // pct strictly increasing
};

// Runs every seed x algorithm replicate, records accuracy at each grid
// point, and aggregates mean/std per (algorithm, pct). Deterministic given
// the seed list. Errors are rethrown with the replicate identified.
std::vector<AccuracyCurve> RunExperiment(const ExperimentConfig& cfg);

// CSV with header algorithm,pct_queried,acc_mean,acc_std,n_replicates,
// rows sorted by (algorithm, pct), 6 decimal places, LF line endings.
std::string CurvesToCsv(const std::vector<AccuracyCurve>& curves);
void WriteCsv(const std::vector<AccuracyCurve>& curves,
              const std::string& path);

}  // namespace sbmal
