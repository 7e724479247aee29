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

// Command line front end: `gen` samples SBM instances to edge-list files,
// `run` executes one replicate with a verbose query log, `bench` sweeps a
// query grid over seeds and writes an accuracy CSV.
//
// Exit codes: 0 success, 2 configuration error, 3 data error, 4 size cap
// exceeded.

#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sbmal/active_learning.h"
#include "sbmal/bench.h"
#include "sbmal/edge_list_io.h"
#include "sbmal/errors.h"

namespace {

struct CommonFlags {
  int n = 0;
  int r = 2;
  double a = -1.0, b = -1.0;
  double p = -1.0, q = -1.0;
  std::string edges, labels;
  uint64_t seed = 1;
  int rank = 0;
  int restarts = 5;
  double tol = 0.0;
  std::string mode = "rank1";
};

void AddSourceFlags(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--n", flags->n, "Node count for a sampled SBM graph");
  cmd->add_option("--r", flags->r, "Number of communities");
  cmd->add_option("--a", flags->a, "Sparse within parameter, p = a/n");
  cmd->add_option("--b", flags->b, "Sparse between parameter, q = b/n");
  cmd->add_option("--p", flags->p, "Within-community edge probability");
  cmd->add_option("--q", flags->q, "Between-community edge probability");
  cmd->add_option("--edges", flags->edges, "Edge-list file to ingest");
  cmd->add_option("--labels", flags->labels, "Label file to ingest");
}

void AddSolverFlags(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--rank", flags->rank,
                  "Factorization rank (0 = automatic)");
  cmd->add_option("--restarts", flags->restarts, "Solver restarts");
  cmd->add_option("--tol", flags->tol,
                  "Gradient norm tolerance (0 = automatic)");
  cmd->add_option("--mode", flags->mode,
                  "Expected-model-change mode: rank1 or exact")
      ->check(CLI::IsMember({"rank1", "exact"}));
}

sbmal::ActiveConfig MakeActiveConfig(const CommonFlags& flags) {
  sbmal::ActiveConfig cfg;
  cfg.solver.rank = flags.rank;
  cfg.solver.restarts = flags.restarts;
  cfg.solver.grad_tol = flags.tol;
  cfg.solver.seed = flags.seed;
  cfg.memc_mode = flags.mode == "exact" ? sbmal::MemcMode::kExact
                                        : sbmal::MemcMode::kRankOne;
  return cfg;
}

sbmal::SbmParams MakeSbmParams(const CommonFlags& flags) {
  if (flags.n <= 0)
    throw sbmal::ParameterError("--n is required when no --edges is given");
  if (flags.a >= 0.0 && flags.b >= 0.0)
    return sbmal::SbmParams::Sparse(flags.n, flags.r, flags.a, flags.b);
  if (flags.p >= 0.0 && flags.q >= 0.0)
    return sbmal::SbmParams::Dense(flags.n, flags.r, flags.p, flags.q);
  throw sbmal::ParameterError("need --a/--b or --p/--q for an SBM source");
}

template <typename T>
std::vector<T> ParseCommaList(const std::string& text,
                              const std::string& what) {
  std::vector<T> out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    std::istringstream item(token);
    T value;
    if (!(item >> value) || !item.eof())
      throw sbmal::ParameterError("cannot parse " + what + ": '" + token +
                                  "'");
    out.push_back(value);
  }
  if (out.empty()) throw sbmal::ParameterError(what + " list is empty");
  return out;
}

int RunGen(const CommonFlags& flags) {
  if (flags.edges.empty() || flags.labels.empty())
    throw sbmal::ParameterError("gen needs --edges and --labels output paths");
  const sbmal::SbmParams params = MakeSbmParams(flags);
  const auto [graph, truth] = sbmal::SampleSbm(params, flags.seed);
  sbmal::WriteEdgeList(graph, flags.edges);
  sbmal::WriteLabels(truth, flags.labels);
  std::cout << "sampled SBM(n=" << params.n << ", r=" << params.r
            << ", p=" << params.p << ", q=" << params.q << ") seed "
            << flags.seed << ": " << graph.edge_count() << " edges\n"
            << "wrote " << flags.edges << " and " << flags.labels
            << std::endl;
  return 0;
}

int RunSingle(const CommonFlags& flags, int queries,
              const std::string& algorithm) {
  sbmal::ActiveConfig cfg = MakeActiveConfig(flags);

  sbmal::Graph graph(0, {});
  sbmal::GroundTruth truth;
  double p = 0.0, q = 0.0;
  if (!flags.edges.empty()) {
    sbmal::EdgeListData data =
        sbmal::ReadEdgeList(flags.edges, flags.labels, flags.r);
    graph = std::move(data.graph);
    truth = std::move(data.truth);
    if (flags.p >= 0.0 && flags.q >= 0.0) {
      p = flags.p;
      q = flags.q;
    } else {
      std::tie(p, q) = sbmal::EstimateParams(graph, truth.AsLabeling());
      std::cout << "estimated p=" << p << " q=" << q
                << " from the annotated labels\n";
    }
  } else {
    const sbmal::SbmParams params = MakeSbmParams(flags);
    auto sampled = sbmal::SampleSbm(params, flags.seed);
    graph = std::move(sampled.first);
    truth = std::move(sampled.second);
    p = params.p;
    q = params.q;
  }

  const sbmal::ActiveRunResult run =
      algorithm == "random"
          ? sbmal::RandomBaselineLoop(graph, p, q, truth, queries, flags.seed,
                                      cfg)
          : sbmal::ActiveLoop(graph, p, q, truth, queries, cfg);

  std::set<int> queried;
  for (const sbmal::QueryRecord& rec : run.log) {
    queried.insert(rec.node);
    std::printf("query %3d: node=%-6d rule=%-6s revealed=%d score=%.6f\n",
                rec.step, rec.node, sbmal::SelectionRuleName(rec.rule),
                rec.revealed, rec.score);
  }
  const double accuracy = sbmal::Accuracy(run.labels, truth, queried);
  std::printf("accuracy on %d unqueried nodes: %.6f\n",
              graph.n() - static_cast<int>(queried.size()), accuracy);
  return 0;
}

int RunBench(const CommonFlags& flags, const std::string& seeds_text,
             const std::string& grid_text, const std::string& algos_text,
             const std::string& out_path) {
  if (out_path.empty()) throw sbmal::ParameterError("bench needs --out");

  sbmal::ExperimentConfig cfg;
  if (flags.edges.empty()) {
    cfg.sbm = MakeSbmParams(flags);
  } else {
    cfg.edges_path = flags.edges;
    cfg.labels_path = flags.labels;
    if (flags.p >= 0.0 && flags.q >= 0.0)
      cfg.given_pq = std::make_pair(flags.p, flags.q);
  }
  cfg.r = flags.r;
  cfg.seeds = ParseCommaList<uint64_t>(seeds_text, "seed");
  cfg.grid = ParseCommaList<double>(grid_text, "grid fraction");
  cfg.algorithms = ParseCommaList<std::string>(algos_text, "algorithm");
  cfg.active = MakeActiveConfig(flags);
  cfg.out_path = out_path;

  const std::vector<sbmal::AccuracyCurve> curves = sbmal::RunExperiment(cfg);
  sbmal::WriteCsv(curves, out_path);

  for (const sbmal::AccuracyCurve& curve : curves) {
    std::cout << curve.algorithm << ":";
    for (const sbmal::CurvePoint& pt : curve.points)
      std::printf(" %.0f%%=%.3f±%.3f", 100.0 * pt.pct_queried, pt.acc_mean,
                  pt.acc_std);
    std::cout << "\n";
  }
  std::cout << "wrote " << out_path << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-supervised and active community detection on SBM graphs"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "INI file with [gen]/[run]/[bench] sections, read before "
                 "flags (flags win); place --config before the subcommand");

  CommonFlags gen_flags, run_flags, bench_flags;
  int queries = 10;
  std::string run_algorithms = "active";
  std::string seeds_text = "1";
  std::string grid_text = "0,0.05,0.1";
  std::string bench_algorithms = "active,random";
  std::string out_path;

  CLI::App* gen = app.add_subcommand(
      "gen", "Sample an SBM graph into edge-list and label files");
  AddSourceFlags(gen, &gen_flags);
  gen->add_option("--seed", gen_flags.seed, "Sampling seed");

  CLI::App* run = app.add_subcommand(
      "run", "Run one replicate and print its query log");
  AddSourceFlags(run, &run_flags);
  AddSolverFlags(run, &run_flags);
  run->add_option("--seed", run_flags.seed, "Sampling and solver seed");
  run->add_option("--queries", queries, "Query budget");
  run->add_option("--algorithms", run_algorithms,
                  "Algorithm for this replicate: active or random")
      ->check(CLI::IsMember({"active", "random"}));

  CLI::App* bench = app.add_subcommand(
      "bench", "Sweep a query grid over seeds and write an accuracy CSV");
  AddSourceFlags(bench, &bench_flags);
  AddSolverFlags(bench, &bench_flags);
  bench->add_option("--seeds", seeds_text, "Comma-separated replicate seeds");
  bench->add_option("--grid", grid_text,
                    "Comma-separated fractions of nodes to query");
  bench->add_option("--algorithms", bench_algorithms,
                    "Comma-separated algorithms: active,random");
  bench->add_option("--out", out_path, "Output CSV path");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return RunGen(gen_flags);
    if (run->parsed()) return RunSingle(run_flags, queries, run_algorithms);
    return RunBench(bench_flags, seeds_text, grid_text, bench_algorithms,
                    out_path);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const sbmal::SizeCapError& e) {
    std::cerr << "sbmal: " << e.what() << std::endl;
    return 4;
  } catch (const sbmal::DataError& e) {
    std::cerr << "sbmal: " << e.what() << std::endl;
    return 3;
  } catch (const sbmal::Error& e) {
    std::cerr << "sbmal: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "sbmal: internal error: " << e.what() << std::endl;
    return 1;
  }
}
