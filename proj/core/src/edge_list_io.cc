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

#include "sbmal/edge_list_io.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "sbmal/errors.h"

namespace sbmal {

namespace {

bool IsBlankOrComment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void ParseFail(const std::string& path, int line_no,
                            const std::string& what) {
  std::ostringstream msg;
  msg << path << ":" << line_no << ": " << what;
  throw DataError(msg.str());
}

long ParseLong(const std::string& token, const std::string& path,
               int line_no) {
  size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(token, &pos);
  } catch (const std::exception&) {
    ParseFail(path, line_no, "expected an integer, got '" + token + "'");
  }
  if (pos != token.size())
    ParseFail(path, line_no, "trailing characters after integer '" + token +
                                 "'");
  return value;
}

}  // namespace

EdgeListData ReadEdgeList(const std::string& edges_path,
                          const std::string& labels_path, int expected_r) {
  std::ifstream edges_file(edges_path);
  if (!edges_file) throw DataError("cannot open edge list: " + edges_path);

  int n = -1;
  int line_no = 0;
  int dropped_self = 0, dropped_dup = 0;
  std::set<std::pair<int, int>> edge_set;
  std::string line;
  while (std::getline(edges_file, line)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    std::istringstream tokens(line);
    std::string first, second, extra;
    tokens >> first;
    if (n < 0) {
      // Header: node count.
      if (tokens >> extra)
        ParseFail(edges_path, line_no, "expected a single node count");
      const long count = ParseLong(first, edges_path, line_no);
      if (count < 0) ParseFail(edges_path, line_no, "negative node count");
      n = static_cast<int>(count);
      continue;
    }
    if (!(tokens >> second))
      ParseFail(edges_path, line_no, "expected two node ids");
    if (tokens >> extra)
      ParseFail(edges_path, line_no, "expected exactly two node ids");
    const long u = ParseLong(first, edges_path, line_no);
    const long v = ParseLong(second, edges_path, line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      ParseFail(edges_path, line_no, "node id out of range [0, n)");
    if (u == v) {
      ++dropped_self;
      continue;
    }
    const int lo = static_cast<int>(std::min(u, v));
    const int hi = static_cast<int>(std::max(u, v));
    if (!edge_set.insert({lo, hi}).second) ++dropped_dup;
  }
  if (n < 0) throw DataError(edges_path + ": missing node count header");
  if (dropped_self + dropped_dup > 0) {
    std::cerr << "sbmal: warning: " << edges_path << ": dropped "
              << dropped_self << " self-loop(s) and " << dropped_dup
              << " duplicate edge(s)" << std::endl;
  }

  std::ifstream labels_file(labels_path);
  if (!labels_file) throw DataError("cannot open label file: " + labels_path);

  std::vector<int> labels(static_cast<size_t>(n), -1);
  int max_label = -1;
  line_no = 0;
  while (std::getline(labels_file, line)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      ParseFail(labels_path, line_no, "expected 'node,label'");
    const long node = ParseLong(line.substr(0, comma), labels_path, line_no);
    const long label = ParseLong(line.substr(comma + 1), labels_path, line_no);
    if (node < 0 || node >= n)
      ParseFail(labels_path, line_no, "node id out of range [0, n)");
    if (label < 0) ParseFail(labels_path, line_no, "negative label");
    if (expected_r > 0 && label >= expected_r)
      ParseFail(labels_path, line_no, "label index exceeds community count");
    if (labels[node] != -1)
      ParseFail(labels_path, line_no, "duplicate label for node");
    labels[node] = static_cast<int>(label);
    max_label = std::max(max_label, static_cast<int>(label));
  }
  for (int i = 0; i < n; ++i) {
    if (labels[i] == -1)
      throw DataError(labels_path + ": node " + std::to_string(i) +
                      " has no label");
  }

  GroundTruth truth;
  truth.labels = std::move(labels);
  truth.r = expected_r > 0 ? expected_r : std::max(max_label + 1, 2);

  std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
  return EdgeListData{Graph(n, std::move(edges)), std::move(truth),
                      dropped_self, dropped_dup};
}

void WriteEdgeList(const Graph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write edge list: " + path);
  out << graph.n() << "\n";
  for (auto [u, v] : graph.edges()) out << u << " " << v << "\n";
  if (!out) throw DataError("failed writing edge list: " + path);
}

void WriteLabels(const GroundTruth& truth, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write label file: " + path);
  for (int i = 0; i < truth.n(); ++i) out << i << "," << truth.labels[i]
                                          << "\n";
  if (!out) throw DataError("failed writing label file: " + path);
}

}  // namespace sbmal
