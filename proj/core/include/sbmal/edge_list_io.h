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

#include <string>

#include "sbmal/graph.h"

namespace sbmal {

// Result of ingesting an edge-list + label file pair. Self-loops and
// duplicate edges are dropped rather than rejected; the counts let callers
// surface a warning.
struct EdgeListData {
  Graph graph;
  GroundTruth truth;
  int dropped_self_loops = 0;
  int dropped_duplicates = 0;
};

// Reads a graph and its node labels.
//
// Edge-list file: first line is the node count n, then one edge per line as
// two whitespace-separated 0-based node ids. Label file: CSV lines
// "node,label" with 0-based labels, one line per node. Lines starting with
// '#' are ignored in both files.
//
// Malformed lines raise DataError with the offending line number. Every
// node must be labeled; when expected_r > 0, labels >= expected_r raise
// DataError, otherwise r is inferred as max label + 1.
EdgeListData ReadEdgeList(const std::string& edges_path,
                          const std::string& labels_path, int expected_r = 0);

// Writers for the same formats (used by the `gen` subcommand). Output is
// deterministic: edges canonical (u < v), sorted; labels by node id.
void WriteEdgeList(const Graph& graph, const std::string& path);
void WriteLabels(const GroundTruth& truth, const std::string& path);

}  // namespace sbmal
