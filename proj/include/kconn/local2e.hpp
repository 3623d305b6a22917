// Copyright 2026 The kconn Authors
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

#ifndef KCONN_LOCAL2E_HPP_
#define KCONN_LOCAL2E_HPP_

#include <span>
#include <vector>

#include "kconn/components.hpp"
#include "kconn/connectivity.hpp"
#include "kconn/graph.hpp"
#include "kconn/hierarchical.hpp"

namespace kconn {

// Vertices with a path of at most d edges to j (kForward), or from j
// (kReverse).
std::vector<Vertex> bounded_reverse_bfs(const Graph& g, Vertex j, int d,
                                        Direction direction,
                                        WorkCounters* counters = nullptr);

enum class LocalBranch { kNone, kTscc, kBridge, kDominator };
const char* to_string(LocalBranch branch);

struct LocalSearchResult {
  std::vector<Vertex> s;  // sorted; empty if nothing was found
  EdgeId z = kNoEdge;     // the bridge or dominator edge, if any
  LocalBranch branch = LocalBranch::kNone;
  Direction side = Direction::kForward;
  Vertex j = kNoVertex;
  int isolated_balls = 0;  // balls that were a whole SCC without a bridge
};

// Requires max in- and out-degree at most three.
LocalSearchResult two_isolated_set_local_detailed(
    const Graph& g, std::span<const Vertex> j_set, int d,
    WorkCounters* counters = nullptr);
std::vector<Vertex> two_isolated_set_local(const Graph& g,
                                           std::span<const Vertex> j_set,
                                           int d,
                                           WorkCounters* counters = nullptr);

struct SparseOptions {
  double epsilon = 0.5;
  TraceSink trace;
};

struct SparseStats {
  WorkCounters counters;
  int expanded_n = 0;
  int q = 0;
  int d = 0;
  int outer_iterations = 0;
  int local_calls = 0;
  int branch_tscc = 0;
  int branch_bridge = 0;
  int branch_dominator = 0;
};

// 2-edge strongly connected components via the degree transform, repeated
// bridge removal and depth-bounded local searches.
ComponentSet two_escc_sparse(const Graph& g, const SparseOptions& options = {},
                             SparseStats* stats = nullptr);

}  // namespace kconn

#endif  // KCONN_LOCAL2E_HPP_
