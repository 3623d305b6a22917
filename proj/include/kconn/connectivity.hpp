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

#ifndef KCONN_CONNECTIVITY_HPP_
#define KCONN_CONNECTIVITY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kconn/graph.hpp"

namespace kconn {

// Work counters shared by the primitives and the drivers.
struct WorkCounters {
  std::int64_t level_edge_scans = 0;
  std::int64_t flow_augmentations = 0;
  std::int64_t bfs_ball_edges = 0;

  WorkCounters& operator+=(const WorkCounters& o) {
    level_edge_scans += o.level_edge_scans;
    flow_augmentations += o.flow_augmentations;
    bfs_ball_edges += o.bfs_ball_edges;
    return *this;
  }
};

struct SccPartition {
  std::vector<int> comp_of;
  std::vector<std::vector<Vertex>> components;  // ordered by smallest member
  std::vector<char> is_top;
  std::vector<char> is_bottom;

  int count() const { return static_cast<int>(components.size()); }
};

SccPartition scc(const Graph& g);
bool is_strongly_connected(const Graph& g);

// Top SCC disjoint from the excluded vertices (mask indexed by vertex), the
// one with the smallest member among the candidates; empty if none.
std::vector<Vertex> top_scc_excluding(const Graph& g,
                                      std::span<const char> excluded);
std::vector<Vertex> top_scc_excluding(const Graph& g,
                                      const std::vector<Vertex>& excluded);

// Immediate dominators of the vertices reachable from root; kNoVertex for the
// root and for unreachable vertices.
std::vector<Vertex> immediate_dominators(const Graph& g, Vertex root);

struct DominatorWitness {
  Vertex dominator;
  Vertex witness;  // smallest vertex it immediately dominates

  friend bool operator==(const DominatorWitness&,
                         const DominatorWitness&) = default;
};

// Non-root vertices that dominate another reachable vertex, by increasing id.
std::vector<DominatorWitness> dominator_vertices(const RootedFlowGraph& fg);

// Edge ids of fg.graph that some reachable vertex can only be reached
// through, sorted by (tail, head, id).
std::vector<EdgeId> dominating_edges(const RootedFlowGraph& fg);
// Smallest dominating edge, if any.
std::optional<EdgeId> edge_dominator(const RootedFlowGraph& fg);

std::vector<Vertex> strong_articulation_points(const Graph& g);
std::vector<EdgeId> strong_bridges(const Graph& g);

enum class SeparatorRole { kSeparator, kDominator, kIsolating };
const char* to_string(SeparatorRole role);

struct Separator {
  Mode mode = Mode::kEdge;
  SeparatorRole role = SeparatorRole::kSeparator;
  std::vector<Vertex> vertices;  // vertex mode, sorted
  std::vector<EdgeId> edges;     // edge mode, sorted by (tail, head)

  int size() const {
    return static_cast<int>(mode == Mode::kEdge ? edges.size()
                                                : vertices.size());
  }
};

// Minimum s->t cut if the s->t connectivity is below k. Vertex mode returns
// none for adjacent pairs.
std::optional<Separator> bounded_min_separator(const Graph& g, Vertex s,
                                               Vertex t, int k, Mode mode,
                                               WorkCounters* counters = nullptr);

// s->t connectivity (edge-disjoint or internally vertex-disjoint paths),
// capped at `limit`. Vertex mode requires s and t non-adjacent.
int bounded_connectivity(const Graph& g, Vertex s, Vertex t, int limit,
                         Mode mode, WorkCounters* counters = nullptr);

// A set of fewer than k elements whose removal increases the number of SCCs.
// The returned set has minimum size, hence is minimal. Requires g strongly
// connected.
std::optional<Separator> k_separator(const Graph& g, int k, Mode mode,
                                     WorkCounters* counters = nullptr);

// A minimum-size set of fewer than k elements (never the root) through which
// some reachable vertex must be reached from the root. Edges are fg.graph ids.
std::optional<Separator> k_dominator(const RootedFlowGraph& fg, int k,
                                     Mode mode,
                                     WorkCounters* counters = nullptr);

// Vertices reachable from `from` (forward along out-edges).
std::vector<char> reachable_from(const Graph& g, Vertex from);

}  // namespace kconn

#endif  // KCONN_CONNECTIVITY_HPP_
