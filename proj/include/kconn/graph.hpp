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

#ifndef KCONN_GRAPH_HPP_
#define KCONN_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kconn {

using Vertex = int;
using EdgeId = int;

inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

struct Edge {
  Vertex tail = kNoVertex;
  Vertex head = kNoVertex;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Mode { kEdge, kVertex };

struct Subgraph;
enum class Direction { kForward, kReverse };

const char* to_string(Mode mode);
const char* to_string(Direction direction);

// Rejected input: self-loop, duplicate edge or out-of-range endpoint.
class GraphError : public std::invalid_argument {
 public:
  GraphError(const std::string& what, Edge offending)
      : std::invalid_argument(what), offending_(offending) {}
  Edge offending() const { return offending_; }

 private:
  Edge offending_;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an algorithm detects an inconsistency in its own state.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Directed graph with ordered in/out adjacency and tombstoned edge removal.
//
// Edges keep their id for the lifetime of the graph. Removing an edge only
// marks it dead; adjacency entries of dead edges (or of edges whose endpoint
// was moved to another vertex) are obsolete and are skipped by iteration and
// physically dropped whenever a prefix scan encounters them. The relative
// order of the surviving entries never changes.
class Graph {
 public:
  explicit Graph(int num_vertices = 0, bool allow_parallel = false);

  // Builds a simple graph; insertion order fixes the in/out orderings.
  static Graph from_edges(int num_vertices, std::span<const Edge> edges);

  Vertex add_vertex();
  // Checked insertion: rejects self-loops always and duplicates unless the
  // graph allows parallel edges.
  EdgeId add_edge(Vertex tail, Vertex head);
  // Caller guarantees the edge is legal for this graph.
  EdgeId add_edge_unchecked(Vertex tail, Vertex head);
  void remove_edge(EdgeId e);

  // Moves one endpoint of a live edge to another vertex. The edge is appended
  // to the new endpoint's list; the old entry becomes obsolete.
  void move_tail(EdgeId e, Vertex new_tail);
  void move_head(EdgeId e, Vertex new_head);

  int num_vertices() const { return static_cast<int>(out_.size()); }
  int num_edges() const { return live_edges_; }
  int edge_slots() const { return static_cast<int>(edges_.size()); }
  bool allows_parallel() const { return allow_parallel_; }

  bool is_alive(EdgeId e) const { return alive_[e] != 0; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  bool has_edge(Vertex tail, Vertex head) const;

  int in_degree(Vertex v) const { return in_degree_[v]; }
  int out_degree(Vertex v) const { return out_degree_[v]; }
  int degree(Vertex v, Direction incoming_side) const {
    return incoming_side == Direction::kForward ? in_degree_[v]
                                                : out_degree_[v];
  }

  template <class F>
  void for_each_out_edge(Vertex v, F&& f) const {
    const auto& list = out_[v];
    for (std::size_t i = out_start_[v]; i < list.size(); ++i) {
      const EdgeId e = list[i];
      if (alive_[e] && edges_[e].tail == v) f(e);
    }
  }

  template <class F>
  void for_each_in_edge(Vertex v, F&& f) const {
    const auto& list = in_[v];
    for (std::size_t i = in_start_[v]; i < list.size(); ++i) {
      const EdgeId e = list[i];
      if (alive_[e] && edges_[e].head == v) f(e);
    }
  }

  std::vector<EdgeId> out_edges(Vertex v) const;
  std::vector<EdgeId> in_edges(Vertex v) const;

  // Appends the first `limit` valid entries of v's in-list (out-list for
  // kReverse) to `dst` and purges the obsolete entries met on the way.
  // Returns the number of raw entries scanned.
  std::int64_t take_prefix(Vertex v, Direction incoming_side, int limit,
                           std::vector<EdgeId>& dst) const;

  // Drops every obsolete entry of v's lists.
  void compact(Vertex v) const;

  // Live edges in id order.
  std::vector<Edge> edge_list() const;
  std::vector<EdgeId> live_edge_ids() const;

  int max_in_degree() const;
  int max_out_degree() const;

  friend Graph reverse(const Graph& g);
  friend Subgraph induced_subgraph(const Graph& g,
                                   std::span<const Vertex> vertices);

 private:
  // Replaces the in-lists wholesale; each list must hold exactly the live
  // in-edges of its vertex.
  void set_in_lists(std::vector<std::vector<EdgeId>> lists);

  bool valid_out(Vertex v, EdgeId e) const {
    return alive_[e] && edges_[e].tail == v;
  }
  bool valid_in(Vertex v, EdgeId e) const {
    return alive_[e] && edges_[e].head == v;
  }
  void check_vertex(Vertex v, Edge context) const;

  bool allow_parallel_ = false;
  int live_edges_ = 0;
  std::vector<Edge> edges_;
  std::vector<char> alive_;
  std::vector<int> in_degree_;
  std::vector<int> out_degree_;
  // Physical compaction does not change the observable graph, so the lists
  // are mutable and purged from const scans.
  mutable std::vector<std::vector<EdgeId>> out_;
  mutable std::vector<std::vector<EdgeId>> in_;
  mutable std::vector<std::size_t> out_start_;
  mutable std::vector<std::size_t> in_start_;
};

// Edge (u,v) of g becomes (v,u) with the same id; in/out orderings swap.
Graph reverse(const Graph& g);

// Subgraph re-indexed to 0..|vertices|-1 in the given order.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;         // new vertex -> parent vertex
  std::vector<EdgeId> edge_to_parent;    // new edge -> parent edge
};

// Induced subgraph on `vertices` (duplicates not allowed). Relative in- and
// out-orderings of the parent are preserved.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Copy of g with the given edges removed (ids are preserved).
Graph without_edges(const Graph& g, std::span<const EdgeId> edges);
// Copy of g with every edge incident to the given vertices removed. The
// vertices themselves stay as isolated vertices so ids are preserved.
Graph without_vertices(const Graph& g, std::span<const Vertex> vertices);

// min(max in-degree, max out-degree).
int degree_bound(const Graph& g);

// Level subgraph G_i: every vertex keeps its first 2^level incoming edges in
// the chosen direction. Built over `part` (all vertices when empty), with
// vertices re-indexed in part order.
struct LevelSubgraph {
  int level = 0;
  Direction direction = Direction::kForward;
  // Local graph in the chosen direction (edges of the reverse graph for
  // kReverse).
  Graph graph;
  std::vector<Vertex> to_base;          // local vertex -> base vertex
  std::vector<EdgeId> edge_to_base;     // local edge -> base edge
  std::vector<char> blue;               // local vertex -> in-degree > 2^level
  std::vector<Vertex> blue_list;        // local ids, increasing
  std::int64_t entries_scanned = 0;
};

LevelSubgraph level_subgraph(const Graph& g, int level, Direction direction);
LevelSubgraph level_subgraph(const Graph& g, std::span<const Vertex> part,
                             int level, Direction direction);

// Rooted flow graph derived from a level subgraph (or any subgraph with a blue
// set).
enum class RootKind { kArtificial, kContracted, kBlueMember, kPlain };
const char* to_string(RootKind kind);

struct RootedFlowGraph {
  Graph graph;
  Vertex root = kNoVertex;
  RootKind kind = RootKind::kPlain;
  // Flow-graph vertex -> source vertex; kNoVertex for an artificial or
  // contracted root.
  std::vector<Vertex> to_source;
  // Flow-graph edge -> source edge; kNoEdge for added root edges.
  std::vector<EdgeId> edge_to_source;
  std::vector<Vertex> origin_blue;  // source ids
};

RootedFlowGraph plain_flow_graph(const Graph& g, Vertex root);

// Contracts the blue vertices of g into a single root, keeping parallel edges
// between the root and the white vertices and dropping blue-internal edges.
RootedFlowGraph contract_blue(const Graph& g, std::span<const char> blue);

std::vector<RootedFlowGraph> make_flow_graphs(const LevelSubgraph& ls, int k,
                                              Mode mode);

struct VertexMapping {
  std::vector<std::vector<Vertex>> forward;  // original -> expanded
  std::vector<Vertex> backward;              // expanded -> original
};

struct ExpandedGraph {
  Graph graph;
  VertexMapping mapping;
};

// Replaces every vertex of max(in,out)-degree d > 3 by d vertices joined by
// two directed cycles; the result has in- and out-degree at most three and
// the same 2-edge strongly connected components.
ExpandedGraph constant_degree_transform(const Graph& g);

}  // namespace kconn

#endif  // KCONN_GRAPH_HPP_
