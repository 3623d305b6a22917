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

#include "kconn/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace kconn {

const char* to_string(Mode mode) {
  return mode == Mode::kEdge ? "edge" : "vertex";
}

const char* to_string(Direction direction) {
  return direction == Direction::kForward ? "forward" : "reverse";
}

namespace {

std::string describe(const char* what, Edge e) {
  std::ostringstream os;
  os << what << " (" << e.tail << ", " << e.head << ")";
  return os.str();
}

}  // namespace

Graph::Graph(int num_vertices, bool allow_parallel)
    : allow_parallel_(allow_parallel),
      in_degree_(num_vertices, 0),
      out_degree_(num_vertices, 0),
      out_(num_vertices),
      in_(num_vertices),
      out_start_(num_vertices, 0),
      in_start_(num_vertices, 0) {
  if (num_vertices < 0) throw PreconditionError("negative vertex count");
}

Graph Graph::from_edges(int num_vertices, std::span<const Edge> edges) {
  Graph g(num_vertices);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    g.check_vertex(e.tail, e);
    g.check_vertex(e.head, e);
    if (e.tail == e.head) throw GraphError(describe("self-loop", e), e);
    const auto key = (static_cast<std::uint64_t>(e.tail) << 32) |
                     static_cast<std::uint32_t>(e.head);
    if (!seen.insert(key).second) {
      throw GraphError(describe("duplicate edge", e), e);
    }
    g.add_edge_unchecked(e.tail, e.head);
  }
  return g;
}

void Graph::check_vertex(Vertex v, Edge context) const {
  if (v < 0 || v >= num_vertices()) {
    throw GraphError(describe("endpoint out of range in edge", context),
                     context);
  }
}

Vertex Graph::add_vertex() {
  out_.emplace_back();
  in_.emplace_back();
  out_start_.push_back(0);
  in_start_.push_back(0);
  in_degree_.push_back(0);
  out_degree_.push_back(0);
  return num_vertices() - 1;
}

EdgeId Graph::add_edge(Vertex tail, Vertex head) {
  const Edge e{tail, head};
  check_vertex(tail, e);
  check_vertex(head, e);
  if (tail == head) throw GraphError(describe("self-loop", e), e);
  if (!allow_parallel_ && has_edge(tail, head)) {
    throw GraphError(describe("duplicate edge", e), e);
  }
  return add_edge_unchecked(tail, head);
}

EdgeId Graph::add_edge_unchecked(Vertex tail, Vertex head) {
  const EdgeId id = edge_slots();
  edges_.push_back({tail, head});
  alive_.push_back(1);
  out_[tail].push_back(id);
  in_[head].push_back(id);
  ++out_degree_[tail];
  ++in_degree_[head];
  ++live_edges_;
  return id;
}

void Graph::remove_edge(EdgeId e) {
  if (!alive_[e]) return;
  alive_[e] = 0;
  --out_degree_[edges_[e].tail];
  --in_degree_[edges_[e].head];
  --live_edges_;
}

void Graph::move_tail(EdgeId e, Vertex new_tail) {
  if (!alive_[e]) throw InternalError("move_tail on a removed edge");
  --out_degree_[edges_[e].tail];
  edges_[e].tail = new_tail;
  out_[new_tail].push_back(e);
  ++out_degree_[new_tail];
}

void Graph::move_head(EdgeId e, Vertex new_head) {
  if (!alive_[e]) throw InternalError("move_head on a removed edge");
  --in_degree_[edges_[e].head];
  edges_[e].head = new_head;
  in_[new_head].push_back(e);
  ++in_degree_[new_head];
}

bool Graph::has_edge(Vertex tail, Vertex head) const {
  bool found = false;
  if (out_degree_[tail] <= in_degree_[head]) {
    for_each_out_edge(tail, [&](EdgeId e) { found |= edges_[e].head == head; });
  } else {
    for_each_in_edge(head, [&](EdgeId e) { found |= edges_[e].tail == tail; });
  }
  return found;
}

std::vector<EdgeId> Graph::out_edges(Vertex v) const {
  std::vector<EdgeId> result;
  result.reserve(out_degree_[v]);
  for_each_out_edge(v, [&](EdgeId e) { result.push_back(e); });
  return result;
}

std::vector<EdgeId> Graph::in_edges(Vertex v) const {
  std::vector<EdgeId> result;
  result.reserve(in_degree_[v]);
  for_each_in_edge(v, [&](EdgeId e) { result.push_back(e); });
  return result;
}

std::int64_t Graph::take_prefix(Vertex v, Direction incoming_side, int limit,
                                std::vector<EdgeId>& dst) const {
  const bool forward = incoming_side == Direction::kForward;
  auto& list = forward ? in_[v] : out_[v];
  auto& start = forward ? in_start_[v] : out_start_[v];
  const std::size_t original_start = start;
  std::size_t read = start;
  int taken = 0;
  bool saw_obsolete = false;
  const std::size_t first_new = dst.size();
  while (read < list.size() && taken < limit) {
    const EdgeId e = list[read++];
    if (forward ? valid_in(v, e) : valid_out(v, e)) {
      dst.push_back(e);
      ++taken;
    } else {
      saw_obsolete = true;
    }
  }
  if (saw_obsolete) {
    // Slide the survivors of the scanned prefix to its end; the purged slots
    // are cut off by advancing the start offset.
    std::size_t write = read;
    for (std::size_t i = dst.size(); i > first_new; --i) {
      list[--write] = dst[i - 1];
    }
    start = write;
  }
  return static_cast<std::int64_t>(read - original_start);
}

void Graph::compact(Vertex v) const {
  auto squeeze = [](std::vector<EdgeId>& list, std::size_t& start,
                    auto&& valid) {
    std::size_t write = 0;
    for (std::size_t i = start; i < list.size(); ++i) {
      if (valid(list[i])) list[write++] = list[i];
    }
    list.resize(write);
    start = 0;
  };
  squeeze(out_[v], out_start_[v], [&](EdgeId e) { return valid_out(v, e); });
  squeeze(in_[v], in_start_[v], [&](EdgeId e) { return valid_in(v, e); });
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> result;
  result.reserve(live_edges_);
  for (EdgeId e = 0; e < edge_slots(); ++e) {
    if (alive_[e]) result.push_back(edges_[e]);
  }
  return result;
}

std::vector<EdgeId> Graph::live_edge_ids() const {
  std::vector<EdgeId> result;
  result.reserve(live_edges_);
  for (EdgeId e = 0; e < edge_slots(); ++e) {
    if (alive_[e]) result.push_back(e);
  }
  return result;
}

int Graph::max_in_degree() const {
  return in_degree_.empty()
             ? 0
             : *std::max_element(in_degree_.begin(), in_degree_.end());
}

int Graph::max_out_degree() const {
  return out_degree_.empty()
             ? 0
             : *std::max_element(out_degree_.begin(), out_degree_.end());
}

void Graph::set_in_lists(std::vector<std::vector<EdgeId>> lists) {
  in_ = std::move(lists);
  std::fill(in_start_.begin(), in_start_.end(), 0);
}

Graph reverse(const Graph& g) {
  Graph r;
  r.allow_parallel_ = g.allow_parallel_;
  r.live_edges_ = g.live_edges_;
  r.edges_.reserve(g.edges_.size());
  for (const Edge& e : g.edges_) r.edges_.push_back({e.head, e.tail});
  r.alive_ = g.alive_;
  r.in_degree_ = g.out_degree_;
  r.out_degree_ = g.in_degree_;
  r.out_ = g.in_;
  r.in_ = g.out_;
  r.out_start_ = g.in_start_;
  r.in_start_ = g.out_start_;
  return r;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  const int n = static_cast<int>(vertices.size());
  Subgraph sub{Graph(n, g.allows_parallel()), {vertices.begin(), vertices.end()},
               {}};
  std::vector<int> local(g.num_vertices(), -1);
  for (int i = 0; i < n; ++i) {
    if (local[vertices[i]] != -1) {
      throw PreconditionError("induced_subgraph: repeated vertex");
    }
    local[vertices[i]] = i;
  }
  // Rank of every parent edge inside its head's in-list, used to restore the
  // parent in-ordering after the edges were added in out-list order.
  std::vector<int> in_rank(g.edge_slots(), 0);
  for (Vertex v : vertices) {
    int rank = 0;
    g.for_each_in_edge(v, [&](EdgeId e) { in_rank[e] = rank++; });
  }
  for (int i = 0; i < n; ++i) {
    g.for_each_out_edge(vertices[i], [&](EdgeId e) {
      const Vertex h = local[g.edge(e).head];
      if (h == -1) return;
      sub.graph.add_edge_unchecked(i, h);
      sub.edge_to_parent.push_back(e);
    });
  }
  std::vector<std::vector<EdgeId>> in_lists(n);
  for (EdgeId e = 0; e < sub.graph.edge_slots(); ++e) {
    in_lists[sub.graph.edge(e).head].push_back(e);
  }
  for (auto& list : in_lists) {
    std::sort(list.begin(), list.end(), [&](EdgeId a, EdgeId b) {
      return in_rank[sub.edge_to_parent[a]] < in_rank[sub.edge_to_parent[b]];
    });
  }
  sub.graph.set_in_lists(std::move(in_lists));
  return sub;
}

Graph without_edges(const Graph& g, std::span<const EdgeId> edges) {
  Graph copy = g;
  for (EdgeId e : edges) copy.remove_edge(e);
  return copy;
}

Graph without_vertices(const Graph& g, std::span<const Vertex> vertices) {
  Graph copy = g;
  for (Vertex v : vertices) {
    for (EdgeId e : copy.out_edges(v)) copy.remove_edge(e);
    for (EdgeId e : copy.in_edges(v)) copy.remove_edge(e);
  }
  return copy;
}

int degree_bound(const Graph& g) {
  return std::min(g.max_in_degree(), g.max_out_degree());
}

}  // namespace kconn
