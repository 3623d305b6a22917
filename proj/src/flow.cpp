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

#include <algorithm>

#include "kconn/connectivity.hpp"

namespace kconn {

const char* to_string(SeparatorRole role) {
  switch (role) {
    case SeparatorRole::kSeparator:
      return "k-separator";
    case SeparatorRole::kDominator:
      return "k-dominator";
    case SeparatorRole::kIsolating:
      return "isolating-set";
  }
  return "?";
}

namespace {

// Ford-Fulkerson with BFS augmenting paths, stopped once `limit` is reached.
// Edge mode: one node per vertex, unit arcs per edge. Vertex mode: vertex v
// is split into in = 2v and out = 2v+1 joined by a unit arc; edges get a
// capacity no vertex cut can reach. Sources leave from out(s), sinks enter
// at in(t), so the endpoints are never cut.
class FlowNet {
 public:
  FlowNet(const Graph& g, Mode mode) : g_(g), mode_(mode) {
    const int n = g.num_vertices();
    adj_.resize(mode == Mode::kEdge ? n : 2 * n);
    const int big = n + 1;
    if (mode == Mode::kVertex) {
      for (Vertex v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, 1, kNoEdge);
    }
    for (EdgeId e = 0; e < g.edge_slots(); ++e) {
      if (!g.is_alive(e)) continue;
      const Edge& edge = g.edge(e);
      if (mode == Mode::kEdge) {
        add_arc(edge.tail, edge.head, 1, e);
      } else {
        add_arc(2 * edge.tail + 1, 2 * edge.head, big, e);
      }
    }
  }

  int run(Vertex s, Vertex t, int limit, WorkCounters* counters) {
    for (auto& arc : arcs_) arc.flow = 0;
    source_ = source_node(s);
    const int sink = mode_ == Mode::kEdge ? t : 2 * t;
    int flow = 0;
    std::vector<int> via(adj_.size());
    std::vector<int> queue;
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      queue.assign(1, source_);
      via[source_] = -2;
      for (std::size_t i = 0; i < queue.size() && via[sink] == -1; ++i) {
        const int u = queue[i];
        for (int a : adj_[u]) {
          const Arc& arc = arcs_[a];
          if (arc.cap - arc.flow > 0 && via[arc.to] == -1) {
            via[arc.to] = a;
            queue.push_back(arc.to);
          }
        }
      }
      if (via[sink] == -1) break;
      int push = limit - flow;
      for (int x = sink; x != source_; x = arcs_[via[x] ^ 1].to) {
        push = std::min(push, arcs_[via[x]].cap - arcs_[via[x]].flow);
      }
      for (int x = sink; x != source_; x = arcs_[via[x] ^ 1].to) {
        arcs_[via[x]].flow += push;
        arcs_[via[x] ^ 1].flow -= push;
      }
      flow += push;
      if (counters) ++counters->flow_augmentations;
    }
    return flow;
  }

  // Minimum cut of the last run, taken from residual reachability.
  Separator cut() const {
    std::vector<char> side(adj_.size(), 0);
    std::vector<int> queue{source_};
    side[source_] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int a : adj_[queue[i]]) {
        const Arc& arc = arcs_[a];
        if (arc.cap - arc.flow > 0 && !side[arc.to]) {
          side[arc.to] = 1;
          queue.push_back(arc.to);
        }
      }
    }
    Separator sep;
    sep.mode = mode_;
    if (mode_ == Mode::kEdge) {
      for (std::size_t a = 0; a < arcs_.size(); a += 2) {
        const int from = arcs_[a + 1].to;
        if (side[from] && !side[arcs_[a].to]) sep.edges.push_back(arcs_[a].edge);
      }
      std::sort(sep.edges.begin(), sep.edges.end(), [&](EdgeId a, EdgeId b) {
        return g_.edge(a) < g_.edge(b);
      });
    } else {
      for (Vertex v = 0; v < g_.num_vertices(); ++v) {
        if (side[2 * v] && !side[2 * v + 1]) sep.vertices.push_back(v);
      }
    }
    return sep;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int flow;
    EdgeId edge;
  };

  int source_node(Vertex s) const {
    return mode_ == Mode::kEdge ? s : 2 * s + 1;
  }

  void add_arc(int u, int v, int cap, EdgeId e) {
    adj_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap, 0, e});
    adj_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, 0, 0, e});
  }

  const Graph& g_;
  Mode mode_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  int source_ = 0;
};

}  // namespace

int bounded_connectivity(const Graph& g, Vertex s, Vertex t, int limit,
                         Mode mode, WorkCounters* counters) {
  if (s == t) throw PreconditionError("bounded_connectivity: s == t");
  if (mode == Mode::kVertex && g.has_edge(s, t)) return limit;
  FlowNet net(g, mode);
  return net.run(s, t, limit, counters);
}

std::optional<Separator> bounded_min_separator(const Graph& g, Vertex s,
                                               Vertex t, int k, Mode mode,
                                               WorkCounters* counters) {
  if (s == t) throw PreconditionError("bounded_min_separator: s == t");
  if (mode == Mode::kVertex && g.has_edge(s, t)) return std::nullopt;
  FlowNet net(g, mode);
  if (net.run(s, t, k, counters) >= k) return std::nullopt;
  return net.cut();
}

std::optional<Separator> k_separator(const Graph& g, int k, Mode mode,
                                     WorkCounters* counters) {
  if (k < 2) throw PreconditionError("k_separator: k must be >= 2");
  if (!is_strongly_connected(g)) {
    throw PreconditionError("k_separator: graph is not strongly connected");
  }
  const int n = g.num_vertices();
  if (n <= 1) return std::nullopt;
  if (k == 2) {
    Separator sep;
    sep.mode = mode;
    if (mode == Mode::kVertex) {
      const auto points = strong_articulation_points(g);
      if (points.empty()) return std::nullopt;
      sep.vertices = {points.front()};
    } else {
      const auto bridges = strong_bridges(g);
      if (bridges.empty()) return std::nullopt;
      sep.edges = {bridges.front()};
    }
    return sep;
  }

  FlowNet net(g, mode);
  int best = k;
  std::optional<Separator> found;
  auto probe = [&](Vertex s, Vertex t) {
    if (best == 1) return;
    if (mode == Mode::kVertex && g.has_edge(s, t)) return;
    const int f = net.run(s, t, best, counters);
    if (f < best) {
      best = f;
      found = net.cut();
    }
  };
  // In edge mode one pivot suffices. In vertex mode some pivot among the
  // first k vertices lies outside any separator of size < k.
  const int pivots = mode == Mode::kEdge ? 1 : std::min(k, n);
  for (Vertex p = 0; p < pivots; ++p) {
    for (Vertex t = 0; t < n; ++t) {
      if (t == p) continue;
      probe(p, t);
      probe(t, p);
    }
  }
  if (found) found->role = SeparatorRole::kSeparator;
  return found;
}

std::optional<Separator> k_dominator(const RootedFlowGraph& fg, int k,
                                     Mode mode, WorkCounters* counters) {
  if (k < 2) throw PreconditionError("k_dominator: k must be >= 2");
  const Graph& g = fg.graph;
  if (fg.root < 0 || fg.root >= g.num_vertices()) {
    throw PreconditionError("k_dominator: invalid root");
  }
  Separator sep;
  sep.mode = mode;
  sep.role = SeparatorRole::kDominator;
  if (k == 2) {
    if (mode == Mode::kVertex) {
      const auto doms = dominator_vertices(fg);
      if (doms.empty()) return std::nullopt;
      sep.vertices = {doms.front().dominator};
    } else {
      const auto e = edge_dominator(fg);
      if (!e) return std::nullopt;
      sep.edges = {*e};
    }
    return sep;
  }

  const std::vector<char> reach = reachable_from(g, fg.root);
  FlowNet net(g, mode);
  int best = k;
  std::optional<Separator> found;
  for (Vertex t = 0; t < g.num_vertices() && best > 1; ++t) {
    if (t == fg.root || !reach[t]) continue;
    if (mode == Mode::kVertex && g.has_edge(fg.root, t)) continue;
    const int f = net.run(fg.root, t, best, counters);
    if (f < best) {
      best = f;
      found = net.cut();
    }
  }
  if (found) found->role = SeparatorRole::kDominator;
  return found;
}

}  // namespace kconn
