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

#include "kconn/local2e.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace kconn {

const char* to_string(LocalBranch branch) {
  switch (branch) {
    case LocalBranch::kNone:
      return "none";
    case LocalBranch::kTscc:
      return "ll:tscc";
    case LocalBranch::kBridge:
      return "ll:bridge";
    case LocalBranch::kDominator:
      return "ll:dom";
  }
  return "?";
}

namespace {

// Adjacency of g seen in direction `dir`: incoming edges of the reverse
// graph are the outgoing edges of g.
template <class F>
void for_each_incoming(const Graph& g, Direction dir, Vertex v, F&& f) {
  if (dir == Direction::kForward) {
    g.for_each_in_edge(v, [&](EdgeId e) { f(e, g.edge(e).tail); });
  } else {
    g.for_each_out_edge(v, [&](EdgeId e) { f(e, g.edge(e).head); });
  }
}

template <class F>
void for_each_outgoing(const Graph& g, Direction dir, Vertex v, F&& f) {
  if (dir == Direction::kForward) {
    g.for_each_out_edge(v, [&](EdgeId e) { f(e, g.edge(e).head); });
  } else {
    g.for_each_in_edge(v, [&](EdgeId e) { f(e, g.edge(e).tail); });
  }
}

int ceil_log2(int x) {
  int i = 0;
  while ((1LL << i) < x) ++i;
  return i;
}

bool search_ball(const Graph& g, Vertex j, int d, Direction dir,
                 WorkCounters* counters, LocalSearchResult& out) {
  const std::vector<Vertex> ball = bounded_reverse_bfs(g, j, d, dir, counters);
  std::unordered_map<Vertex, int> local;
  for (int i = 0; i < static_cast<int>(ball.size()); ++i) local[ball[i]] = i;

  // The ball as a graph in direction `dir`, plus its blue set.
  Graph h(static_cast<int>(ball.size()));
  std::vector<EdgeId> to_g;
  std::vector<char> blue(ball.size(), 0);
  for (int i = 0; i < static_cast<int>(ball.size()); ++i) {
    for_each_incoming(g, dir, ball[i], [&](EdgeId e, Vertex from) {
      auto it = local.find(from);
      if (it == local.end()) {
        blue[i] = 1;
      } else {
        h.add_edge_unchecked(it->second, i);
        to_g.push_back(e);
      }
    });
  }
  if (counters) counters->bfs_ball_edges += h.num_edges();

  auto finish = [&](std::vector<Vertex> s, EdgeId z, LocalBranch branch) {
    out.s.clear();
    for (Vertex v : s) out.s.push_back(ball[v]);
    std::sort(out.s.begin(), out.s.end());
    out.z = z == kNoEdge ? kNoEdge : to_g[z];
    out.branch = branch;
    out.side = dir;
    out.j = j;
    return true;
  };

  const std::vector<Vertex> t = top_scc_excluding(h, blue);
  if (!t.empty()) {
    bool leaves = false;
    std::vector<char> in_t(ball.size(), 0);
    for (Vertex v : t) in_t[v] = 1;
    for (Vertex v : t) {
      for_each_outgoing(g, dir, ball[v], [&](EdgeId, Vertex to) {
        auto it = local.find(to);
        if (it == local.end() || !in_t[it->second]) leaves = true;
      });
    }
    if (leaves) return finish(t, kNoEdge, LocalBranch::kTscc);
    if (t.size() != ball.size()) {
      throw InternalError("local search: closed tSCC is not the whole ball");
    }
    const auto bridges = strong_bridges(h);
    if (bridges.empty()) {
      ++out.isolated_balls;
      return false;
    }
    const EdgeId e = bridges.front();
    const std::vector<EdgeId> removed{e};
    const SccPartition p = scc(without_edges(h, removed));
    for (int c = 0; c < p.count(); ++c) {
      if (p.is_top[c]) return finish(p.components[c], e, LocalBranch::kBridge);
    }
    throw InternalError("local search: no top SCC after bridge removal");
  }

  const RootedFlowGraph fg = contract_blue(h, blue);
  const auto dom = edge_dominator(fg);
  if (!dom) return false;
  const EdgeId e = fg.edge_to_source[*dom];
  const std::vector<EdgeId> removed{e};
  std::vector<Vertex> u = top_scc_excluding(without_edges(h, removed), blue);
  if (u.empty()) throw InternalError("local search: dominator without tSCC");
  return finish(std::move(u), e, LocalBranch::kDominator);
}

}  // namespace

std::vector<Vertex> bounded_reverse_bfs(const Graph& g, Vertex j, int d,
                                        Direction direction,
                                        WorkCounters* counters) {
  if (j < 0 || j >= g.num_vertices()) {
    throw PreconditionError("bounded_reverse_bfs: vertex out of range");
  }
  std::unordered_map<Vertex, int> dist{{j, 0}};
  std::vector<Vertex> order{j};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    const int dv = dist[v];
    if (dv == d) continue;
    for_each_incoming(g, direction, v, [&](EdgeId, Vertex from) {
      if (counters) ++counters->bfs_ball_edges;
      if (dist.emplace(from, dv + 1).second) order.push_back(from);
    });
  }
  std::sort(order.begin(), order.end());
  return order;
}

LocalSearchResult two_isolated_set_local_detailed(
    const Graph& g, std::span<const Vertex> j_set, int d,
    WorkCounters* counters) {
  if (g.max_in_degree() > 3 || g.max_out_degree() > 3) {
    throw PreconditionError("two_isolated_set_local: degree above three");
  }
  LocalSearchResult out;
  for (Vertex j : j_set) {
    for (Direction dir : {Direction::kForward, Direction::kReverse}) {
      if (search_ball(g, j, d, dir, counters, out)) return out;
    }
  }
  return out;
}

std::vector<Vertex> two_isolated_set_local(const Graph& g,
                                           std::span<const Vertex> j_set,
                                           int d, WorkCounters* counters) {
  return two_isolated_set_local_detailed(g, j_set, d, counters).s;
}

ComponentSet two_escc_sparse(const Graph& g, const SparseOptions& options,
                             SparseStats* stats) {
  SparseStats local_stats;
  SparseStats& st = stats ? *stats : local_stats;
  if (!(options.epsilon > 0.0 && options.epsilon < 1.0)) {
    throw PreconditionError("two_escc_sparse: epsilon must lie in (0,1)");
  }
  ExpandedGraph ex = constant_degree_transform(g);
  Graph& work = ex.graph;
  const int n = work.num_vertices();
  st.expanded_n = n;
  st.q = ceil_log2(n);
  st.d = n > 1 ? static_cast<int>(std::ceil(options.epsilon * std::log2(n)))
               : 0;

  std::vector<Vertex> j_list;
  std::vector<char> in_j(n, 0);
  auto add_to_j = [&](Vertex v) {
    if (!in_j[v]) {
      in_j[v] = 1;
      j_list.push_back(v);
    }
  };
  auto emit = [&](const char* event, std::int64_t a, std::int64_t b) {
    if (!options.trace) return;
    TraceEvent ev;
    ev.event = event;
    ev.numbers = {{"iteration", st.outer_iterations}, {"j", a}, {"value", b}};
    options.trace(ev);
  };

  SccPartition parts;
  do {
    ++st.outer_iterations;
    parts = scc(work);
    for (EdgeId e : work.live_edge_ids()) {
      const Edge& edge = work.edge(e);
      if (parts.comp_of[edge.tail] != parts.comp_of[edge.head]) {
        work.remove_edge(e);
      }
    }
    for (Vertex v : j_list) in_j[v] = 0;
    j_list.clear();
    for (EdgeId e : strong_bridges(work)) {
      const Edge edge = work.edge(e);
      work.remove_edge(e);
      add_to_j(edge.tail);
      add_to_j(edge.head);
    }
    emit("outer", static_cast<std::int64_t>(j_list.size()), 0);
    if (!j_list.empty() && static_cast<int>(j_list.size()) < st.q) {
      while (true) {
        ++st.local_calls;
        const LocalSearchResult res =
            two_isolated_set_local_detailed(work, j_list, st.d, &st.counters);
        if (res.s.empty()) break;
        switch (res.branch) {
          case LocalBranch::kTscc:
            ++st.branch_tscc;
            break;
          case LocalBranch::kBridge:
            ++st.branch_bridge;
            break;
          case LocalBranch::kDominator:
            ++st.branch_dominator;
            break;
          case LocalBranch::kNone:
            break;
        }
        if (options.trace) {
          TraceEvent ev;
          ev.event = "local";
          ev.numbers = {{"j", res.j},
                        {"s", static_cast<std::int64_t>(res.s.size())},
                        {"ball_edges", st.counters.bfs_ball_edges}};
          ev.labels = {{"branch", to_string(res.branch)},
                       {"side", to_string(res.side)}};
          options.trace(ev);
        }
        std::vector<char> in_s(n, 0);
        for (Vertex v : res.s) in_s[v] = 1;
        std::vector<EdgeId> boundary;
        for (Vertex v : res.s) {
          work.for_each_out_edge(v, [&](EdgeId e) {
            if (!in_s[work.edge(e).head]) boundary.push_back(e);
          });
          work.for_each_in_edge(v, [&](EdgeId e) {
            if (!in_s[work.edge(e).tail]) boundary.push_back(e);
          });
        }
        if (boundary.empty()) {
          throw InternalError("local search returned a set without boundary");
        }
        for (EdgeId e : boundary) {
          const Edge edge = work.edge(e);
          work.remove_edge(e);
          add_to_j(edge.tail);
          add_to_j(edge.head);
        }
        if (static_cast<int>(j_list.size()) >= st.q) break;
      }
    }
  } while (!j_list.empty());

  ComponentSet expanded;
  expanded.mode = Mode::kEdge;
  expanded.k = 2;
  const SccPartition final_parts = scc(work);
  for (const auto& comp : final_parts.components) {
    expanded.components.push_back({comp, {}, false});
  }
  return project_components(ex.mapping, g, expanded);
}

}  // namespace kconn
