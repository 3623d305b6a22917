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

// Lengauer-Tarjan, simple version (path compression only).
std::vector<Vertex> immediate_dominators(const Graph& g, Vertex root) {
  const int n = g.num_vertices();
  std::vector<Vertex> idom(n, kNoVertex);
  if (root < 0 || root >= n) return idom;

  std::vector<int> num(n, -1);
  std::vector<Vertex> order, parent(n, kNoVertex);
  std::vector<std::pair<Vertex, std::size_t>> frames;
  // Iterative DFS; out-lists are snapshotted per frame.
  std::vector<std::vector<EdgeId>> outs(n);
  num[root] = 0;
  order.push_back(root);
  outs[root] = g.out_edges(root);
  frames.push_back({root, 0});
  while (!frames.empty()) {
    auto& [v, i] = frames.back();
    if (i < outs[v].size()) {
      const Vertex w = g.edge(outs[v][i++]).head;
      if (num[w] == -1) {
        num[w] = static_cast<int>(order.size());
        order.push_back(w);
        parent[w] = v;
        outs[w] = g.out_edges(w);
        frames.push_back({w, 0});
      }
    } else {
      outs[v].clear();
      outs[v].shrink_to_fit();
      frames.pop_back();
    }
  }

  const int reached = static_cast<int>(order.size());
  std::vector<int> semi(n, -1);
  std::vector<Vertex> ancestor(n, kNoVertex), label(n, kNoVertex);
  std::vector<std::vector<Vertex>> bucket(n);
  for (Vertex v : order) {
    semi[v] = num[v];
    label[v] = v;
  }
  std::vector<Vertex> path;
  auto compress = [&](Vertex v) {
    path.clear();
    for (Vertex u = v; ancestor[ancestor[u]] != kNoVertex; u = ancestor[u]) {
      path.push_back(u);
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const Vertex x = *it;
      const Vertex a = ancestor[x];
      if (semi[label[a]] < semi[label[x]]) label[x] = label[a];
      ancestor[x] = ancestor[a];
    }
  };
  auto eval = [&](Vertex v) {
    if (ancestor[v] == kNoVertex) return v;
    compress(v);
    return label[v];
  };

  for (int i = reached - 1; i >= 1; --i) {
    const Vertex w = order[i];
    g.for_each_in_edge(w, [&](EdgeId e) {
      const Vertex v = g.edge(e).tail;
      if (num[v] == -1) return;
      const Vertex u = eval(v);
      semi[w] = std::min(semi[w], semi[u]);
    });
    bucket[order[semi[w]]].push_back(w);
    ancestor[w] = parent[w];
    for (Vertex v : bucket[parent[w]]) {
      const Vertex u = eval(v);
      idom[v] = semi[u] < semi[v] ? u : parent[w];
    }
    bucket[parent[w]].clear();
  }
  for (int i = 1; i < reached; ++i) {
    const Vertex w = order[i];
    if (idom[w] != order[semi[w]]) idom[w] = idom[idom[w]];
  }
  idom[root] = kNoVertex;
  return idom;
}

std::vector<DominatorWitness> dominator_vertices(const RootedFlowGraph& fg) {
  const std::vector<Vertex> idom = immediate_dominators(fg.graph, fg.root);
  std::vector<Vertex> witness(fg.graph.num_vertices(), kNoVertex);
  for (Vertex v = 0; v < fg.graph.num_vertices(); ++v) {
    const Vertex d = idom[v];
    if (d == kNoVertex || d == fg.root) continue;
    if (witness[d] == kNoVertex) witness[d] = v;  // v increasing
  }
  std::vector<DominatorWitness> result;
  for (Vertex d = 0; d < fg.graph.num_vertices(); ++d) {
    if (witness[d] != kNoVertex) result.push_back({d, witness[d]});
  }
  return result;
}

std::vector<EdgeId> dominating_edges(const RootedFlowGraph& fg) {
  const Graph& g = fg.graph;
  const int n = g.num_vertices();
  // Subdivide every edge e by a vertex x_e; e dominates something iff x_e is
  // the immediate dominator of e's head.
  Graph h(n + g.num_edges());
  std::vector<EdgeId> of_x;
  std::vector<Vertex> x_of(g.edge_slots(), kNoVertex);
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (!g.is_alive(e)) continue;
    x_of[e] = n + static_cast<Vertex>(of_x.size());
    of_x.push_back(e);
  }
  for (Vertex v = 0; v < n; ++v) {
    g.for_each_out_edge(v, [&](EdgeId e) { h.add_edge_unchecked(v, x_of[e]); });
  }
  for (EdgeId e : of_x) h.add_edge_unchecked(x_of[e], g.edge(e).head);

  const std::vector<Vertex> idom = immediate_dominators(h, fg.root);
  std::vector<EdgeId> result;
  for (EdgeId e : of_x) {
    if (idom[g.edge(e).head] == x_of[e]) result.push_back(e);
  }
  std::sort(result.begin(), result.end(), [&](EdgeId a, EdgeId b) {
    const Edge& ea = g.edge(a);
    const Edge& eb = g.edge(b);
    return ea != eb ? ea < eb : a < b;
  });
  return result;
}

std::optional<EdgeId> edge_dominator(const RootedFlowGraph& fg) {
  const auto edges = dominating_edges(fg);
  if (edges.empty()) return std::nullopt;
  return edges.front();
}

std::vector<Vertex> strong_articulation_points(const Graph& g) {
  const SccPartition p = scc(g);
  std::vector<Vertex> result;
  for (const auto& comp : p.components) {
    if (comp.size() < 3) continue;
    Subgraph sub = induced_subgraph(g, comp);
    std::vector<char> hit(comp.size(), 0);
    for (const auto& d : dominator_vertices(plain_flow_graph(sub.graph, 0))) {
      hit[d.dominator] = 1;
    }
    for (const auto& d :
         dominator_vertices(plain_flow_graph(reverse(sub.graph), 0))) {
      hit[d.dominator] = 1;
    }
    std::vector<Vertex> others;
    for (Vertex v = 1; v < static_cast<Vertex>(comp.size()); ++v) {
      others.push_back(v);
    }
    if (!is_strongly_connected(induced_subgraph(sub.graph, others).graph)) {
      hit[0] = 1;
    }
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (hit[i]) result.push_back(comp[i]);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<EdgeId> strong_bridges(const Graph& g) {
  const SccPartition p = scc(g);
  std::vector<EdgeId> result;
  for (const auto& comp : p.components) {
    if (comp.size() < 2) continue;
    Subgraph sub = induced_subgraph(g, comp);
    std::vector<char> hit(sub.graph.edge_slots(), 0);
    for (EdgeId e : dominating_edges(plain_flow_graph(sub.graph, 0))) {
      hit[e] = 1;
    }
    for (EdgeId e : dominating_edges(plain_flow_graph(reverse(sub.graph), 0))) {
      hit[e] = 1;
    }
    for (EdgeId e = 0; e < sub.graph.edge_slots(); ++e) {
      if (hit[e]) result.push_back(sub.edge_to_parent[e]);
    }
  }
  std::sort(result.begin(), result.end(), [&](EdgeId a, EdgeId b) {
    return g.edge(a) < g.edge(b);
  });
  return result;
}

}  // namespace kconn
