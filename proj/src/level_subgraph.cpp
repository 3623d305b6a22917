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
#include <limits>
#include <numeric>

#include "kconn/graph.hpp"

namespace kconn {

const char* to_string(RootKind kind) {
  switch (kind) {
    case RootKind::kArtificial:
      return "artificial-root";
    case RootKind::kContracted:
      return "contracted-root";
    case RootKind::kBlueMember:
      return "blue-member-root";
    case RootKind::kPlain:
      return "plain-root";
  }
  return "?";
}

LevelSubgraph level_subgraph(const Graph& g, int level, Direction direction) {
  return level_subgraph(g, std::span<const Vertex>{}, level, direction);
}

LevelSubgraph level_subgraph(const Graph& g, std::span<const Vertex> part,
                             int level, Direction direction) {
  if (level < 1) throw PreconditionError("level_subgraph: level must be >= 1");
  std::vector<Vertex> all;
  if (part.empty()) {
    all.resize(g.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    part = all;
  }
  const int n = static_cast<int>(part.size());
  const int cap = level >= 30 ? std::numeric_limits<int>::max() : (1 << level);

  LevelSubgraph ls;
  ls.level = level;
  ls.direction = direction;
  ls.graph = Graph(n);
  ls.to_base.assign(part.begin(), part.end());
  ls.blue.assign(n, 0);

  std::vector<int> local(g.num_vertices(), -1);
  for (int i = 0; i < n; ++i) local[part[i]] = i;

  const bool forward = direction == Direction::kForward;
  std::vector<EdgeId> prefix;
  for (int v = 0; v < n; ++v) {
    const Vertex base_v = part[v];
    prefix.clear();
    ls.entries_scanned += g.take_prefix(base_v, direction, cap, prefix);
    for (EdgeId e : prefix) {
      const Edge& be = g.edge(e);
      const Vertex other = local[forward ? be.tail : be.head];
      if (other == -1) {
        throw InternalError("level_subgraph: live edge leaves the part");
      }
      ls.graph.add_edge_unchecked(other, v);
      ls.edge_to_base.push_back(e);
    }
    if (g.degree(base_v, direction) > cap) {
      ls.blue[v] = 1;
      ls.blue_list.push_back(v);
    }
  }
  return ls;
}

RootedFlowGraph plain_flow_graph(const Graph& g, Vertex root) {
  RootedFlowGraph fg;
  fg.graph = g;
  fg.root = root;
  fg.kind = RootKind::kPlain;
  fg.to_source.resize(g.num_vertices());
  std::iota(fg.to_source.begin(), fg.to_source.end(), 0);
  fg.edge_to_source.resize(g.edge_slots());
  std::iota(fg.edge_to_source.begin(), fg.edge_to_source.end(), 0);
  return fg;
}

RootedFlowGraph contract_blue(const Graph& g, std::span<const char> blue) {
  RootedFlowGraph fg;
  fg.kind = RootKind::kContracted;
  std::vector<Vertex> local(g.num_vertices(), kNoVertex);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (blue[v]) {
      fg.origin_blue.push_back(v);
    } else {
      local[v] = static_cast<Vertex>(fg.to_source.size());
      fg.to_source.push_back(v);
    }
  }
  fg.root = static_cast<Vertex>(fg.to_source.size());
  fg.to_source.push_back(kNoVertex);
  fg.graph = Graph(static_cast<int>(fg.to_source.size()), true);
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (!g.is_alive(e)) continue;
    const Edge& edge = g.edge(e);
    const bool blue_tail = blue[edge.tail] != 0;
    const bool blue_head = blue[edge.head] != 0;
    if (blue_tail && blue_head) continue;
    const Vertex t = blue_tail ? fg.root : local[edge.tail];
    const Vertex h = blue_head ? fg.root : local[edge.head];
    fg.graph.add_edge_unchecked(t, h);
    fg.edge_to_source.push_back(e);
  }
  return fg;
}

std::vector<RootedFlowGraph> make_flow_graphs(const LevelSubgraph& ls, int k,
                                              Mode mode) {
  if (ls.blue_list.empty()) {
    throw PreconditionError(
        "make_flow_graphs: empty blue set, use the whole-graph search");
  }
  std::vector<RootedFlowGraph> result;
  if (mode == Mode::kEdge) {
    result.push_back(contract_blue(ls.graph, ls.blue));
    return result;
  }
  const int blue_count = static_cast<int>(ls.blue_list.size());
  if (blue_count >= k) {
    RootedFlowGraph fg = plain_flow_graph(ls.graph, kNoVertex);
    fg.kind = RootKind::kArtificial;
    fg.root = fg.graph.add_vertex();
    fg.to_source.push_back(kNoVertex);
    for (Vertex b : ls.blue_list) {
      fg.graph.add_edge_unchecked(fg.root, b);
      fg.edge_to_source.push_back(kNoEdge);
    }
    fg.origin_blue = ls.blue_list;
    result.push_back(std::move(fg));
    return result;
  }
  for (Vertex w : ls.blue_list) {
    RootedFlowGraph fg = plain_flow_graph(ls.graph, w);
    fg.kind = blue_count == 1 ? RootKind::kPlain : RootKind::kBlueMember;
    for (Vertex b : ls.blue_list) {
      if (b == w || fg.graph.has_edge(w, b)) continue;
      fg.graph.add_edge_unchecked(w, b);
      fg.edge_to_source.push_back(kNoEdge);
    }
    fg.origin_blue = ls.blue_list;
    result.push_back(std::move(fg));
  }
  return result;
}

ExpandedGraph constant_degree_transform(const Graph& g) {
  const int n = g.num_vertices();
  ExpandedGraph out;
  out.mapping.forward.resize(n);
  std::vector<int> width(n, 1);
  int total = 0;
  for (Vertex v = 0; v < n; ++v) {
    const int d = std::max(g.in_degree(v), g.out_degree(v));
    width[v] = d > 3 ? d : 1;
    for (int i = 0; i < width[v]; ++i) {
      out.mapping.forward[v].push_back(total + i);
      out.mapping.backward.push_back(v);
    }
    total += width[v];
  }
  out.graph = Graph(total);
  for (Vertex v = 0; v < n; ++v) {
    const int d = width[v];
    if (d == 1) continue;
    const auto& copies = out.mapping.forward[v];
    for (int i = 0; i < d; ++i) {
      out.graph.add_edge_unchecked(copies[i], copies[(i + 1) % d]);
      out.graph.add_edge_unchecked(copies[i], copies[(i + d - 1) % d]);
    }
  }
  // Position of every edge in its tail's out-list and its head's in-list.
  std::vector<int> out_pos(g.edge_slots(), 0);
  std::vector<int> in_pos(g.edge_slots(), 0);
  for (Vertex v = 0; v < n; ++v) {
    int i = 0;
    g.for_each_out_edge(v, [&](EdgeId e) { out_pos[e] = i++; });
    int j = 0;
    g.for_each_in_edge(v, [&](EdgeId e) { in_pos[e] = j++; });
  }
  for (EdgeId e : g.live_edge_ids()) {
    const Edge& edge = g.edge(e);
    const auto& tails = out.mapping.forward[edge.tail];
    const auto& heads = out.mapping.forward[edge.head];
    const Vertex t = tails.size() == 1 ? tails[0] : tails[out_pos[e]];
    const Vertex h = heads.size() == 1 ? heads[0] : heads[in_pos[e]];
    out.graph.add_edge_unchecked(t, h);
  }
  return out;
}

}  // namespace kconn
