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
#include <set>

#include "kconn/hierarchical.hpp"

namespace kconn {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::kNone:
      return "none";
    case Provenance::kTscc:
      return "tscc";
    case Provenance::kDominator:
      return "dominator";
    case Provenance::kBlueSingletonSpecial:
      return "blue-singleton-special";
    case Provenance::kBlueSupersetSpecial:
      return "blue-superset-special";
    case Provenance::kWholeGraph:
      return "whole-graph";
  }
  return "?";
}

namespace {

// Top SCC of g minus the separator, avoiding `excluded` and the removed
// vertices.
std::vector<Vertex> tscc_without(const Graph& g, std::vector<char> excluded,
                                 std::span<const Vertex> z_vertices,
                                 std::span<const EdgeId> z_edges) {
  for (Vertex v : z_vertices) excluded[v] = 1;
  if (!z_edges.empty()) {
    return top_scc_excluding(without_edges(g, z_edges), excluded);
  }
  return top_scc_excluding(without_vertices(g, z_vertices), excluded);
}

// Keeps only the elements of z that actually enter s.
void trim_to_boundary(const Graph& g, const std::vector<Vertex>& s,
                      std::vector<Vertex>& z_vertices,
                      std::vector<EdgeId>& z_edges) {
  std::vector<char> in_s(g.num_vertices(), 0);
  for (Vertex v : s) in_s[v] = 1;
  std::erase_if(z_edges, [&](EdgeId e) { return !in_s[g.edge(e).head]; });
  std::erase_if(z_vertices, [&](Vertex z) {
    bool enters = false;
    g.for_each_out_edge(z, [&](EdgeId e) { enters |= in_s[g.edge(e).head] != 0; });
    return !enters;
  });
}

void map_separator(const RootedFlowGraph& fg, const Separator& sep,
                   std::vector<Vertex>& z_vertices,
                   std::vector<EdgeId>& z_edges) {
  for (Vertex v : sep.vertices) {
    const Vertex src = fg.to_source[v];
    if (src == kNoVertex) throw InternalError("separator contains the root");
    z_vertices.push_back(src);
  }
  for (EdgeId e : sep.edges) {
    const EdgeId src = fg.edge_to_source[e];
    if (src == kNoEdge) throw InternalError("separator contains a root edge");
    z_edges.push_back(src);
  }
}

IsolationResult search_direction(const Graph& g, std::span<const Vertex> part,
                                 int level, int k, Mode mode,
                                 Direction direction, WorkCounters* counters) {
  const LevelSubgraph ls = level_subgraph(g, part, level, direction);
  const Graph& gi = ls.graph;
  if (counters) {
    counters->level_edge_scans += ls.entries_scanned + gi.num_edges();
  }
  auto count_edges = [&](const Graph& h) {
    if (counters) counters->level_edge_scans += h.num_edges();
  };

  std::vector<Vertex> s;
  std::vector<Vertex> zv;
  std::vector<EdgeId> ze;
  Provenance prov = Provenance::kNone;
  const int blue_count = static_cast<int>(ls.blue_list.size());

  s = top_scc_excluding(gi, ls.blue);
  if (!s.empty()) {
    prov = Provenance::kTscc;
  } else if (blue_count == 0) {
    throw InternalError("level search: no blue vertex and no white tSCC");
  } else if (mode == Mode::kEdge || blue_count >= k) {
    const auto fgs = make_flow_graphs(ls, k, mode);
    count_edges(fgs.front().graph);
    if (auto z = k_dominator(fgs.front(), k, mode, counters)) {
      map_separator(fgs.front(), *z, zv, ze);
      s = tscc_without(gi, ls.blue, zv, ze);
      if (s.empty()) throw InternalError("dominator without isolated tSCC");
      prov = Provenance::kDominator;
    }
  } else {
    for (const auto& fg : make_flow_graphs(ls, k, mode)) {
      count_edges(fg.graph);
      if (auto z = k_dominator(fg, k, mode, counters)) {
        map_separator(fg, *z, zv, ze);
        s = tscc_without(gi, ls.blue, zv, ze);
        if (s.empty()) throw InternalError("dominator without isolated tSCC");
        prov = Provenance::kDominator;
        break;
      }
    }
    std::vector<Vertex> whites;
    for (Vertex v = 0; v < gi.num_vertices(); ++v) {
      if (!ls.blue[v]) whites.push_back(v);
    }
    if (prov == Provenance::kNone && !whites.empty()) {
      s = tscc_without(gi, ls.blue, ls.blue_list, {});
      if (s.size() < whites.size()) {
        zv = ls.blue_list;
        prov = Provenance::kBlueSingletonSpecial;
      } else if (blue_count < k - 1) {
        s.clear();
        const Subgraph white = induced_subgraph(gi, whites);
        count_edges(white.graph);
        if (auto z = k_separator(white.graph, k - blue_count, Mode::kVertex,
                                 counters)) {
          zv = ls.blue_list;
          for (Vertex v : z->vertices) zv.push_back(white.to_parent[v]);
          s = tscc_without(gi, ls.blue, zv, {});
          if (s.empty()) throw InternalError("separator without tSCC");
          prov = Provenance::kBlueSupersetSpecial;
        }
      } else {
        s.clear();
      }
    }
  }

  IsolationResult res;
  if (s.empty()) return res;
  trim_to_boundary(gi, s, zv, ze);
  res.side = direction;
  res.provenance = prov;
  res.level = level;
  res.blue_count = blue_count;
  for (Vertex v : s) res.s.push_back(ls.to_base[v]);
  for (Vertex v : zv) res.z_vertices.push_back(ls.to_base[v]);
  for (EdgeId e : ze) res.z_edges.push_back(ls.edge_to_base[e]);
  std::sort(res.s.begin(), res.s.end());
  std::sort(res.z_vertices.begin(), res.z_vertices.end());
  std::sort(res.z_edges.begin(), res.z_edges.end());
  return res;
}

}  // namespace

IsolationResult k_isolated_set_level(const Graph& g, int level, int k,
                                     Mode mode, WorkCounters* counters) {
  return k_isolated_set_level(g, std::span<const Vertex>{}, level, k, mode,
                              counters);
}

IsolationResult k_isolated_set_level(const Graph& g,
                                     std::span<const Vertex> part, int level,
                                     int k, Mode mode, WorkCounters* counters) {
  if (k < 2) throw PreconditionError("k must be >= 2");
  if (level < 1 || level >= 30) {
    throw PreconditionError("level search: level out of range");
  }
  int max_in = 0, max_out = 0;
  auto account = [&](Vertex v) {
    max_in = std::max(max_in, g.in_degree(v));
    max_out = std::max(max_out, g.out_degree(v));
  };
  if (part.empty()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) account(v);
  } else {
    for (Vertex v : part) account(v);
  }
  if ((1 << level) >= std::min(max_in, max_out)) {
    throw PreconditionError("level search: 2^level must be below gamma");
  }
  for (Direction d : {Direction::kForward, Direction::kReverse}) {
    IsolationResult res =
        search_direction(g, part, level, k, mode, d, counters);
    if (!res.empty()) return res;
  }
  return {};
}

IsolationResult k_isolated_set(const Graph& g, int k, Mode mode,
                               WorkCounters* counters) {
  if (k < 2) throw PreconditionError("k must be >= 2");
  IsolationResult res;
  if (g.num_vertices() == 0) return res;
  const SccPartition p = scc(g);
  if (p.count() > 1) {
    for (int c = 0; c < p.count(); ++c) {
      if (p.is_top[c]) {
        res.s = p.components[c];
        break;
      }
    }
  } else {
    auto z = k_separator(g, k, mode, counters);
    if (!z) return res;
    res.z_vertices = z->vertices;
    res.z_edges = z->edges;
    res.s = tscc_without(g, std::vector<char>(g.num_vertices(), 0),
                         res.z_vertices, res.z_edges);
    if (res.s.empty()) throw InternalError("separator without tSCC");
    trim_to_boundary(g, res.s, res.z_vertices, res.z_edges);
  }
  res.provenance = Provenance::kWholeGraph;
  std::sort(res.z_edges.begin(), res.z_edges.end());
  return res;
}

bool check_isolation(const Graph& g, const IsolationResult& res, int k,
                     Mode mode) {
  if (res.s.empty()) return false;
  Graph reversed;
  const Graph* h = &g;
  if (res.side == Direction::kReverse) {
    reversed = reverse(g);
    h = &reversed;
  }
  const int n = h->num_vertices();
  if (res.z_size() >= k) return false;
  std::vector<char> in_s(n, 0), in_z(n, 0);
  for (Vertex v : res.s) {
    if (v < 0 || v >= n || in_s[v]) return false;
    in_s[v] = 1;
  }
  for (Vertex z : res.z_vertices) {
    if (z < 0 || z >= n || in_s[z] || in_z[z]) return false;
    in_z[z] = 1;
  }
  int outside = 0;
  for (Vertex v = 0; v < n; ++v) outside += !in_s[v] && !in_z[v];
  if (outside == 0) return false;
  if (!is_strongly_connected(induced_subgraph(*h, res.s).graph)) return false;

  if (mode == Mode::kEdge) {
    if (!res.z_vertices.empty()) return false;
    std::set<EdgeId> entering;
    for (Vertex v : res.s) {
      h->for_each_in_edge(v, [&](EdgeId e) {
        if (!in_s[h->edge(e).tail]) entering.insert(e);
      });
    }
    return entering == std::set<EdgeId>(res.z_edges.begin(), res.z_edges.end());
  }
  if (!res.z_edges.empty()) return false;
  std::vector<char> z_enters(n, 0);
  for (Vertex v : res.s) {
    bool ok = true;
    h->for_each_in_edge(v, [&](EdgeId e) {
      const Vertex t = h->edge(e).tail;
      if (in_s[t]) return;
      if (!in_z[t]) ok = false;
      z_enters[t] = 1;
    });
    if (!ok) return false;
  }
  for (Vertex z : res.z_vertices) {
    if (!z_enters[z]) return false;
  }
  return true;
}

}  // namespace kconn
