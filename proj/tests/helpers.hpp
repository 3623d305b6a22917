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

// Small independent oracles for the tests. Nothing here calls into the
// library's connectivity code; everything is plain BFS over edge lists.

#ifndef KCONN_TESTS_HELPERS_HPP_
#define KCONN_TESTS_HELPERS_HPP_

#include <algorithm>
#include <vector>

#include "kconn/graph.hpp"

namespace kconn::testing {

inline Graph path3() {
  const std::vector<Edge> e{{0, 1}, {1, 2}};
  return Graph::from_edges(3, e);
}

inline Graph diamond() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return Graph::from_edges(4, e);
}

inline std::vector<Edge> sorted_edges(const Graph& g) {
  auto e = g.edge_list();
  std::sort(e.begin(), e.end());
  return e;
}

// BFS from s over live edges, skipping dead vertices and edges.
inline std::vector<char> bfs(const Graph& g, Vertex s,
                             const std::vector<char>& dead_v = {},
                             const std::vector<char>& dead_e = {}) {
  const int n = g.num_vertices();
  std::vector<char> seen(n, 0);
  if (!dead_v.empty() && dead_v[s]) return seen;
  std::vector<Vertex> q{s};
  seen[s] = 1;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (EdgeId e : g.out_edges(q[i])) {
      if (!dead_e.empty() && dead_e[e]) continue;
      const Vertex h = g.edge(e).head;
      if (seen[h] || (!dead_v.empty() && dead_v[h])) continue;
      seen[h] = 1;
      q.push_back(h);
    }
  }
  return seen;
}

// Number of SCCs among surviving vertices, by mutual reachability.
inline int scc_count(const Graph& g, const std::vector<char>& dead_v = {},
                     const std::vector<char>& dead_e = {}) {
  const int n = g.num_vertices();
  std::vector<std::vector<char>> r(n);
  for (Vertex v = 0; v < n; ++v) r[v] = bfs(g, v, dead_v, dead_e);
  std::vector<char> done(n, 0);
  int count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (done[v] || (!dead_v.empty() && dead_v[v])) continue;
    ++count;
    for (Vertex u = 0; u < n; ++u) {
      if (r[v][u] && r[u][v]) done[u] = 1;
    }
  }
  return count;
}

inline std::vector<char> mask(int n, const std::vector<int>& members) {
  std::vector<char> m(n, 0);
  for (int x : members) m[x] = 1;
  return m;
}

}  // namespace kconn::testing

#endif  // KCONN_TESTS_HELPERS_HPP_
