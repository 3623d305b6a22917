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

#include "kconn/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "kconn/connectivity.hpp"
#include "kconn/hierarchical.hpp"

namespace kconn {

std::vector<std::vector<Vertex>> naive_kscc_groups(const Graph& g, int k,
                                                   Mode mode) {
  if (k < 2) throw PreconditionError("naive_kscc: k must be >= 2");
  std::vector<std::vector<Vertex>> groups;
  std::vector<std::vector<Vertex>> stack;
  if (g.num_vertices() > 0) {
    std::vector<Vertex> all(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
    stack.push_back(std::move(all));
  }
  std::vector<char> mark(g.num_vertices(), 0);
  while (!stack.empty()) {
    std::vector<Vertex> part = std::move(stack.back());
    stack.pop_back();
    const Subgraph sub = induced_subgraph(g, part);
    const IsolationResult res = k_isolated_set(sub.graph, k, mode);
    if (res.empty()) {
      groups.push_back(std::move(part));
      continue;
    }
    for (Vertex v : res.s) mark[part[v]] = 1;
    std::vector<Vertex> s_side, other;
    for (Vertex v : res.s) s_side.push_back(part[v]);
    for (Vertex v : res.z_vertices) s_side.push_back(part[v]);
    for (Vertex v : part) {
      if (!mark[v]) other.push_back(v);
    }
    for (Vertex v : res.s) mark[part[v]] = 0;
    stack.push_back(std::move(other));
    stack.push_back(std::move(s_side));
  }
  return groups;
}

ComponentSet naive_kscc(const Graph& g, int k, Mode mode) {
  return make_component_set(g, mode, k, naive_kscc_groups(g, k, mode));
}

namespace {

// Mutual reachability of u and v once the vertices in `removed` are gone.
bool connected_without(const Graph& g, Vertex u, Vertex v,
                       const std::vector<char>& removed) {
  auto reaches = [&](Vertex from, Vertex to) {
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<Vertex> queue{from};
    seen[from] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (EdgeId e : g.out_edges(queue[i])) {
        const Vertex w = g.edge(e).head;
        if (!seen[w] && !removed[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    return seen[to] != 0;
  };
  return reaches(u, v) && reaches(v, u);
}

bool vertex_removal_enumeration(const Graph& g, Vertex u, Vertex v, int k) {
  std::vector<Vertex> candidates;
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    if (w != u && w != v) candidates.push_back(w);
  }
  const int c = static_cast<int>(candidates.size());
  std::vector<char> removed(g.num_vertices(), 0);
  for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
    if (std::popcount(mask) >= k) continue;
    for (int i = 0; i < c; ++i) removed[candidates[i]] = (mask >> i) & 1;
    if (!connected_without(g, u, v, removed)) return false;
  }
  return true;
}

}  // namespace

bool pairwise_k_connected(const Graph& g, Vertex u, Vertex v, int k,
                          Mode mode) {
  if (u == v) throw PreconditionError("pairwise_k_connected: u == v");
  if (mode == Mode::kEdge) {
    return bounded_connectivity(g, u, v, k, Mode::kEdge) >= k &&
           bounded_connectivity(g, v, u, k, Mode::kEdge) >= k;
  }
  const bool adjacent = g.has_edge(u, v) || g.has_edge(v, u);
  if (adjacent && g.num_vertices() <= 12) {
    return vertex_removal_enumeration(g, u, v, k);
  }
  // A direct edge survives every vertex removal; otherwise Menger.
  auto direction_ok = [&](Vertex a, Vertex b) {
    return g.has_edge(a, b) ||
           bounded_connectivity(g, a, b, k, Mode::kVertex) >= k;
  };
  return direction_ok(u, v) && direction_ok(v, u);
}

ComponentSet brute_force_kscc(const Graph& g, int k, Mode mode) {
  if (k < 2) throw PreconditionError("brute_force_kscc: k must be >= 2");
  const int n = g.num_vertices();
  const int limit =
      mode == Mode::kEdge ? kBruteForceMaxEdgeMode : kBruteForceMaxVertexMode;
  if (n > limit) {
    throw PreconditionError("brute_force_kscc: graph too large (n=" +
                            std::to_string(n) + ")");
  }
  std::vector<std::uint32_t> found;
  std::vector<std::vector<std::uint32_t>> by_size(n + 1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    by_size[std::popcount(mask)].push_back(mask);
  }
  for (int size = n; size >= 1; --size) {
    for (std::uint32_t mask : by_size[size]) {
      if (std::any_of(found.begin(), found.end(), [&](std::uint32_t f) {
            return (mask & f) == mask;
          })) {
        continue;
      }
      std::vector<Vertex> members;
      for (Vertex v = 0; v < n; ++v) {
        if ((mask >> v) & 1) members.push_back(v);
      }
      const Graph h = induced_subgraph(g, members).graph;
      if (!is_strongly_connected(h)) continue;
      bool ok = true;
      for (int a = 0; a < size && ok; ++a) {
        for (int b = a + 1; b < size && ok; ++b) {
          ok = pairwise_k_connected(h, a, b, k, mode);
        }
      }
      if (ok) found.push_back(mask);
    }
  }
  std::vector<std::vector<Vertex>> groups;
  for (std::uint32_t mask : found) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1) members.push_back(v);
    }
    groups.push_back(std::move(members));
  }
  return make_component_set(g, mode, k, std::move(groups));
}

}  // namespace kconn
