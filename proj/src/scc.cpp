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

namespace {

// Heads of live out-edges in CSR form.
struct Csr {
  std::vector<int> offset;
  std::vector<Vertex> head;
};

Csr out_csr(const Graph& g) {
  const int n = g.num_vertices();
  Csr csr;
  csr.offset.assign(n + 1, 0);
  csr.head.reserve(g.num_edges());
  for (Vertex v = 0; v < n; ++v) {
    g.for_each_out_edge(v, [&](EdgeId e) { csr.head.push_back(g.edge(e).head); });
    csr.offset[v + 1] = static_cast<int>(csr.head.size());
  }
  return csr;
}

}  // namespace

SccPartition scc(const Graph& g) {
  const int n = g.num_vertices();
  const Csr csr = out_csr(g);
  std::vector<int> index(n, -1), low(n, 0), raw_comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, int>> call;  // vertex, next arc
  int counter = 0, raw_count = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, csr.offset[root]});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, arc] = call.back();
      if (arc < csr.offset[v + 1]) {
        const Vertex w = csr.head[arc++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, csr.offset[w]});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const Vertex done = v;
      call.pop_back();
      if (!call.empty()) {
        const Vertex parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          raw_comp[w] = raw_count;
        } while (w != done);
        ++raw_count;
      }
    }
  }

  // Renumber so components are ordered by their smallest member.
  SccPartition p;
  p.comp_of.assign(n, -1);
  std::vector<int> renumber(raw_count, -1);
  for (Vertex v = 0; v < n; ++v) {
    int& id = renumber[raw_comp[v]];
    if (id == -1) {
      id = static_cast<int>(p.components.size());
      p.components.emplace_back();
    }
    p.comp_of[v] = id;
    p.components[id].push_back(v);
  }
  p.is_top.assign(p.count(), 1);
  p.is_bottom.assign(p.count(), 1);
  for (Vertex v = 0; v < n; ++v) {
    for (int a = csr.offset[v]; a < csr.offset[v + 1]; ++a) {
      const int cu = p.comp_of[v], cw = p.comp_of[csr.head[a]];
      if (cu != cw) {
        p.is_bottom[cu] = 0;
        p.is_top[cw] = 0;
      }
    }
  }
  return p;
}

bool is_strongly_connected(const Graph& g) {
  return scc(g).count() <= 1;
}

std::vector<Vertex> top_scc_excluding(const Graph& g,
                                      std::span<const char> excluded) {
  const SccPartition p = scc(g);
  for (int c = 0; c < p.count(); ++c) {
    if (!p.is_top[c]) continue;
    const auto& members = p.components[c];
    if (std::none_of(members.begin(), members.end(),
                     [&](Vertex v) { return excluded[v] != 0; })) {
      return members;
    }
  }
  return {};
}

std::vector<Vertex> top_scc_excluding(const Graph& g,
                                      const std::vector<Vertex>& excluded) {
  std::vector<char> mask(g.num_vertices(), 0);
  for (Vertex v : excluded) mask[v] = 1;
  return top_scc_excluding(g, std::span<const char>(mask));
}

std::vector<char> reachable_from(const Graph& g, Vertex from) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> queue{from};
  seen[from] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    g.for_each_out_edge(queue[i], [&](EdgeId e) {
      const Vertex w = g.edge(e).head;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    });
  }
  return seen;
}

}  // namespace kconn
