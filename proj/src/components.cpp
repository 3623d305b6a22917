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

#include "kconn/components.hpp"

#include <algorithm>
#include <set>

namespace kconn {

namespace {

bool is_subset(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

ComponentSet make_component_set(const Graph& g, Mode mode, int k,
                                std::vector<std::vector<Vertex>> groups) {
  ComponentSet cs;
  cs.mode = mode;
  cs.k = k;
  for (auto& group : groups) std::sort(group.begin(), group.end());
  std::sort(groups.begin(), groups.end());
  groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
  groups.erase(std::remove_if(groups.begin(), groups.end(),
                              [](const auto& grp) { return grp.empty(); }),
               groups.end());

  if (mode == Mode::kVertex) {
    // Drop groups contained in a larger one; the containing group is found
    // among those sharing the smaller group's first vertex.
    std::vector<std::vector<int>> by_vertex(g.num_vertices());
    for (int i = 0; i < static_cast<int>(groups.size()); ++i) {
      for (Vertex v : groups[i]) by_vertex[v].push_back(i);
    }
    std::vector<char> drop(groups.size(), 0);
    for (int i = 0; i < static_cast<int>(groups.size()); ++i) {
      for (int j : by_vertex[groups[i].front()]) {
        if (j != i && groups[j].size() > groups[i].size() &&
            is_subset(groups[i], groups[j])) {
          drop[i] = 1;
          break;
        }
      }
    }
    std::vector<std::vector<Vertex>> kept;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (!drop[i]) kept.push_back(std::move(groups[i]));
    }
    groups = std::move(kept);
  }

  std::vector<int> member(g.num_vertices(), -1);
  for (auto& group : groups) {
    Component c;
    c.vertices = std::move(group);
    if (mode == Mode::kVertex) {
      const int id = static_cast<int>(cs.components.size());
      for (Vertex v : c.vertices) member[v] = id;
      for (Vertex v : c.vertices) {
        g.for_each_out_edge(v, [&](EdgeId e) {
          if (member[g.edge(e).head] == id) c.edges.push_back(g.edge(e));
        });
      }
      std::sort(c.edges.begin(), c.edges.end());
      c.degenerate = c.vertices.size() < 3;
    }
    cs.components.push_back(std::move(c));
  }
  return cs;
}

ComponentSet project_components(const VertexMapping& mapping,
                                const Graph& original,
                                const ComponentSet& expanded) {
  std::vector<int> owner(mapping.backward.size(), -1);
  for (int i = 0; i < static_cast<int>(expanded.components.size()); ++i) {
    for (Vertex x : expanded.components[i].vertices) owner[x] = i;
  }
  std::vector<std::vector<Vertex>> groups(expanded.components.size());
  for (Vertex v = 0; v < static_cast<int>(mapping.forward.size()); ++v) {
    const auto& copies = mapping.forward[v];
    if (copies.empty()) continue;
    const int id = owner[copies.front()];
    for (Vertex x : copies) {
      if (owner[x] != id) {
        throw InternalError("project_components: expanded vertex set of " +
                            std::to_string(v) + " is split");
      }
    }
    if (id == -1) {
      throw InternalError("project_components: vertex " + std::to_string(v) +
                          " is not covered");
    }
    groups[id].push_back(v);
  }
  return make_component_set(original, expanded.mode, expanded.k,
                            std::move(groups));
}

bool is_partition(const ComponentSet& cs, int num_vertices) {
  if (cs.mode == Mode::kEdge) {
    std::vector<int> seen(num_vertices, 0);
    for (const auto& c : cs.components) {
      for (Vertex v : c.vertices) {
        if (v < 0 || v >= num_vertices || seen[v]++) return false;
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
  }
  std::set<Edge> edges;
  for (const auto& c : cs.components) {
    for (const Edge& e : c.edges) {
      if (!edges.insert(e).second) return false;
    }
  }
  return true;
}

}  // namespace kconn
