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

#ifndef KCONN_COMPONENTS_HPP_
#define KCONN_COMPONENTS_HPP_

#include <vector>

#include "kconn/graph.hpp"

namespace kconn {

struct Component {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // vertex mode only, sorted
  bool degenerate = false;       // vertex mode: fewer than three vertices

  friend bool operator==(const Component&, const Component&) = default;
};

struct ComponentSet {
  Mode mode = Mode::kEdge;
  int k = 2;
  std::vector<Component> components;  // sorted by smallest member

  friend bool operator==(const ComponentSet&, const ComponentSet&) = default;
};

// Builds a canonical ComponentSet from raw vertex groups of g. Vertex mode
// attaches the induced edges, flags degenerate components, and drops groups
// that are duplicates or strict subsets of another group.
ComponentSet make_component_set(const Graph& g, Mode mode, int k,
                                std::vector<std::vector<Vertex>> groups);

// Maps components of an expanded graph back to original vertices. Throws
// InternalError if some V_v is split between components.
ComponentSet project_components(const VertexMapping& mapping,
                                const Graph& original,
                                const ComponentSet& expanded);

// True iff every vertex appears in exactly one component (edge mode) or the
// edge sets are pairwise disjoint (vertex mode).
bool is_partition(const ComponentSet& cs, int num_vertices);

}  // namespace kconn

#endif  // KCONN_COMPONENTS_HPP_
