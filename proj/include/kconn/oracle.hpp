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

#ifndef KCONN_ORACLE_HPP_
#define KCONN_ORACLE_HPP_

#include <vector>

#include "kconn/components.hpp"
#include "kconn/graph.hpp"

namespace kconn {

// Repeated whole-graph search and split, no level search.
ComponentSet naive_kscc(const Graph& g, int k, Mode mode);
// Same, returning the raw vertex groups (before normalization).
std::vector<std::vector<Vertex>> naive_kscc_groups(const Graph& g, int k,
                                                   Mode mode);

inline constexpr int kBruteForceMaxEdgeMode = 12;
inline constexpr int kBruteForceMaxVertexMode = 10;

// Maximal vertex subsets whose induced subgraph is pairwise k-connected.
// Throws PreconditionError above 12 (edge) / 10 (vertex) vertices.
ComponentSet brute_force_kscc(const Graph& g, int k, Mode mode);

// u and v stay strongly connected after removing any fewer than k edges
// (vertex mode: vertices other than u and v).
bool pairwise_k_connected(const Graph& g, Vertex u, Vertex v, int k,
                          Mode mode);

}  // namespace kconn

#endif  // KCONN_ORACLE_HPP_
