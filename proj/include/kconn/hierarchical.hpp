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

#ifndef KCONN_HIERARCHICAL_HPP_
#define KCONN_HIERARCHICAL_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kconn/components.hpp"
#include "kconn/connectivity.hpp"
#include "kconn/graph.hpp"

namespace kconn {

enum class Provenance {
  kNone,
  kTscc,
  kDominator,
  kBlueSingletonSpecial,
  kBlueSupersetSpecial,
  kWholeGraph,
};
const char* to_string(Provenance p);

struct IsolationResult {
  std::vector<Vertex> s;           // sorted
  std::vector<Vertex> z_vertices;  // vertex mode, sorted
  std::vector<EdgeId> z_edges;     // edge mode, ids of the searched graph
  Direction side = Direction::kForward;
  Provenance provenance = Provenance::kNone;
  int level = 0;       // 0 for the whole-graph search
  int blue_count = 0;  // |B_i| in the successful direction

  bool empty() const { return s.empty(); }
  int z_size() const {
    return static_cast<int>(z_vertices.size() + z_edges.size());
  }
};

// Level search over all vertices of g. Requires 1 <= level and
// 2^level < degree_bound(g).
IsolationResult k_isolated_set_level(const Graph& g, int level, int k,
                                     Mode mode,
                                     WorkCounters* counters = nullptr);

// Level search restricted to `part`, a set of vertices with no live edges to
// the rest of g. Results are in ids of g.
IsolationResult k_isolated_set_level(const Graph& g,
                                     std::span<const Vertex> part, int level,
                                     int k, Mode mode,
                                     WorkCounters* counters = nullptr);

// Whole-graph search: a proper tSCC if g is not strongly connected, else a
// tSCC of g minus a k-separator, else empty.
IsolationResult k_isolated_set(const Graph& g, int k, Mode mode,
                               WorkCounters* counters = nullptr);

// Checks from the definitions that res.s is a top SCC, or a k-almost top SCC
// with respect to res.z, of g (of reverse(g) when res.side is kReverse) and
// that something outside s and z remains.
bool check_isolation(const Graph& g, const IsolationResult& res, int k,
                     Mode mode);

struct TraceEvent {
  std::string event;
  std::vector<std::pair<std::string, std::int64_t>> numbers;
  std::vector<std::pair<std::string, std::string>> labels;
};
using TraceSink = std::function<void(const TraceEvent&)>;

struct KsccOptions {
  // Subproblems with at most this many vertices go to the naive algorithm.
  // Unset: 8 for k = 2 and for edge mode, 14k^3 - 1 for vertex mode k > 2.
  std::optional<int> base_threshold;
  bool audit = false;
  std::uint64_t audit_seed = 1;
  int audit_menger_max_n = 40;
  int audit_menger_pairs = 20;
  TraceSink trace;
};

struct KsccStats {
  WorkCounters counters;
  int splits = 0;
  int level_splits = 0;
  int base_cases = 0;
  std::int64_t audit_checks = 0;
  std::int64_t audit_violations = 0;
  std::vector<std::string> violations;  // first few, for diagnostics
};

int default_base_threshold(int k, Mode mode);

ComponentSet kscc(const Graph& g, int k, Mode mode,
                  const KsccOptions& options = {}, KsccStats* stats = nullptr);

}  // namespace kconn

#endif  // KCONN_HIERARCHICAL_HPP_
