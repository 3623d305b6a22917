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
#include <numeric>
#include <random>
#include <sstream>

#include "kconn/hierarchical.hpp"
#include "kconn/oracle.hpp"

namespace kconn {

int default_base_threshold(int k, Mode mode) {
  if (mode == Mode::kVertex && k > 2) return 14 * k * k * k - 1;
  return 8;
}

namespace {

int ceil_log2(int x) {
  int i = 0;
  while ((1LL << i) < x) ++i;
  return i;
}

class Driver {
 public:
  Driver(const Graph& g, int k, Mode mode, const KsccOptions& options,
         KsccStats& stats)
      : original_(g),
        work_(g),
        k_(k),
        mode_(mode),
        options_(options),
        stats_(stats),
        threshold_(options.base_threshold.value_or(
            default_base_threshold(k, mode))),
        rng_(options.audit_seed) {
    orig_of_.resize(g.num_vertices());
    std::iota(orig_of_.begin(), orig_of_.end(), 0);
    mark_.assign(g.num_vertices(), 0);
  }

  ComponentSet run() {
    std::vector<std::vector<Vertex>> stack;
    if (original_.num_vertices() > 0) {
      std::vector<Vertex> all(original_.num_vertices());
      std::iota(all.begin(), all.end(), 0);
      stack.push_back(std::move(all));
    }
    while (!stack.empty()) {
      std::vector<Vertex> part = std::move(stack.back());
      stack.pop_back();
      step(part, stack);
    }
    return make_component_set(original_, mode_, k_, std::move(groups_));
  }

 private:
  void step(const std::vector<Vertex>& part,
            std::vector<std::vector<Vertex>>& stack) {
    const int n = static_cast<int>(part.size());
    if (n <= threshold_) {
      ++stats_.base_cases;
      const Subgraph sub = induced_subgraph(work_, part);
      for (auto& group : naive_kscc_groups(sub.graph, k_, mode_)) {
        for (Vertex& v : group) v = orig_of_[sub.to_parent[v]];
        groups_.push_back(std::move(group));
      }
      return;
    }
    int max_in = 0, max_out = 0;
    for (Vertex v : part) {
      max_in = std::max(max_in, work_.in_degree(v));
      max_out = std::max(max_out, work_.out_degree(v));
    }
    const int gamma = std::min(max_in, max_out);

    IsolationResult res;
    for (int i = 1; i < 30 && (1 << i) < gamma; ++i) {
      res = k_isolated_set_level(work_, part, i, k_, mode_, &stats_.counters);
      trace_level(n, i, res);
      if (!res.empty()) break;
    }
    std::optional<Subgraph> sub;
    if (res.empty()) {
      sub = induced_subgraph(work_, part);
      res = k_isolated_set(sub->graph, k_, mode_, &stats_.counters);
      if (res.empty()) {
        std::vector<Vertex> group;
        for (Vertex v : part) group.push_back(orig_of_[v]);
        groups_.push_back(std::move(group));
        return;
      }
      for (Vertex& v : res.s) v = sub->to_parent[v];
      for (Vertex& v : res.z_vertices) v = sub->to_parent[v];
      for (EdgeId& e : res.z_edges) e = sub->edge_to_parent[e];
    } else {
      ++stats_.level_splits;
    }
    ++stats_.splits;
    trace_split(n, gamma, res);
    if (options_.audit) audit(part, gamma, res);

    if (mode_ == Mode::kEdge) {
      split_edge(part, res, stack);
    } else {
      split_vertex(part, res, stack);
    }
  }

  // Marks `vertices` with a fresh stamp; mark_[v] == stamp_ afterwards.
  int stamp(std::span<const Vertex> vertices) {
    ++stamp_;
    mark_.resize(work_.num_vertices(), 0);
    for (Vertex v : vertices) mark_[v] = stamp_;
    return stamp_;
  }

  // Removes every live edge between `side` (scanned) and the vertices
  // carrying stamp `other`.
  void cut_between(std::span<const Vertex> side, int other) {
    std::vector<EdgeId> doomed;
    for (Vertex v : side) {
      work_.for_each_out_edge(v, [&](EdgeId e) {
        if (mark_[work_.edge(e).head] == other) doomed.push_back(e);
      });
      work_.for_each_in_edge(v, [&](EdgeId e) {
        if (mark_[work_.edge(e).tail] == other) doomed.push_back(e);
      });
    }
    for (EdgeId e : doomed) work_.remove_edge(e);
  }

  void split_edge(const std::vector<Vertex>& part, const IsolationResult& res,
                  std::vector<std::vector<Vertex>>& stack) {
    const int s_mark = stamp(res.s);
    std::vector<Vertex> rest;
    for (Vertex v : part) {
      if (mark_[v] != s_mark) rest.push_back(v);
    }
    if (res.s.size() <= rest.size()) {
      const int r_mark = stamp(rest);
      cut_between(res.s, r_mark);
    } else {
      cut_between(rest, s_mark);
    }
    stack.push_back(std::move(rest));
    stack.push_back(res.s);
  }

  void split_vertex(const std::vector<Vertex>& part, const IsolationResult& res,
                    std::vector<std::vector<Vertex>>& stack) {
    const std::vector<Vertex>& s = res.s;
    const std::vector<Vertex>& z = res.z_vertices;
    std::vector<Vertex> copy_of(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      copy_of[i] = work_.add_vertex();
      orig_of_.push_back(orig_of_[z[i]]);
    }
    mark_.resize(work_.num_vertices(), 0);
    ++stamp_;
    const int s_mark = stamp_;
    for (Vertex v : s) mark_[v] = s_mark;
    ++stamp_;
    const int z_mark = stamp_;
    std::vector<int> z_index(work_.num_vertices(), -1);
    for (std::size_t i = 0; i < z.size(); ++i) {
      mark_[z[i]] = z_mark;
      z_index[z[i]] = static_cast<int>(i);
    }

    // Edges between S and Z move to the copies; Z-Z edges are duplicated
    // among the copies. The copies' lists follow the order of z's lists.
    for (std::size_t i = 0; i < z.size(); ++i) {
      const Vertex zc = copy_of[i];
      for (EdgeId e : work_.in_edges(z[i])) {
        const Vertex t = work_.edge(e).tail;
        if (mark_[t] == s_mark) {
          work_.move_head(e, zc);
        } else if (mark_[t] == z_mark) {
          work_.add_edge_unchecked(copy_of[z_index[t]], zc);
        }
      }
      for (EdgeId e : work_.out_edges(z[i])) {
        if (mark_[work_.edge(e).head] == s_mark) work_.move_tail(e, zc);
      }
    }
    for (Vertex v : z) work_.compact(v);

    std::vector<Vertex> rest;   // V \ (S u Z)
    std::vector<Vertex> other;  // V \ S
    for (Vertex v : part) {
      if (mark_[v] == s_mark) continue;
      other.push_back(v);
      if (mark_[v] != z_mark) rest.push_back(v);
    }
    if (s.size() <= rest.size()) {
      ++stamp_;
      for (Vertex v : rest) mark_[v] = stamp_;
      cut_between(s, stamp_);
    } else {
      cut_between(rest, s_mark);
    }
    std::vector<Vertex> with_copies = s;
    with_copies.insert(with_copies.end(), copy_of.begin(), copy_of.end());
    stack.push_back(std::move(other));
    stack.push_back(std::move(with_copies));
  }

  void violation(const std::string& what) {
    ++stats_.audit_violations;
    if (stats_.violations.size() < 20) stats_.violations.push_back(what);
  }

  void audit(const std::vector<Vertex>& part, int gamma,
             const IsolationResult& res) {
    const int n = static_cast<int>(part.size());
    // (a) size bound at the first successful level.
    const int first = res.level > 0 ? res.level : ceil_log2(gamma);
    if (first > 1 && gamma > 0) {
      ++stats_.audit_checks;
      const long long bound = (1LL << (first - 1)) - k_ + 2;
      if (static_cast<long long>(res.s.size()) <= bound) {
        std::ostringstream os;
        os << "size bound: |S|=" << res.s.size() << " at level " << first
           << " (bound " << bound << ")";
        violation(os.str());
      }
    }
    // (b) something remains outside S and Z.
    ++stats_.audit_checks;
    if (static_cast<int>(res.s.size() + res.z_vertices.size()) >= n) {
      violation("nothing outside S and Z");
    }
    // (c) isolation from the definitions, on the part's own graph.
    const Subgraph sub = induced_subgraph(work_, part);
    std::vector<int> local(work_.num_vertices(), -1);
    for (int i = 0; i < n; ++i) local[part[i]] = i;
    std::vector<int> local_edge(work_.edge_slots(), -1);
    for (EdgeId e = 0; e < sub.graph.edge_slots(); ++e) {
      local_edge[sub.edge_to_parent[e]] = e;
    }
    IsolationResult loc = res;
    for (Vertex& v : loc.s) v = local[v];
    for (Vertex& v : loc.z_vertices) v = local[v];
    for (EdgeId& e : loc.z_edges) e = local_edge[e];
    ++stats_.audit_checks;
    if (!check_isolation(sub.graph, loc, k_, mode_)) {
      std::ostringstream os;
      os << "isolation check failed: provenance " << to_string(res.provenance)
         << ", level " << res.level << ", side " << to_string(res.side);
      violation(os.str());
    }
    // (d) sampled cross pairs are not k-connected.
    if (n > options_.audit_menger_max_n) return;
    std::vector<char> in_sz(n, 0);
    for (Vertex v : loc.s) in_sz[v] = 1;
    for (Vertex v : loc.z_vertices) in_sz[v] = 2;
    std::vector<Vertex> outside;
    for (Vertex v = 0; v < n; ++v) {
      if (!in_sz[v]) outside.push_back(v);
    }
    if (outside.empty()) return;
    for (int t = 0; t < options_.audit_menger_pairs; ++t) {
      const Vertex u = outside[rng_() % outside.size()];
      const Vertex v = loc.s[rng_() % loc.s.size()];
      ++stats_.audit_checks;
      if (pairwise_k_connected(sub.graph, u, v, k_, mode_)) {
        std::ostringstream os;
        os << "cross pair (" << orig_of_[part[u]] << ", " << orig_of_[part[v]]
           << ") is " << k_ << "-connected";
        violation(os.str());
      }
    }
  }

  void trace_level(int n, int level, const IsolationResult& res) {
    if (!options_.trace) return;
    TraceEvent ev;
    ev.event = "level";
    ev.numbers = {{"n", n},
                  {"level", level},
                  {"found", res.empty() ? 0 : 1},
                  {"blue", res.blue_count}};
    ev.labels = {{"provenance", to_string(res.provenance)}};
    options_.trace(ev);
  }

  void trace_split(int n, int gamma, const IsolationResult& res) {
    if (!options_.trace) return;
    TraceEvent ev;
    ev.event = "split";
    ev.numbers = {{"n", n},
                  {"gamma", gamma},
                  {"level", res.level},
                  {"s", static_cast<std::int64_t>(res.s.size())},
                  {"z", res.z_size()},
                  {"level_edge_scans", stats_.counters.level_edge_scans},
                  {"flow_augmentations", stats_.counters.flow_augmentations}};
    ev.labels = {{"provenance", to_string(res.provenance)},
                 {"side", to_string(res.side)}};
    options_.trace(ev);
  }

  const Graph& original_;
  Graph work_;
  int k_;
  Mode mode_;
  const KsccOptions& options_;
  KsccStats& stats_;
  int threshold_;
  std::mt19937_64 rng_;
  std::vector<Vertex> orig_of_;
  std::vector<int> mark_;
  int stamp_ = 0;
  std::vector<std::vector<Vertex>> groups_;
};

}  // namespace

ComponentSet kscc(const Graph& g, int k, Mode mode, const KsccOptions& options,
                  KsccStats* stats) {
  if (k < 2) throw PreconditionError("kscc: k must be >= 2");
  KsccStats local;
  Driver driver(g, k, mode, options, stats ? *stats : local);
  return driver.run();
}

}  // namespace kconn
