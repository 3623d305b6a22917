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

// Acceptance suite. One PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kconn/hierarchical.hpp"
#include "kconn/io.hpp"
#include "kconn/local2e.hpp"
#include "kconn/oracle.hpp"

using namespace kconn;

namespace {

int failures = 0;

void report(const char* id, bool ok, const std::string& detail) {
  std::cout << id << ' ' << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Graph from_mask(int n, std::uint64_t bits) {
  Graph g(n);
  int idx = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (bits >> idx & 1) g.add_edge(u, v);
      ++idx;
    }
  }
  return g;
}

// Small corpus: every graph on n <= 4, 2000 sampled edge sets on n = 5,
// 500 random graphs with n <= 10.
std::vector<Graph> small_corpus() {
  std::vector<Graph> out;
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t total = 1ULL << (n * (n - 1));
    for (std::uint64_t bits = 0; bits < total; ++bits) out.push_back(from_mask(n, bits));
  }
  std::mt19937_64 rng(20261019);
  for (int i = 0; i < 2000; ++i) out.push_back(from_mask(5, rng() & ((1ULL << 20) - 1)));
  const double ps[] = {0.1, 0.2, 0.3, 0.5};
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng() % 10);
    out.push_back(gen_random(n, ps[i % 4], rng()));
  }
  return out;
}

struct Named {
  std::string name;
  Graph g;
};

// Medium corpus: 300 random graphs (n <= 60) and 50 adversarial chains.
std::vector<Named> medium_corpus() {
  std::vector<Named> out;
  const double ps[] = {0.05, 0.1, 0.3};
  for (int i = 0; i < 300; ++i) {
    const int n = 5 + (i * 37) % 56;
    const double p = ps[i % 3];
    out.push_back({"random(n=" + std::to_string(n) + ",p=" + std::to_string(p) +
                       ",seed=" + std::to_string(i) + ")",
                   gen_random(n, p, static_cast<std::uint64_t>(i))});
  }
  for (int i = 0; i < 50; ++i) {
    const int c = 2 + i % 10;
    const int b = 3 + i / 10;
    out.push_back({"chain(c=" + std::to_string(c) + ",b=" + std::to_string(b) + ")",
                   gen_adversarial_chain(c, b)});
  }
  return out;
}

KsccOptions pure_hierarchical() {
  KsccOptions opt;
  opt.base_threshold = 0;
  return opt;
}

void criterion1(const std::vector<Graph>& small) {
  const auto t0 = std::chrono::steady_clock::now();
  int bad = 0;
  std::string first;
  for (std::size_t i = 0; i < small.size(); ++i) {
    const Graph& g = small[i];
    for (Mode mode : {Mode::kEdge, Mode::kVertex}) {
      const ComponentSet brute = brute_force_kscc(g, 2, mode);
      const bool ok = kscc(g, 2, mode) == brute &&
                      kscc(g, 2, mode, pure_hierarchical()) == brute &&
                      naive_kscc(g, 2, mode) == brute;
      if (!ok) {
        ++bad;
        if (first.empty()) {
          first = " first=#" + std::to_string(i) + "/" + to_string(mode);
        }
      }
    }
  }
  std::ostringstream os;
  os << "small oracle equivalence, k=2, both modes: " << small.size()
     << " graphs, mismatches=" << bad << first << " (" << seconds_since(t0)
     << " s)";
  report("C1", bad == 0, os.str());
}

void criterion2(const std::vector<Named>& medium) {
  const auto t0 = std::chrono::steady_clock::now();
  int runs = 0, bad = 0;
  std::string first;
  for (const auto& [name, g] : medium) {
    for (Mode mode : {Mode::kEdge, Mode::kVertex}) {
      for (int k = 2; k <= 4; ++k) {
        const ComponentSet naive = naive_kscc(g, k, mode);
        const std::string want = digest_hex(naive);
        for (const KsccOptions& opt : {KsccOptions{}, pure_hierarchical()}) {
          ++runs;
          const ComponentSet got = kscc(g, k, mode, opt);
          if (!(got == naive) || digest_hex(got) != want) {
            ++bad;
            if (first.empty()) {
              first = " first=" + name + "/" + to_string(mode) + "/k=" + std::to_string(k);
            }
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << "medium oracle equivalence, k=2..4, both modes, digests: " << runs
     << " runs, mismatches=" << bad << first << " (" << seconds_since(t0) << " s)";
  report("C2", bad == 0, os.str());
}

void criterion3(const std::vector<Graph>& small, const std::vector<Named>& medium) {
  const auto t0 = std::chrono::steady_clock::now();
  int runs = 0, bad = 0;
  auto check = [&](const Graph& g) {
    ++runs;
    if (!(two_escc_sparse(g) == kscc(g, 2, Mode::kEdge))) ++bad;
  };
  for (const Graph& g : small) {
    check(g);
    check(constant_degree_transform(g).graph);
  }
  for (const auto& item : medium) {
    check(item.g);
    check(constant_degree_transform(item.g).graph);
  }
  std::ostringstream os;
  os << "sparse 2eSCC equals kscc(2,edge), plain and pre-expanded: " << runs
     << " graphs, mismatches=" << bad << " (" << seconds_since(t0) << " s)";
  report("C3", bad == 0, os.str());
}

void criterion4(const std::vector<Named>& medium) {
  const auto t0 = std::chrono::steady_clock::now();
  std::int64_t checks = 0, violations = 0;
  int splits = 0;
  std::string first;
  for (const auto& [name, g] : medium) {
    for (Mode mode : {Mode::kEdge, Mode::kVertex}) {
      for (int k = 2; k <= 4; ++k) {
        KsccOptions opt = pure_hierarchical();
        opt.audit = true;
        opt.audit_seed = static_cast<std::uint64_t>(g.num_vertices() * 7 + k);
        KsccStats st;
        (void)kscc(g, k, mode, opt, &st);
        checks += st.audit_checks;
        violations += st.audit_violations;
        splits += st.splits;
        if (first.empty() && !st.violations.empty()) first = " first=" + st.violations[0];
      }
    }
  }
  std::ostringstream os;
  os << "split invariants (size bound, nonempty rest, isolation, Menger sampling n<=40): "
     << splits << " splits, " << checks << " checks, violations=" << violations
     << first << " (" << seconds_since(t0) << " s)";
  report("C4", violations == 0, os.str());
}

void criterion5() {
  int bad = 0, degree_bad = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 40;
    const Graph g = gen_random(n, i % 2 ? 0.1 : 0.3, 5000 + static_cast<std::uint64_t>(i));
    const ExpandedGraph ex = constant_degree_transform(g);
    if (ex.graph.max_in_degree() > 3 || ex.graph.max_out_degree() > 3) ++degree_bad;
    const ComponentSet back =
        project_components(ex.mapping, g, naive_kscc(ex.graph, 2, Mode::kEdge));
    if (!(back == naive_kscc(g, 2, Mode::kEdge))) ++bad;
  }
  std::ostringstream os;
  os << "degree transform: 200 graphs, projection mismatches=" << bad
     << ", max degree > 3: " << degree_bad;
  report("C5", bad == 0 && degree_bad == 0, os.str());
}

// Every pair of the first n vertices stays mutually reachable after deleting
// any single edge, checked by plain BFS.
bool originals_two_edge_connected(const Graph& g, int n) {
  // Every original vertex reaches 0 and is reached from 0.
  auto all_reach = [&](EdgeId skip) {
    for (bool rev : {false, true}) {
      std::vector<char> seen(g.num_vertices(), 0);
      std::vector<Vertex> q{0};
      seen[0] = 1;
      for (std::size_t i = 0; i < q.size(); ++i) {
        auto visit = [&](EdgeId e) {
          if (e == skip) return;
          const Vertex w = rev ? g.edge(e).tail : g.edge(e).head;
          if (!seen[w]) {
            seen[w] = 1;
            q.push_back(w);
          }
        };
        if (rev) {
          g.for_each_in_edge(q[i], visit);
        } else {
          g.for_each_out_edge(q[i], visit);
        }
      }
      for (Vertex v = 0; v < n; ++v) {
        if (!seen[v]) return false;
      }
    }
    return true;
  };
  if (!all_reach(kNoEdge)) return false;
  for (EdgeId e : g.live_edge_ids()) {
    if (!all_reach(e)) return false;
  }
  return true;
}

void criterion6() {
  int menger_bad = 0, comp_bad = 0;
  for (int i = 0; i < 50; ++i) {
    const int n = 3 + i % 28;
    const Graph base = gen_random(n, i % 2 ? 0.1 : 0.25, 9000 + static_cast<std::uint64_t>(i));
    const Graph aug = gen_blocks_vs_components(base);
    if (!originals_two_edge_connected(aug, n)) ++menger_bad;
    ComponentSet want = naive_kscc(base, 2, Mode::kEdge);
    for (Vertex v = n; v < n + 4; ++v) want.components.push_back({{v}, {}, false});
    if (!(kscc(aug, 2, Mode::kEdge) == want) || !(two_escc_sparse(aug) == want)) ++comp_bad;
  }
  std::ostringstream os;
  os << "blocks vs components: 50 base graphs, pairs not 2-edge-connected="
     << menger_bad << ", 2eSCC mismatches=" << comp_bad;
  report("C6", menger_bad == 0 && comp_bad == 0, os.str());
}

void criterion7() {
  // Empirical evidence only: a growth check, not a proof of the bound.
  const auto t0 = std::chrono::steady_clock::now();
  const int sizes[] = {200, 400, 800};
  bool ok = true;
  std::ostringstream os;
  os << "EMPIRICAL work trend, p=0.5, k=2, 5 seeds:";
  for (Mode mode : {Mode::kEdge, Mode::kVertex}) {
    double mean[3] = {0, 0, 0};
    double worst_per_n2 = 0;
    for (int s = 0; s < 3; ++s) {
      const int n = sizes[s];
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        KsccStats st;
        (void)kscc(gen_random(n, 0.5, seed), 2, mode, {}, &st);
        const double c = static_cast<double>(st.counters.level_edge_scans);
        mean[s] += c / 5;
        worst_per_n2 = std::max(worst_per_n2, c / (double(n) * n));
      }
    }
    const double r1 = mean[1] / mean[0], r2 = mean[2] / mean[1];
    ok = ok && worst_per_n2 <= 64 && r1 <= 5 && r2 <= 5;
    os << ' ' << to_string(mode) << "[max counter/n^2=" << worst_per_n2
       << " ratios=" << r1 << "," << r2 << "]";
  }
  os << " (" << seconds_since(t0) << " s)";
  report("C7", ok, os.str());
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(KCONN_CLI_PATH) + " " + args + " 2>&1";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  out += "\nexit=" + std::to_string(pclose(p));
  return out;
}

void criterion8() {
  const auto dir = std::filesystem::temp_directory_path() / "kconn_acceptance";
  std::filesystem::create_directories(dir);
  const std::string rnd = (dir / "random.txt").string();
  const std::string chain = (dir / "chain.txt").string();
  std::ofstream(rnd) << write_edgelist(gen_random(40, 0.12, 3));
  std::ofstream(chain) << write_edgelist(gen_adversarial_chain(5, 4));
  const std::vector<std::string> cmds = {
      "gen random --n 30 --p 0.2 --seed 4",
      "gen blocks --n 10 --p 0.3 --seed 2",
      "gen named --name Bowtie",
      "scc " + rnd + " --format json",
      "kescc " + rnd + " --k 2 --digest --trace",
      "kescc " + rnd + " --k 3 --format json --digest",
      "kvscc " + chain + " --k 2 --digest --trace",
      "kvscc " + rnd + " --k 3 --format json --suppress-degenerate --digest",
      "sparse2e " + rnd + " --digest --trace",
      "sparse2e " + rnd + " --epsilon 0.3 --format json",
      "oracle " + chain + " --mode vertex --k 2 --digest",
      "bench --generator random --sizes 20,30 --seeds 4 --algorithms kscc,naive,sparse2e",
      "bench --generator chain --sizes 3,4 --seeds 1 --algorithms kscc,naive --mode vertex",
      "kescc " + (dir / "missing.txt").string(),
  };
  int differ = 0;
  std::string first;
  for (const auto& c : cmds) {
    if (capture(c) != capture(c)) {
      ++differ;
      if (first.empty()) first = " first='" + c + "'";
    }
  }
  std::ostringstream os;
  os << "CLI determinism: " << cmds.size()
     << " invocations run twice, differing outputs=" << differ << first;
  report("C8", differ == 0, os.str());
}

}  // namespace

int main() {
  const std::vector<Graph> small = small_corpus();
  const std::vector<Named> medium = medium_corpus();
  criterion1(small);
  criterion2(medium);
  criterion3(small, medium);
  criterion4(medium);
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures))
            << std::endl;
  return failures;
}
