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

#include "kconn/io.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "kconn/hierarchical.hpp"
#include "kconn/local2e.hpp"
#include "kconn/oracle.hpp"

namespace kconn {

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::kEdgelist;
  if (name == "dimacs") return GraphFormat::kDimacs;
  throw std::invalid_argument("unknown graph format: " + std::string(name));
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  throw std::invalid_argument("unknown output format: " + std::string(name));
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

long long to_int(std::string_view token, int line) {
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'",
                     line);
  }
  return value;
}

class GraphBuilder {
 public:
  void start(long long n, long long m, int line) {
    if (n < 0 || m < 0 || n > (1LL << 30)) {
      throw ParseError("bad header counts", line);
    }
    g_ = Graph(static_cast<int>(n));
    expected_m_ = m;
  }

  void add(long long u, long long v, int line) {
    const int n = g_.num_vertices();
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("vertex out of range", line);
    }
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line);
    const auto key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
    if (!seen_.insert(key).second) {
      throw ParseError("duplicate edge (" + std::to_string(u) + ", " +
                           std::to_string(v) + ")",
                       line);
    }
    g_.add_edge_unchecked(static_cast<int>(u), static_cast<int>(v));
  }

  Graph finish(int line) {
    if (g_.num_edges() != expected_m_) {
      throw ParseError("expected " + std::to_string(expected_m_) +
                           " edges, found " + std::to_string(g_.num_edges()),
                       line);
    }
    return std::move(g_);
  }

 private:
  Graph g_;
  long long expected_m_ = 0;
  std::unordered_set<std::uint64_t> seen_;
};

}  // namespace

Graph parse_graph_text(std::string_view text, GraphFormat format) {
  GraphBuilder builder;
  bool have_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (format == GraphFormat::kEdgelist) {
      if (tok[0].front() == '#') continue;
      if (tok.size() != 2) throw ParseError("expected two integers", line_no);
      const long long a = to_int(tok[0], line_no);
      const long long b = to_int(tok[1], line_no);
      if (!have_header) {
        builder.start(a, b, line_no);
        have_header = true;
      } else {
        builder.add(a, b, line_no);
      }
    } else {
      if (tok[0] == "c") continue;
      if (tok[0] == "p") {
        if (have_header) throw ParseError("second problem line", line_no);
        if (tok.size() < 4) throw ParseError("malformed problem line", line_no);
        builder.start(to_int(tok[2], line_no), to_int(tok[3], line_no),
                      line_no);
        have_header = true;
      } else if (tok[0] == "a") {
        if (!have_header) throw ParseError("arc before problem line", line_no);
        if (tok.size() < 3) throw ParseError("malformed arc line", line_no);
        builder.add(to_int(tok[1], line_no) - 1, to_int(tok[2], line_no) - 1,
                    line_no);
      } else {
        throw ParseError("unknown line type '" + std::string(tok[0]) + "'",
                         line_no);
      }
    }
  }
  if (!have_header) throw ParseError("missing header", line_no);
  return builder.finish(line_no);
}

Graph parse_graph(const std::string& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str(), format);
}

std::string write_edgelist(const Graph& g) {
  std::ostringstream os;
  os << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edge_list()) os << e.tail << ' ' << e.head << '\n';
  return os.str();
}

std::string emit_components(const ComponentSet& cs, OutputFormat format,
                            const EmitOptions& options) {
  auto keep = [&](const Component& c) {
    return !(options.suppress_degenerate && c.degenerate);
  };
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json doc;
    doc["mode"] = to_string(cs.mode);
    doc["k"] = cs.k;
    doc["components"] = nlohmann::ordered_json::array();
    for (const auto& c : cs.components) {
      if (!keep(c)) continue;
      nlohmann::ordered_json jc;
      jc["vertices"] = c.vertices;
      if (cs.mode == Mode::kVertex) {
        auto edges = nlohmann::ordered_json::array();
        for (const Edge& e : c.edges) edges.push_back({e.tail, e.head});
        jc["edges"] = std::move(edges);
        jc["degenerate"] = c.degenerate;
      }
      doc["components"].push_back(std::move(jc));
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& c : cs.components) {
    if (!keep(c)) continue;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      os << (i ? " " : "") << c.vertices[i];
    }
    if (cs.mode == Mode::kVertex) {
      os << " |";
      for (const Edge& e : c.edges) os << ' ' << e.tail << "->" << e.head;
      if (c.degenerate) os << " # degenerate";
    }
    os << '\n';
  }
  return os.str();
}

std::uint64_t digest(const ComponentSet& cs) {
  std::string text = std::string("mode=") + to_string(cs.mode) +
                     " k=" + std::to_string(cs.k) + "\n" +
                     emit_components(cs, OutputFormat::kText);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest_hex(const ComponentSet& cs) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(digest(cs)));
  return buf;
}

Graph gen_random(int n, double p, std::uint64_t seed) {
  if (n < 0) throw PreconditionError("gen_random: negative n");
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("gen_random: p out of [0,1]");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      // 53 random bits, uniform in [0,1).
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) g.add_edge_unchecked(u, v);
    }
  }
  return g;
}

Graph gen_blocks_vs_components(const Graph& g) {
  const int n = g.num_vertices();
  const Vertex s1 = n, t1 = n + 1, s2 = n + 2, t2 = n + 3;
  Graph out(n + 4);
  for (const Edge& e : g.edge_list()) out.add_edge_unchecked(e.tail, e.head);
  out.add_edge_unchecked(s1, t1);
  out.add_edge_unchecked(s2, t2);
  for (Vertex v = 0; v < n; ++v) {
    out.add_edge_unchecked(v, s1);
    out.add_edge_unchecked(v, s2);
    out.add_edge_unchecked(t1, v);
    out.add_edge_unchecked(t2, v);
  }
  return out;
}

namespace {

void add_clique(Graph& g, Vertex first, int b) {
  for (int gap = 1; gap < b; ++gap) {
    for (int i = 0; i + gap < b; ++i) {
      g.add_edge_unchecked(first + i, first + i + gap);
      g.add_edge_unchecked(first + i + gap, first + i);
    }
  }
}

}  // namespace

Graph gen_adversarial_chain(int c, int b) {
  if (c < 2 || b < 3) throw PreconditionError("chain: need c >= 2 and b >= 3");
  Graph g(c * (b - 1) + 1);
  for (int j = 0; j < c; ++j) add_clique(g, j * (b - 1), b);
  return g;
}

Graph named_graph(std::string_view name) {
  auto build = [](int n, std::vector<Edge> edges) {
    return Graph::from_edges(n, edges);
  };
  if (name == "C3") return build(3, {{0, 1}, {1, 2}, {2, 0}});
  if (name == "BiTri") {
    Graph g(3);
    add_clique(g, 0, 3);
    return g;
  }
  if (name == "Bowtie") return gen_adversarial_chain(2, 3);
  if (name == "TwoCycleBridge") {
    return build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                     {2, 3}, {5, 0}});
  }
  if (name == "K4b") {
    Graph g(4);
    add_clique(g, 0, 4);
    return g;
  }
  if (name == "Path3") return build(3, {{0, 1}, {1, 2}});
  if (name == "Diamond") return build(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  throw std::invalid_argument("unknown graph name: " + std::string(name));
}

AlgorithmRegistry default_algorithms() {
  AlgorithmRegistry reg;
  reg["kscc"] = [](const Graph& g, int k, Mode mode) {
    KsccStats stats;
    KsccOptions opt;
    std::map<int, int> by_level;
    opt.trace = [&](const TraceEvent& ev) {
      if (ev.event != "split") return;
      for (const auto& [key, value] : ev.numbers) {
        if (key == "level") ++by_level[static_cast<int>(value)];
      }
    };
    AlgorithmOutput out{kscc(g, k, mode, opt, &stats), {}, {}};
    out.counters = stats.counters;
    out.splits_by_level = std::move(by_level);
    return out;
  };
  reg["naive"] = [](const Graph& g, int k, Mode mode) {
    return AlgorithmOutput{naive_kscc(g, k, mode), {}, {}};
  };
  reg["sparse2e"] = [](const Graph& g, int k, Mode mode) {
    if (k != 2 || mode != Mode::kEdge) {
      throw PreconditionError("sparse2e computes 2-edge components only");
    }
    SparseStats stats;
    AlgorithmOutput out{two_escc_sparse(g, {}, &stats), {}, {}};
    out.counters = stats.counters;
    return out;
  };
  return reg;
}

std::vector<RunReport> bench_run(const BenchConfig& config) {
  return bench_run(config, default_algorithms());
}

std::vector<RunReport> bench_run(const BenchConfig& config,
                                 const AlgorithmRegistry& registry) {
  std::vector<RunReport> reports;
  if (config.algorithms.empty()) return reports;
  for (const auto& name : config.algorithms) {
    if (!registry.count(name)) {
      throw std::invalid_argument("unknown algorithm: " + name);
    }
  }
  for (int size : config.sizes) {
    for (std::uint64_t seed : config.seeds) {
      Graph g;
      std::ostringstream instance;
      if (config.generator == "random") {
        g = gen_random(size, config.p, seed);
        instance << "random(n=" << size << ",p=" << config.p << ")";
      } else if (config.generator == "blocks") {
        g = gen_blocks_vs_components(gen_random(size, config.p, seed));
        instance << "blocks(n=" << size << ",p=" << config.p << ")";
      } else if (config.generator == "chain") {
        g = gen_adversarial_chain(size, config.block_size);
        instance << "chain(c=" << size << ",b=" << config.block_size << ")";
      } else {
        throw std::invalid_argument("unknown generator: " + config.generator);
      }
      std::string first_digest;
      std::string first_algorithm;
      for (const auto& name : config.algorithms) {
        RunReport r;
        r.algorithm = name;
        r.instance = instance.str();
        r.seed = seed;
        r.n = g.num_vertices();
        r.m = g.num_edges();
        r.k = config.k;
        r.mode = config.mode;
        const auto t0 = std::chrono::steady_clock::now();
        const AlgorithmOutput out = registry.at(name)(g, config.k, config.mode);
        const auto t1 = std::chrono::steady_clock::now();
        if (config.timing) {
          r.wall_ms =
              std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
        r.counters = out.counters;
        r.splits_by_level = out.splits_by_level;
        r.components = static_cast<int>(out.components.components.size());
        r.digest = digest_hex(out.components);
        if (first_digest.empty()) {
          first_digest = r.digest;
          first_algorithm = name;
        } else if (r.digest != first_digest) {
          throw DigestMismatch("digest mismatch on " + r.instance + " seed " +
                               std::to_string(seed) + ": " + first_algorithm +
                               "=" + first_digest + ", " + name + "=" +
                               r.digest);
        }
        reports.push_back(std::move(r));
      }
    }
  }
  return reports;
}

std::string reports_to_json(const std::vector<RunReport>& reports) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["algorithm"] = r.algorithm;
    j["instance"] = r.instance;
    j["seed"] = r.seed;
    j["n"] = r.n;
    j["m"] = r.m;
    j["k"] = r.k;
    j["mode"] = to_string(r.mode);
    if (r.wall_ms) j["wall_ms"] = *r.wall_ms;
    j["level_edge_scans"] = r.counters.level_edge_scans;
    j["flow_augmentations"] = r.counters.flow_augmentations;
    j["bfs_ball_edges"] = r.counters.bfs_ball_edges;
    if (!r.splits_by_level.empty()) {
      nlohmann::ordered_json levels;
      for (const auto& [level, count] : r.splits_by_level) {
        levels[std::to_string(level)] = count;
      }
      j["splits_by_level"] = std::move(levels);
    }
    j["components"] = r.components;
    j["digest"] = r.digest;
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace kconn
