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

// kconn: command line front end.
//
//   kconn scc      FILE [--format text|json]
//   kconn kescc    FILE --k K
//   kconn kvscc    FILE --k K [--suppress-degenerate]
//   kconn sparse2e FILE [--epsilon E]
//   kconn oracle   FILE --k K --mode edge|vertex [--method naive|brute]
//   kconn gen      random|chain|blocks|named ...
//   kconn bench    --generator random --sizes 30,40 --seeds 10 ...

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kconn/hierarchical.hpp"
#include "kconn/io.hpp"
#include "kconn/local2e.hpp"
#include "kconn/oracle.hpp"

namespace {

using namespace kconn;

struct Common {
  std::string input;
  std::string input_format = "edgelist";
  std::string format = "text";
  bool trace = false;
  bool print_digest = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("input", c.input, "graph file")->required();
  app->add_option("--input-format", c.input_format, "edgelist or dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  app->add_option("--format", c.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app->add_flag("--trace", c.trace, "JSON trace events on stderr");
  app->add_flag("--digest", c.print_digest, "print the result digest");
}

TraceSink stderr_sink(bool enabled) {
  if (!enabled) return {};
  return [](const TraceEvent& ev) {
    nlohmann::ordered_json j;
    j["event"] = ev.event;
    for (const auto& [key, value] : ev.numbers) j[key] = value;
    for (const auto& [key, value] : ev.labels) j[key] = value;
    std::cerr << j.dump() << '\n';
  };
}

Mode parse_mode(const std::string& s) {
  if (s == "edge") return Mode::kEdge;
  if (s == "vertex") return Mode::kVertex;
  throw std::invalid_argument("unknown mode: " + s);
}

void print(const ComponentSet& cs, const Common& c, const EmitOptions& emit) {
  std::cout << emit_components(cs, parse_output_format(c.format), emit);
  if (c.print_digest) std::cout << "digest " << digest_hex(cs) << '\n';
}

Graph load(const Common& c) {
  return parse_graph(c.input, parse_graph_format(c.input_format));
}

std::vector<std::uint64_t> seed_list(const std::vector<std::string>& raw,
                                     std::uint64_t base) {
  // A single number means "that many seeds starting at --seed".
  std::vector<std::uint64_t> seeds;
  if (raw.size() == 1) {
    const auto count = std::stoull(raw[0]);
    for (std::uint64_t i = 0; i < count; ++i) seeds.push_back(base + i);
  } else {
    for (const auto& s : raw) seeds.push_back(std::stoull(s));
  }
  return seeds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-edge and k-vertex strongly connected components"};
  app.require_subcommand(1);

  Common c_scc, c_kescc, c_kvscc, c_sparse, c_oracle;
  int k = 2;
  bool suppress = false;
  double epsilon = 0.5;
  std::string mode = "edge";
  std::string method = "naive";
  int base_threshold = -1;

  auto* scc_cmd = app.add_subcommand("scc", "strongly connected components");
  add_common(scc_cmd, c_scc);

  auto* kescc_cmd = app.add_subcommand("kescc", "k-edge strongly connected components");
  add_common(kescc_cmd, c_kescc);
  kescc_cmd->add_option("--k", k, "connectivity order")->check(CLI::Range(2, 64));
  kescc_cmd->add_option("--base-threshold", base_threshold,
                        "naive below this size; 0 disables the base case");

  auto* kvscc_cmd = app.add_subcommand("kvscc", "k-vertex strongly connected components");
  add_common(kvscc_cmd, c_kvscc);
  kvscc_cmd->add_option("--k", k, "connectivity order")->check(CLI::Range(2, 64));
  kvscc_cmd->add_option("--base-threshold", base_threshold,
                        "naive below this size; 0 disables the base case");
  kvscc_cmd->add_flag("--suppress-degenerate", suppress,
                      "omit components with fewer than three vertices");

  auto* sparse_cmd = app.add_subcommand("sparse2e", "2-edge components, local search algorithm");
  add_common(sparse_cmd, c_sparse);
  sparse_cmd->add_option("--epsilon", epsilon, "ball depth factor in (0,1)");

  auto* oracle_cmd = app.add_subcommand("oracle", "baseline algorithms");
  add_common(oracle_cmd, c_oracle);
  oracle_cmd->add_option("--k", k)->check(CLI::Range(2, 64));
  oracle_cmd->add_option("--mode", mode)->check(CLI::IsMember({"edge", "vertex"}));
  oracle_cmd->add_option("--method", method)->check(CLI::IsMember({"naive", "brute"}));
  oracle_cmd->add_flag("--suppress-degenerate", suppress);

  std::string generator;
  int gen_n = 10, gen_c = 3, gen_b = 3;
  double gen_p = 0.1;
  std::uint64_t seed = 1;
  std::string name;
  auto* gen_cmd = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen_cmd->add_option("generator", generator, "random, chain, blocks or named")
      ->required()
      ->check(CLI::IsMember({"random", "chain", "blocks", "named"}));
  gen_cmd->add_option("--n", gen_n)->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--p", gen_p)->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--c", gen_c);
  gen_cmd->add_option("--b", gen_b);
  gen_cmd->add_option("--name", name, "C3, BiTri, Bowtie, TwoCycleBridge, K4b, Path3, Diamond");

  BenchConfig bench;
  std::vector<std::string> bench_seeds{"5"};
  bool bench_trace = false;
  auto* bench_cmd = app.add_subcommand("bench", "run algorithms and compare digests");
  bench_cmd->add_option("--generator", bench.generator)
      ->check(CLI::IsMember({"random", "chain", "blocks"}));
  bench_cmd->add_option("--sizes", bench.sizes)->delimiter(',')->required();
  bench_cmd->add_option("--p", bench.p)->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--block-size", bench.block_size);
  bench_cmd->add_option("--seeds", bench_seeds, "count, or comma separated list")
      ->delimiter(',');
  bench_cmd->add_option("--seed", seed, "first seed when --seeds is a count");
  bench_cmd->add_option("--algorithms", bench.algorithms)->delimiter(',');
  bench_cmd->add_option("--k", bench.k)->check(CLI::Range(2, 64));
  bench_cmd->add_option("--mode", mode)->check(CLI::IsMember({"edge", "vertex"}));
  bench_cmd->add_flag("--timing", bench.timing, "include wall time (not reproducible)");
  bench_cmd->add_flag("--trace", bench_trace);

  CLI11_PARSE(app, argc, argv);

  try {
    if (scc_cmd->parsed()) {
      const Graph g = load(c_scc);
      const SccPartition p = scc(g);
      ComponentSet cs;
      cs.k = 1;
      for (const auto& comp : p.components) cs.components.push_back({comp, {}, false});
      print(cs, c_scc, {});
    } else if (kescc_cmd->parsed()) {
      KsccOptions opt;
      opt.trace = stderr_sink(c_kescc.trace);
      if (base_threshold >= 0) opt.base_threshold = base_threshold;
      print(kscc(load(c_kescc), k, Mode::kEdge, opt), c_kescc, {});
    } else if (kvscc_cmd->parsed()) {
      KsccOptions opt;
      opt.trace = stderr_sink(c_kvscc.trace);
      if (base_threshold >= 0) opt.base_threshold = base_threshold;
      print(kscc(load(c_kvscc), k, Mode::kVertex, opt), c_kvscc, {suppress});
    } else if (sparse_cmd->parsed()) {
      SparseOptions opt;
      opt.epsilon = epsilon;
      opt.trace = stderr_sink(c_sparse.trace);
      print(two_escc_sparse(load(c_sparse), opt), c_sparse, {});
    } else if (oracle_cmd->parsed()) {
      const Graph g = load(c_oracle);
      const Mode m = parse_mode(mode);
      const ComponentSet cs =
          method == "brute" ? brute_force_kscc(g, k, m) : naive_kscc(g, k, m);
      print(cs, c_oracle, {suppress});
    } else if (gen_cmd->parsed()) {
      Graph g;
      if (generator == "random") {
        g = gen_random(gen_n, gen_p, seed);
      } else if (generator == "chain") {
        g = gen_adversarial_chain(gen_c, gen_b);
      } else if (generator == "blocks") {
        g = gen_blocks_vs_components(gen_random(gen_n, gen_p, seed));
      } else {
        g = named_graph(name);
      }
      std::cout << write_edgelist(g);
    } else if (bench_cmd->parsed()) {
      bench.mode = parse_mode(mode);
      bench.seeds = seed_list(bench_seeds, seed);
      const auto reports = bench_run(bench);
      if (bench_trace) {
        for (const auto& r : reports) {
          std::cerr << "{\"event\":\"run\",\"algorithm\":\"" << r.algorithm
                    << "\",\"seed\":" << r.seed << ",\"digest\":\"" << r.digest
                    << "\"}\n";
        }
      }
      std::cout << reports_to_json(reports);
    }
  } catch (const DigestMismatch& e) {
    nlohmann::ordered_json err{{"error", "digest-mismatch"}, {"message", e.what()}};
    std::cerr << err.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    nlohmann::ordered_json err{{"error", "failure"}, {"message", e.what()}};
    std::cerr << err.dump() << '\n';
    return 1;
  }
  return 0;
}
