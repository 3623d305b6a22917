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

#ifndef KCONN_IO_HPP_
#define KCONN_IO_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kconn/components.hpp"
#include "kconn/connectivity.hpp"
#include "kconn/graph.hpp"

namespace kconn {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class GraphFormat { kEdgelist, kDimacs };
GraphFormat parse_graph_format(std::string_view name);

Graph parse_graph_text(std::string_view text, GraphFormat format);
Graph parse_graph(const std::string& path, GraphFormat format);
std::string write_edgelist(const Graph& g);

enum class OutputFormat { kText, kJson };
OutputFormat parse_output_format(std::string_view name);

struct EmitOptions {
  bool suppress_degenerate = false;
};

std::string emit_components(const ComponentSet& cs, OutputFormat format,
                            const EmitOptions& options = {});

// FNV-1a (64 bit) over the canonical text form, including mode and k.
std::uint64_t digest(const ComponentSet& cs);
std::string digest_hex(const ComponentSet& cs);

// Generators. All are deterministic; random ones use std::mt19937_64.
Graph gen_random(int n, double p, std::uint64_t seed);
Graph gen_blocks_vs_components(const Graph& g);
Graph gen_adversarial_chain(int c, int b);
// C3, BiTri, Bowtie, TwoCycleBridge, K4b, Path3, Diamond.
Graph named_graph(std::string_view name);

class DigestMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunReport {
  std::string algorithm;
  std::string instance;
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  int k = 2;
  Mode mode = Mode::kEdge;
  std::optional<double> wall_ms;
  WorkCounters counters;
  std::map<int, int> splits_by_level;  // level 0 is the whole-graph search
  int components = 0;
  std::string digest;
};

struct AlgorithmOutput {
  ComponentSet components;
  WorkCounters counters;
  std::map<int, int> splits_by_level;
};
using Algorithm = std::function<AlgorithmOutput(const Graph&, int k, Mode)>;
using AlgorithmRegistry = std::map<std::string, Algorithm>;

// kscc, naive and sparse2e (edge mode, k = 2 only).
AlgorithmRegistry default_algorithms();

struct BenchConfig {
  std::string generator = "random";  // random | chain | blocks
  std::vector<int> sizes;            // n (random, blocks) or c (chain)
  double p = 0.1;
  int block_size = 3;                // chain only
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> algorithms;
  int k = 2;
  Mode mode = Mode::kEdge;
  bool timing = false;
};

// Runs every algorithm on every instance. Throws DigestMismatch naming the
// instance and seed when algorithms disagree.
std::vector<RunReport> bench_run(const BenchConfig& config,
                                 const AlgorithmRegistry& registry);
std::vector<RunReport> bench_run(const BenchConfig& config);

std::string reports_to_json(const std::vector<RunReport>& reports);

}  // namespace kconn

#endif  // KCONN_IO_HPP_
