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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "json.hpp"
#include "kconn/hierarchical.hpp"
#include "kconn/io.hpp"
#include "kconn/oracle.hpp"

using namespace kconn;
using namespace kconn::testing;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(KCONN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("kconn_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("parse") {
  const Graph c3 = parse_graph_text("3 3\n0 1\n1 2\n2 0\n", GraphFormat::kEdgelist);
  CHECK(sorted_edges(c3) == sorted_edges(named_graph("C3")));
  const Graph d = parse_graph_text("c tiny\np sp 3 3\na 1 2\na 2 3\na 3 1\n",
                                   GraphFormat::kDimacs);
  CHECK(sorted_edges(d) == sorted_edges(named_graph("C3")));

  auto line_of = [](const std::string& text, GraphFormat f) {
    try {
      (void)parse_graph_text(text, f);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("3 1\n0 0\n", GraphFormat::kEdgelist) == 2);
  CHECK(line_of("3 2\n0 1\n0 1\n", GraphFormat::kEdgelist) == 3);
  CHECK(line_of("3 1\n0 x\n", GraphFormat::kEdgelist) == 2);
  CHECK(line_of("3 1\n0 7\n", GraphFormat::kEdgelist) == 2);
  CHECK(line_of("p sp 2 1\nq 1 2\n", GraphFormat::kDimacs) == 2);
  CHECK(line_of("a 1 2\n", GraphFormat::kDimacs) == 1);

  // parse . emit . parse is stable.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_random(10, 0.3, seed);
    const std::string once = write_edgelist(g);
    const Graph back = parse_graph_text(once, GraphFormat::kEdgelist);
    CHECK(sorted_edges(back) == sorted_edges(g));
    CHECK(write_edgelist(back) == once);
  }
}

TEST_CASE("emit") {
  ComponentSet one;
  one.components = {{{0, 1, 2}, {}, false}};
  CHECK(emit_components(one, OutputFormat::kText) == "0 1 2\n");

  const ComponentSet bow = kscc(named_graph("Bowtie"), 2, Mode::kVertex);
  const std::string text = emit_components(bow, OutputFormat::kText);
  CHECK(text ==
        "0 1 2 | 0->1 0->2 1->0 1->2 2->0 2->1\n"
        "2 3 4 | 2->3 2->4 3->2 3->4 4->2 4->3\n");

  const auto j = nlohmann::json::parse(emit_components(bow, OutputFormat::kJson));
  CHECK(j["mode"] == "vertex");
  CHECK(j["k"] == 2);
  CHECK(j["components"].size() == 2);
  CHECK(j["components"][0]["edges"].size() == 6);

  CHECK(emit_components(kscc(Graph(0), 2, Mode::kEdge), OutputFormat::kText).empty());

  // Degenerate pieces are flagged and can be hidden.
  const ComponentSet p = kscc(path3(), 2, Mode::kVertex);
  CHECK(emit_components(p, OutputFormat::kText).find("# degenerate") !=
        std::string::npos);
  CHECK(emit_components(p, OutputFormat::kText, {true}).empty());
}

TEST_CASE("digest") {
  const ComponentSet a = kscc(named_graph("K4b"), 2, Mode::kEdge);
  const ComponentSet b = kscc(named_graph("K4b"), 2, Mode::kVertex);
  CHECK(digest_hex(a).size() == 16);
  CHECK(digest_hex(a) == digest_hex(kscc(named_graph("K4b"), 2, Mode::kEdge)));
  CHECK(digest_hex(a) != digest_hex(b));
}

TEST_CASE("generators") {
  CHECK(gen_random(5, 0.0, 1).num_edges() == 0);
  CHECK(sorted_edges(gen_random(4, 1.0, 1)) == sorted_edges(named_graph("K4b")));
  CHECK(sorted_edges(gen_random(30, 0.2, 9)) == sorted_edges(gen_random(30, 0.2, 9)));

  const Graph aug = gen_blocks_vs_components(named_graph("C3"));
  CHECK(aug.num_vertices() == 7);
  CHECK(aug.num_edges() == 17);

  CHECK(sorted_edges(gen_adversarial_chain(2, 3)) ==
        sorted_edges(named_graph("Bowtie")));
  const Graph c33 = gen_adversarial_chain(3, 3);
  CHECK(c33.num_vertices() == 7);
  CHECK(strong_articulation_points(c33).size() == 2);
}

TEST_CASE("bench") {
  BenchConfig cfg;
  cfg.sizes = {30};
  cfg.p = 0.1;
  for (std::uint64_t s = 0; s < 10; ++s) cfg.seeds.push_back(s);
  cfg.algorithms = {"kscc", "naive"};
  const auto reports = bench_run(cfg);
  REQUIRE(reports.size() == 20);
  for (std::size_t i = 0; i < reports.size(); i += 2) {
    CHECK(reports[i].digest == reports[i + 1].digest);
  }
  CHECK(reports_to_json(reports) == reports_to_json(bench_run(cfg)));

  cfg.algorithms.clear();
  CHECK(bench_run(cfg).empty());

  // A deliberately broken algorithm must be caught.
  AlgorithmRegistry reg = default_algorithms();
  reg["broken"] = [](const Graph& g, int k, Mode mode) {
    AlgorithmOutput out{naive_kscc(g, k, mode), {}, {}};
    out.components.components.pop_back();
    return out;
  };
  cfg.algorithms = {"kscc", "broken"};
  try {
    (void)bench_run(cfg, reg);
    FAIL("mismatch not detected");
  } catch (const DigestMismatch& e) {
    CHECK(std::string(e.what()).find("seed 0") != std::string::npos);
  }
}

TEST_CASE("cli") {
  const std::string bow = temp_file("bowtie.txt", write_edgelist(named_graph("Bowtie")));
  const Run v = run("kvscc " + bow + " --k 2");
  CHECK(v.status == 0);
  CHECK(v.out == emit_components(kscc(named_graph("Bowtie"), 2, Mode::kVertex),
                                 OutputFormat::kText));
  const Run e = run("kescc " + bow + " --k 2 --format json --digest");
  CHECK(e.status == 0);
  CHECK(e.out.find("digest ") != std::string::npos);
  CHECK(run("scc " + bow).out == "0 1 2 3 4\n");
  CHECK(run("sparse2e " + bow).out == "0 1 2 3 4\n");
  CHECK(run("oracle " + bow + " --mode vertex --method brute").out == v.out);
  CHECK(run("gen chain --c 2 --b 3").out == write_edgelist(named_graph("Bowtie")));

  const std::string bad = temp_file("bad.txt", "3 1\n0 0\n");
  CHECK(run("kescc " + bad).status == 1);
  CHECK(run("kescc /nonexistent/file").status != 0);
  CHECK(run("bench --sizes 20 --seeds 3 --algorithms kscc,naive").status == 0);
  CHECK(run("bench --sizes 20 --seeds 3 --algorithms kscc,nothing").status == 1);
}
