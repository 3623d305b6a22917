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

#include <numeric>

#include "helpers.hpp"
#include "kconn/components.hpp"
#include "kconn/io.hpp"
#include "kconn/oracle.hpp"

using namespace kconn;
using namespace kconn::testing;

TEST_CASE("build") {
  const std::vector<Edge> c3{{0, 1}, {1, 2}, {2, 0}};
  const Graph g = Graph::from_edges(3, c3);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);

  const Graph one(1);
  CHECK(one.num_vertices() == 1);
  CHECK(one.num_edges() == 0);

  const std::vector<Edge> dup{{0, 1}, {0, 1}};
  try {
    (void)Graph::from_edges(3, dup);
    FAIL("duplicate accepted");
  } catch (const GraphError& e) {
    CHECK(e.offending() == Edge{0, 1});
  }
  Graph h(2);
  CHECK_THROWS_AS(h.add_edge(1, 1), GraphError);
  CHECK_THROWS_AS(h.add_edge(0, 5), GraphError);

  // Parallel edges only where asked for.
  Graph multi(2, true);
  multi.add_edge(0, 1);
  multi.add_edge(0, 1);
  CHECK(multi.num_edges() == 2);
}

TEST_CASE("tombstones and endpoint moves") {
  Graph g = named_graph("BiTri");
  const EdgeId e = g.out_edges(0).front();
  const Edge before = g.edge(e);
  g.remove_edge(e);
  CHECK(g.num_edges() == 5);
  CHECK_FALSE(g.has_edge(before.tail, before.head));
  CHECK(g.out_degree(0) == 1);

  std::vector<EdgeId> got;
  g.take_prefix(before.head, Direction::kForward, 10, got);
  CHECK(got.size() == 1);

  Graph m(4);
  const EdgeId x = m.add_edge(0, 1);
  m.move_head(x, 2);
  CHECK(m.edge(x) == Edge{0, 2});
  CHECK(m.in_degree(1) == 0);
  CHECK(m.in_degree(2) == 1);
  m.move_tail(x, 3);
  CHECK(m.out_degree(0) == 0);
  CHECK(m.out_edges(3) == std::vector<EdgeId>{x});
  CHECK(m.in_edges(1).empty());
}

TEST_CASE("reverse") {
  const Graph r = reverse(named_graph("C3"));
  CHECK(r.has_edge(0, 2));
  CHECK(r.has_edge(2, 1));
  CHECK(r.has_edge(1, 0));
  CHECK(r.num_edges() == 3);

  const Graph bitri = named_graph("BiTri");
  CHECK(sorted_edges(reverse(bitri)) == sorted_edges(bitri));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = gen_random(12, 0.2, seed);
    CHECK(sorted_edges(reverse(reverse(g))) == sorted_edges(g));
  }
}

TEST_CASE("induced subgraph") {
  const std::vector<Vertex> tri{0, 1, 2};
  const Subgraph s = induced_subgraph(named_graph("Bowtie"), tri);
  CHECK(sorted_edges(s.graph) == sorted_edges(named_graph("BiTri")));

  const std::vector<Vertex> two{0, 1};
  const Subgraph c = induced_subgraph(named_graph("C3"), two);
  CHECK(c.graph.num_vertices() == 2);
  CHECK(sorted_edges(c.graph) == std::vector<Edge>{{0, 1}});

  const Graph g = gen_random(9, 0.3, 7);
  std::vector<Vertex> all(9);
  std::iota(all.begin(), all.end(), 0);
  CHECK(sorted_edges(induced_subgraph(g, all).graph) == sorted_edges(g));
}

TEST_CASE("level subgraph") {
  const LevelSubgraph bitri =
      level_subgraph(named_graph("BiTri"), 1, Direction::kForward);
  CHECK(bitri.graph.num_edges() == 6);
  CHECK(bitri.blue_list.empty());

  const LevelSubgraph k4 =
      level_subgraph(named_graph("K4b"), 1, Direction::kForward);
  CHECK(k4.blue_list == std::vector<Vertex>{0, 1, 2, 3});

  const LevelSubgraph bow =
      level_subgraph(named_graph("Bowtie"), 1, Direction::kForward);
  CHECK(bow.blue_list == std::vector<Vertex>{2});
  CHECK(bow.graph.in_degree(2) == 2);
  CHECK(named_graph("Bowtie").in_degree(2) == 4);

  // Every vertex keeps min(deg, 2^i) incoming edges, in either direction.
  const Graph g = gen_random(20, 0.3, 3);
  for (int i = 1; i <= 3; ++i) {
    for (Direction d : {Direction::kForward, Direction::kReverse}) {
      const LevelSubgraph ls = level_subgraph(g, i, d);
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const int deg = g.degree(ls.to_base[v], d);
        CHECK(ls.graph.in_degree(v) == std::min(deg, 1 << i));
        CHECK((ls.blue[v] != 0) == (deg > (1 << i)));
      }
    }
  }
}

TEST_CASE("flow graphs") {
  // Bowtie, one blue vertex: plain graph rooted at the blue vertex.
  const LevelSubgraph bow =
      level_subgraph(named_graph("Bowtie"), 1, Direction::kForward);
  const auto fgs = make_flow_graphs(bow, 2, Mode::kVertex);
  REQUIRE(fgs.size() == 1);
  CHECK(fgs[0].to_source[fgs[0].root] == 2);
  CHECK(fgs[0].graph.num_edges() == bow.graph.num_edges());

  // Two blue vertices 0 and 1, both fed by 2, 3, 4. Edge mode merges them.
  const std::vector<Edge> e{{2, 0}, {3, 0}, {4, 0}, {2, 1}, {3, 1},
                            {4, 1}, {0, 2}, {1, 2}, {0, 3}};
  const Graph two_blue = Graph::from_edges(5, e);
  const LevelSubgraph ls = level_subgraph(two_blue, 1, Direction::kForward);
  REQUIRE(ls.blue_list == std::vector<Vertex>{0, 1});
  const auto merged = make_flow_graphs(ls, 2, Mode::kEdge);
  REQUIRE(merged.size() == 1);
  const RootedFlowGraph& fg = merged[0];
  CHECK(fg.kind == RootKind::kContracted);
  CHECK(fg.graph.num_vertices() == 4);
  int root_to_2 = 0;
  for (EdgeId x : fg.graph.out_edges(fg.root)) {
    if (fg.to_source[fg.graph.edge(x).head] == 2) ++root_to_2;
  }
  CHECK(root_to_2 == 2);

  // Three blue vertices, vertex mode k=2: fresh root with an edge to each.
  const std::vector<Edge> e3{{1, 0}, {2, 0}, {3, 0}, {0, 1}, {2, 1}, {3, 1},
                             {0, 2}, {1, 2}, {3, 2}, {1, 3}, {2, 3}};
  const LevelSubgraph ls3 =
      level_subgraph(Graph::from_edges(4, e3), 1, Direction::kForward);
  REQUIRE(ls3.blue_list == std::vector<Vertex>{0, 1, 2});
  const auto art = make_flow_graphs(ls3, 2, Mode::kVertex);
  REQUIRE(art.size() == 1);
  CHECK(art[0].kind == RootKind::kArtificial);
  CHECK(art[0].graph.num_vertices() == 5);
  std::vector<Vertex> targets;
  for (EdgeId x : art[0].graph.out_edges(art[0].root)) {
    targets.push_back(art[0].to_source[art[0].graph.edge(x).head]);
  }
  std::sort(targets.begin(), targets.end());
  CHECK(targets == std::vector<Vertex>{0, 1, 2});

  // Vertex mode, 0 < |B| < k: one graph per blue vertex.
  const auto per_w = make_flow_graphs(ls3, 4, Mode::kVertex);
  CHECK(per_w.size() == 3);

  const LevelSubgraph none =
      level_subgraph(named_graph("BiTri"), 1, Direction::kForward);
  CHECK_THROWS(make_flow_graphs(none, 2, Mode::kEdge));
}

TEST_CASE("degree transform") {
  const ExpandedGraph c3 = constant_degree_transform(named_graph("C3"));
  CHECK(sorted_edges(c3.graph) == sorted_edges(named_graph("C3")));
  CHECK(c3.mapping.backward == std::vector<Vertex>{0, 1, 2});

  const ExpandedGraph bow = constant_degree_transform(named_graph("Bowtie"));
  CHECK(bow.graph.num_vertices() == 8);
  CHECK(bow.mapping.forward[2].size() == 4);
  CHECK(bow.graph.max_in_degree() <= 3);
  CHECK(bow.graph.max_out_degree() <= 3);
  // The four copies of 2 form a strongly connected block.
  const auto& block = bow.mapping.forward[2];
  const auto from = bfs(bow.graph, block[0]);
  for (Vertex v : block) CHECK(from[v]);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gen_random(15, 0.4, seed);
    const ExpandedGraph ex = constant_degree_transform(g);
    CHECK(ex.graph.max_in_degree() <= 3);
    CHECK(ex.graph.max_out_degree() <= 3);
    CHECK(ex.graph.num_edges() >= g.num_edges());
  }
}

TEST_CASE("project components") {
  const Graph c3 = named_graph("C3");
  const ExpandedGraph id = constant_degree_transform(c3);
  ComponentSet cs;
  cs.components = {{{0, 1, 2}, {}, false}};
  CHECK(project_components(id.mapping, c3, cs) == cs);

  // One original vertex blown up into four copies.
  VertexMapping m;
  m.forward = {{0, 1, 2, 3}};
  m.backward = {0, 0, 0, 0};
  const Graph single(1);
  ComponentSet split;
  split.components = {{{0, 1}, {}, false}, {{2, 3}, {}, false}};
  CHECK_THROWS_AS(project_components(m, single, split), InternalError);
  ComponentSet whole;
  whole.components = {{{0, 1, 2, 3}, {}, false}};
  const ComponentSet back = project_components(m, single, whole);
  REQUIRE(back.components.size() == 1);
  CHECK(back.components[0].vertices == std::vector<Vertex>{0});

  const Graph tcb = named_graph("TwoCycleBridge");
  const ExpandedGraph ex = constant_degree_transform(tcb);
  const ComponentSet ours = naive_kscc(ex.graph, 2, Mode::kEdge);
  const ComponentSet proj = project_components(ex.mapping, tcb, ours);
  CHECK(proj.components.size() == 6);
  CHECK(proj == naive_kscc(tcb, 2, Mode::kEdge));
}

TEST_CASE("partition check") {
  ComponentSet e;
  e.components = {{{0, 1}, {}, false}, {{2}, {}, false}};
  CHECK(is_partition(e, 3));
  CHECK_FALSE(is_partition(e, 4));

  const ComponentSet bow = naive_kscc(named_graph("Bowtie"), 2, Mode::kVertex);
  CHECK(is_partition(bow, 5));
  ComponentSet overlap = bow;
  overlap.components[1].edges.push_back(bow.components[0].edges[0]);
  CHECK_FALSE(is_partition(overlap, 5));
}
