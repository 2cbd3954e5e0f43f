#include <doctest.h>

#include "dilabel/digraph.hpp"
#include "dilabel/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dilabel;
using dilabel::testing::Rng;

namespace {

GraphErrorKind parse_error_kind(std::string_view text) {
  try {
    (void)parse_digraph(text);
  } catch (const GraphError& e) {
    return e.kind();
  }
  FAIL("expected a GraphError");
  return GraphErrorKind::Syntax;
}

}  // namespace

TEST_SUITE_BEGIN("digraph");

TEST_CASE("parse single edge") {
  Digraph d = parse_digraph("2 1\n0 1\n");
  CHECK(d.num_vertices() == 2);
  CHECK(d.num_edges() == 1);
  CHECK(d.has_edge(0, 1));
  CHECK_FALSE(d.has_edge(1, 0));
  CHECK(d.out_neighbors(0).size() == 1);
  CHECK(d.in_neighbors(1).size() == 1);
}

TEST_CASE("parse C3 with comments and no trailing newline") {
  Digraph d = parse_digraph("# the 3-dicycle\n3 3\n0 1\n# mid comment\n1 2\n2 0");
  CHECK(d == fixtures::dicycle(3));
}

TEST_CASE("parse errors are distinct kinds") {
  CHECK(parse_error_kind("2 2\n0 1\n1 0\n") == GraphErrorKind::AntiParallel);
  CHECK(parse_error_kind("2 1\n1 1\n") == GraphErrorKind::Loop);
  CHECK(parse_error_kind("3 2\n0 1\n0 1\n") == GraphErrorKind::DuplicateEdge);
  CHECK(parse_error_kind("2 1\n0 2\n") == GraphErrorKind::VertexOutOfRange);
  CHECK(parse_error_kind("2 1\n0 x\n") == GraphErrorKind::Syntax);
  CHECK(parse_error_kind("2 2\n0 1\n") == GraphErrorKind::Syntax);
  CHECK(parse_error_kind("2 0\n0 1\n") == GraphErrorKind::Syntax);
  CHECK(parse_error_kind("# only a comment\n") == GraphErrorKind::Syntax);
  CHECK(parse_error_kind("2 1 7\n0 1\n") == GraphErrorKind::Syntax);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    (void)parse_digraph("# c\n3 2\n0 1\n1  zz\n");
    FAIL("expected throw");
  } catch (const GraphError& e) {
    CHECK(e.kind() == GraphErrorKind::Syntax);
    CHECK(e.line() == 4);
    CHECK(e.column() == 4);
  }
}

TEST_CASE("constructor enforces strong simplicity") {
  CHECK_THROWS_AS(Digraph(3, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(Digraph(3, {{2, 2}}), GraphError);
  CHECK_THROWS_AS(Digraph(2, {{0, 5}}), GraphError);
}

TEST_CASE("edge-list round trip") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Digraph d = dilabel::testing::random_digraph(1 + trial % 9, 0.4, rng);
    CHECK(parse_digraph(to_edge_list(d)) == d);
  }
}

TEST_CASE("adjacency lists agree with the edge set") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Digraph d = dilabel::testing::random_digraph(7, 0.5, rng);
    std::size_t outs = 0;
    std::size_t ins = 0;
    for (Vertex v = 0; v < d.num_vertices(); ++v) {
      outs += d.out_degree(v);
      ins += d.in_degree(v);
      for (Vertex w : d.out_neighbors(v)) CHECK(d.has_edge(v, w));
      for (Vertex u : d.in_neighbors(v)) CHECK(d.has_edge(u, v));
    }
    CHECK(outs == d.num_edges());
    CHECK(ins == d.num_edges());
  }
}

TEST_CASE("classify P4") {
  ClassReport r = classify(fixtures::dipath(4));
  CHECK(r.longest_dipath == LongestDipath{3, false});
  CHECK(r.bipartite());
  CHECK(r.is_ditree);
  CHECK(r.acyclic);
  CHECK(r.sources == std::vector<Vertex>{0});
  CHECK(r.sinks == std::vector<Vertex>{3});
}

TEST_CASE("classify C3 and C4") {
  ClassReport c3 = classify(fixtures::dicycle(3));
  CHECK(c3.longest_dipath == LongestDipath{2, false});
  CHECK_FALSE(c3.bipartite());
  CHECK_FALSE(c3.acyclic);
  CHECK_FALSE(c3.is_ditree);

  ClassReport c4 = classify(fixtures::dicycle(4));
  CHECK(c4.longest_dipath == LongestDipath{3, false});
  CHECK(c4.bipartite());
  CHECK(c4.bipartition->a == std::vector<Vertex>{0, 2});
  CHECK(c4.bipartition->b == std::vector<Vertex>{1, 3});
}

TEST_CASE("cyclic longest dipath is capped") {
  ClassReport r = classify(fixtures::dicycle(7));
  CHECK(r.longest_dipath.at_least);
  CHECK(r.longest_dipath.length == kDefaultDipathCap);
  // Acyclic inputs stay exact past the cap.
  CHECK(classify(fixtures::dipath(9)).longest_dipath == LongestDipath{8, false});
}

TEST_CASE("classify report invariants") {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Digraph d = dilabel::testing::random_digraph(1 + trial % 8, 0.35, rng);
    ClassReport r = classify(d);
    if (r.bipartition) {
      for (const Edge& e : d.edges()) CHECK(r.bipartition->side[e.from] != r.bipartition->side[e.to]);
      CHECK(r.bipartition->a.size() + r.bipartition->b.size() == d.num_vertices());
    }
    std::vector<Vertex> both;
    std::set_intersection(r.sources.begin(), r.sources.end(), r.sinks.begin(), r.sinks.end(),
                          std::back_inserter(both));
    for (Vertex v = 0; v < d.num_vertices(); ++v) {
      bool isolated = d.degree(v) == 0;
      CHECK(isolated == std::binary_search(both.begin(), both.end(), v));
    }
    if (r.is_ditree) {
      CHECK(r.acyclic);
      CHECK(r.m + 1 == r.n);
      CHECK(r.components.size() == 1);
    }
  }
}

TEST_CASE("longest dipath matches exhaustive enumeration on n <= 7") {
  Rng rng(23);
  int checked = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    std::size_t n = 1 + trial % 7;
    Digraph d = dilabel::testing::random_digraph(n, 0.2 + 0.1 * (trial % 5), rng);
    const LongestDipath got = longest_dipath(d);
    const std::size_t truth = dilabel::testing::brute_longest_dipath(d);
    if (!got.at_least || truth < kDefaultDipathCap) {
      CHECK(!got.at_least);
      CHECK(got.length == truth);
      ++checked;
    } else {
      CHECK(truth >= kDefaultDipathCap);
    }
  }
  CHECK(checked >= 1000);
}

TEST_CASE("bipartition exists iff no odd closed walk") {
  Rng rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    Digraph d = dilabel::testing::random_digraph(1 + trial % 7, 0.35, rng);
    CHECK(bipartition(d).has_value() == !dilabel::testing::has_odd_closed_walk(d));
  }
}

TEST_CASE("distance pairs on small fixtures") {
  auto p3 = distance_pairs(fixtures::dipath(3));
  CHECK(p3.at_one == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(p3.at_two == std::vector<Edge>{{0, 2}});

  auto c3 = distance_pairs(fixtures::dicycle(3));
  CHECK(c3.at_one == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(c3.at_two == std::vector<Edge>{{0, 2}, {1, 0}, {2, 1}});

  auto edge = distance_pairs(fixtures::dipath(2));
  CHECK(edge.at_one == std::vector<Edge>{{0, 1}});
  CHECK(edge.at_two.empty());
}

TEST_CASE("distance pairs agree with BFS all-pairs") {
  Rng rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    Digraph d = dilabel::testing::random_digraph(1 + trial % 7, 0.45, rng);
    const auto dist = dilabel::testing::bfs_distances(d);
    std::vector<Edge> one;
    std::vector<Edge> two;
    for (Vertex x = 0; x < d.num_vertices(); ++x) {
      for (Vertex y = 0; y < d.num_vertices(); ++y) {
        if (dist[x][y] == 1) one.push_back({x, y});
        if (dist[x][y] == 2) two.push_back({x, y});
      }
    }
    auto pairs = distance_pairs(d);
    CHECK(pairs.at_one == one);
    CHECK(pairs.at_two == two);
  }
}

TEST_CASE("components") {
  auto two_edges = components(Digraph(4, {{0, 1}, {2, 3}}));
  REQUIRE(two_edges.size() == 2);
  CHECK(two_edges[0].graph.num_vertices() == 2);
  CHECK(two_edges[1].to_original == std::vector<Vertex>{2, 3});
  CHECK(two_edges[1].graph.has_edge(0, 1));

  CHECK(components(fixtures::dicycle(3)).size() == 1);
  auto singletons = components(Digraph(3));
  CHECK(singletons.size() == 3);
  for (const auto& c : singletons) CHECK(c.graph.num_vertices() == 1);
}

TEST_CASE("ditree detection") {
  CHECK(is_ditree(Digraph(1)));
  CHECK(is_ditree(fixtures::ditree_t2()));
  CHECK_FALSE(is_ditree(Digraph(2)));
  CHECK_FALSE(is_ditree(fixtures::dicycle(3)));
  CHECK_FALSE(is_ditree(Digraph(4, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST_CASE("fixtures by name") {
  CHECK(fixtures::by_name("P5") == fixtures::dipath(5));
  CHECK(fixtures::by_name("C4") == fixtures::dicycle(4));
  CHECK(fixtures::by_name("T2") == fixtures::ditree_t2());
  CHECK_FALSE(fixtures::by_name("C2").has_value());
  CHECK_FALSE(fixtures::by_name("Q3").has_value());
  CHECK_FALSE(fixtures::by_name("P3x").has_value());
}

TEST_SUITE_END();
