#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "genmat/families.hpp"
#include "genmat/graph.hpp"
#include "genmat/graph_io.hpp"

using namespace genmat;

TEST_CASE("edges are canonicalized on construction") {
  SemisimpleGraph g(4, {{2, 1}, {0, 3}, {1, 2}, {3, 3}, {0, 3}});
  REQUIRE(g.vertex_count() == 4);
  REQUIRE(g.edge_count() == 3);
  REQUIRE(g.edges() == EdgeList{{0, 3}, {1, 2}, {3, 3}});
  REQUIRE(g.has_edge(2, 1));
  REQUIRE(g.has_edge(1, 2));
  REQUIRE(g.has_loop(3));
  REQUIRE_FALSE(g.has_loop(0));
  REQUIRE_FALSE(g.is_simple());
  REQUIRE(SemisimpleGraph(3, {{0, 1}}).is_simple());
}

TEST_CASE("construction rejects out-of-range vertices") {
  REQUIRE_THROWS_AS(SemisimpleGraph(-1), std::invalid_argument);
  REQUIRE_THROWS_AS(SemisimpleGraph(3, {{0, 3}}), std::invalid_argument);
  REQUIRE_THROWS_AS(SemisimpleGraph(3, {{-1, 2}}), std::invalid_argument);
}

TEST_CASE("neighbour lists include self only for loops") {
  SemisimpleGraph g(4, {{0, 1}, {0, 2}, {1, 1}, {2, 3}});
  REQUIRE(g.neighbors(0) == std::vector<int>{1, 2});
  REQUIRE(g.neighbors(1) == std::vector<int>{0, 1});
  REQUIRE(g.neighbors(3) == std::vector<int>{2});
  REQUIRE(g.degree(0) == 2);
  REQUIRE(g.degree(1) == 2);  // loop counts once
  REQUIRE(g.min_degree() == 1);
  auto adj = g.adjacency();
  REQUIRE(adj[1] == std::vector<int>{0, 1});
  REQUIRE(adj[2] == std::vector<int>{0, 3});
}

TEST_CASE("edge mutations return updated copies") {
  SemisimpleGraph g(3, {{0, 1}});
  SemisimpleGraph h = g.add_edge(1, 2);
  REQUIRE(g.edge_count() == 1);
  REQUIRE(h.edge_count() == 2);
  REQUIRE(h.add_edge(0, 1) == h);  // already present
  REQUIRE(h.delete_edge(0, 1).edges() == EdgeList{{1, 2}});
  REQUIRE_THROWS_AS(g.delete_edge(0, 2), std::invalid_argument);
}

TEST_CASE("vertex deletion shifts later labels down") {
  SemisimpleGraph g(5, {{0, 1}, {1, 3}, {2, 4}, {3, 4}, {4, 4}});
  SemisimpleGraph h = g.delete_vertex(1);
  REQUIRE(h.vertex_count() == 4);
  REQUIRE(h.edges() == EdgeList{{1, 3}, {2, 3}, {3, 3}});
}

TEST_CASE("induced subgraphs renumber ascending") {
  SemisimpleGraph g(6, {{0, 2}, {2, 5}, {3, 5}, {5, 5}, {1, 4}});
  SemisimpleGraph h = g.induced_subgraph({5, 2, 0});
  REQUIRE(h.vertex_count() == 3);
  REQUIRE(h.edges() == EdgeList{{0, 1}, {1, 2}, {2, 2}});
}

TEST_CASE("components and connectivity") {
  SemisimpleGraph g(6, {{0, 1}, {1, 2}, {3, 4}});
  auto comps = g.components();
  REQUIRE(comps.size() == 3);
  REQUIRE(comps[0] == std::vector<int>{0, 1, 2});
  REQUIRE(comps[1] == std::vector<int>{3, 4});
  REQUIRE(comps[2] == std::vector<int>{5});
  REQUIRE_FALSE(g.connected());
  REQUIRE(SemisimpleGraph(1).connected());
  REQUIRE(complete_graph(4).connected());
}

TEST_CASE("add_loops attaches a loop at every vertex") {
  SemisimpleGraph g = add_loops(SemisimpleGraph(3, {{0, 1}}));
  REQUIRE(g.edge_count() == 4);
  for (int v = 0; v < 3; ++v) REQUIRE(g.has_loop(v));
}

TEST_CASE("bipartite graphs use class-local ctor pairs and flat ids elsewhere") {
  BipartiteGraph g(2, 3, {{0, 0}, {0, 2}, {1, 1}});
  REQUIRE(g.left_count() == 2);
  REQUIRE(g.right_count() == 3);
  REQUIRE(g.vertex_count() == 5);
  REQUIRE(g.flat_edges() == EdgeList{{0, 2}, {0, 4}, {1, 3}});
  REQUIRE(g.has_edge(0, 2));
  REQUIRE(g.has_edge(4, 0));
  REQUIRE_FALSE(g.has_edge(0, 1));
  REQUIRE(g.is_left(1));
  REQUIRE_FALSE(g.is_left(2));
  REQUIRE(g.flat_right(1) == 3);
  REQUIRE(g.neighbors(0) == std::vector<int>{2, 4});
  REQUIRE(g.neighbors(3) == std::vector<int>{1});
  REQUIRE(g.min_degree() == 1);
}

TEST_CASE("bipartite edge mutations enforce the bipartition") {
  BipartiteGraph g(2, 2, {{0, 0}});
  REQUIRE(g.add_edge(1, 3).edge_count() == 2);
  REQUIRE_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(g.delete_edge(2, 3), std::invalid_argument);
  REQUIRE(g.delete_edge(0, 2).edge_count() == 0);
}

TEST_CASE("bipartite vertex deletion shifts within one class") {
  BipartiteGraph g(3, 2, {{0, 0}, {1, 0}, {2, 1}});
  BipartiteGraph h = g.delete_vertex(1);  // left vertex
  REQUIRE(h.left_count() == 2);
  REQUIRE(h.flat_edges() == EdgeList{{0, 2}, {1, 3}});
  BipartiteGraph k = g.delete_vertex(3);  // right vertex 0
  REQUIRE(k.right_count() == 1);
  REQUIRE(k.flat_edges() == EdgeList{{2, 3}});
}

TEST_CASE("bipartite induced subgraph renumbers per class") {
  BipartiteGraph g = complete_bipartite(3, 3);
  BipartiteGraph h = g.induced_subgraph({0, 2, 4, 5});
  REQUIRE(h.left_count() == 2);
  REQUIRE(h.right_count() == 2);
  REQUIRE(h.edge_count() == 4);
}

TEST_CASE("to_semisimple preserves flat ids") {
  BipartiteGraph g(2, 2, {{0, 1}, {1, 0}});
  SemisimpleGraph s = g.to_semisimple();
  REQUIRE(s.vertex_count() == 4);
  REQUIRE(s.edges() == EdgeList{{0, 3}, {1, 2}});
  REQUIRE(s.is_simple());
}

TEST_CASE("graph text round-trips with metadata") {
  GraphDocument doc(SemisimpleGraph(4, {{0, 1}, {2, 2}, {1, 3}}));
  doc.name = "sample";
  doc.params = {4, 7};
  std::string text = serialize_graph_text(doc);
  GraphDocument back = parse_graph_text(text);
  REQUIRE_FALSE(back.is_bipartite());
  REQUIRE(back.semisimple() == doc.semisimple());
  REQUIRE(back.name == "sample");
  REQUIRE(back.params == std::vector<long long>{4, 7});
  REQUIRE(serialize_graph_text(back) == text);
}

TEST_CASE("bipartite text round-trips") {
  GraphDocument doc(BipartiteGraph(2, 2, {{0, 0}, {1, 1}}));
  GraphDocument back = parse_graph_text(serialize_graph_text(doc));
  REQUIRE(back.is_bipartite());
  REQUIRE(back.bipartite() == doc.bipartite());
}

TEST_CASE("graph JSON round-trips and mirrors the text format") {
  GraphDocument doc(BipartiteGraph(2, 3, {{0, 2}, {1, 0}}));
  doc.name = "probe";
  doc.params = {2, 3};
  GraphDocument back = parse_graph_json(serialize_graph_json(doc));
  REQUIRE(back.is_bipartite());
  REQUIRE(back.bipartite() == doc.bipartite());
  REQUIRE(back.name == "probe");
  REQUIRE(back.params == std::vector<long long>{2, 3});
}

TEST_CASE("parser reports malformed input with specific messages") {
  REQUIRE_THROWS_MATCHES(parse_graph_text(""), ParseError,
                         Catch::Matchers::Message("malformed header: empty input"));
  REQUIRE_THROWS_AS(parse_graph_text("triangle 3\n"), ParseError);
  REQUIRE_THROWS_AS(parse_graph_text("semisimple 3\n0 5\n"), ParseError);
  REQUIRE_THROWS_AS(parse_graph_text("semisimple 3\n0 1 2\n"), ParseError);
  REQUIRE_THROWS_AS(parse_graph_text("semisimple 3\n0 1\n1 0\n"), ParseError);
  REQUIRE_THROWS_AS(parse_graph_text("bipartite 2 2\n0 1\n"), ParseError);
  REQUIRE_THROWS_AS(parse_graph_text("bipartite 2 2\n0 0\n"), ParseError);
  REQUIRE_THROWS_AS(parse_graph_json("{"), ParseError);
  REQUIRE_THROWS_AS(parse_graph_json("{\"kind\": \"semisimple\"}"), ParseError);
  REQUIRE_THROWS_AS(parse_graph_json("{\"kind\": \"ring\", \"sizes\": [3], \"edges\": []}"), ParseError);
}

TEST_CASE("complete families have the expected sizes") {
  REQUIRE(complete_graph(5).edge_count() == 10);
  REQUIRE(complete_graph(5).is_simple());
  REQUIRE(complete_semisimple(5).edge_count() == 15);
  for (int v = 0; v < 5; ++v) REQUIRE(complete_semisimple(5).has_loop(v));
  REQUIRE(complete_bipartite(3, 4).edge_count() == 12);
  REQUIRE(complete_bipartite(3, 4).min_degree() == 3);
  SemisimpleGraph t = complete_tripartite(2, 3, 4);
  REQUIRE(t.vertex_count() == 9);
  REQUIRE(t.edge_count() == 2 * 3 + 2 * 4 + 3 * 4);
  REQUIRE(t.is_simple());
}

TEST_CASE("bipartite circulants are regular") {
  BipartiteGraph g = circulant_bipartite(6, 3);
  REQUIRE(g.left_count() == 6);
  REQUIRE(g.right_count() == 6);
  REQUIRE(g.edge_count() == 18);
  for (int v = 0; v < g.vertex_count(); ++v) REQUIRE(g.degree(v) == 3);
  REQUIRE_THROWS_AS(circulant_bipartite(3, 4), std::invalid_argument);
}

TEST_CASE("split family sizes and degrees") {
  BipartiteGraph g = ly_split_family(1, 2, 4);  // degree parameter k = 3
  REQUIRE(g.left_count() == 24);
  REQUIRE(g.right_count() == 24);
  REQUIRE(g.vertex_count() == 48);
  REQUIRE(g.edge_count() == 84);
  REQUIRE(g.min_degree() == 3);
  REQUIRE(g.connected());
  REQUIRE_THROWS_AS(ly_split_family(1, 2, 3), std::invalid_argument);  // s must be even and > k
  REQUIRE_THROWS_AS(ly_split_family(1, 1, 1), std::invalid_argument);
}

TEST_CASE("glued-copies family sizes") {
  for (int k = 2; k <= 4; ++k) {
    for (int p = 2; p <= 4; ++p) {
      BipartiteGraph g = critical_family(k, p);
      REQUIRE(g.vertex_count() == k * (p + 1));
      REQUIRE(g.edge_count() == p * k * k - (p - 1) * (k - 1));
      REQUIRE(g.connected());
    }
  }
  // k = 3, p = 2 by hand: apex + two blocks of 2 on the left, shared pair
  // plus b_1, b_2 on the right; both copies induce K_{3,3}.
  BipartiteGraph g = critical_family(3, 2);
  REQUIRE(g.left_count() == 5);
  REQUIRE(g.right_count() == 4);
  BipartiteGraph copy1 = g.induced_subgraph({0, 1, 2, 5, 6, 7});
  REQUIRE(copy1.edge_count() == 9);
  BipartiteGraph copy2 = g.induced_subgraph({0, 3, 4, 5, 6, 8});
  REQUIRE(copy2.edge_count() == 9);
}
