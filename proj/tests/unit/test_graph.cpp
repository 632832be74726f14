#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "tough/errors.hpp"
#include "tough/graph.hpp"
#include "tough/graph_io.hpp"

using namespace tough;

TEST_CASE("edge-list parsing") {
  SUBCASE("inferred order") {
    const Graph g = parse_edge_list("0 1\n1 2");
    CHECK(g == fixtures::path(3));
  }
  SUBCASE("declared order keeps isolated vertices") {
    const Graph g = parse_edge_list("n 4\n0 1");
    CHECK(g.order() == 4);
    CHECK(g.size() == 1);
    CHECK_FALSE(is_connected(g));
  }
  SUBCASE("comments, blank lines and duplicates") {
    const Graph g = parse_edge_list("# header\nn 3\n\n0 1\n1 0\n1 2\n");
    CHECK(g == fixtures::path(3));
  }
  SUBCASE("errors carry the line number") {
    try {
      parse_edge_list("0 1\n0 0\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 x"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("-1 2"), ParseError);
  }
}

TEST_CASE("edge-list emission round-trips") {
  const Graph g = fixtures::net();
  CHECK(parse_edge_list(emit_edge_list(g)) == g);
  CHECK(parse_edge_list(emit_edge_list(Graph(3))) == Graph(3));
}

TEST_CASE("graph6") {
  CHECK(parse_graph6("A_") == fixtures::complete(2));
  const Graph k3 = parse_graph6("Bw");
  CHECK(k3 == fixtures::complete(3));
  CHECK(k3.size() == 3);
  CHECK(emit_graph6(parse_graph6("D?{")) == "D?{");
  CHECK(parse_graph6(">>graph6<<Bw") == k3);
  CHECK(emit_graph6(Graph(1)) == "@");
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);
  CHECK_THROWS_AS(parse_graph6("B\x01"), ParseError);
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("graph6 long-size form") {
  const Graph g = fixtures::cycle(63);
  const std::string text = emit_graph6(g);
  CHECK(text.front() == '~');
  CHECK(parse_graph6(text) == g);
}

TEST_CASE("components") {
  const auto p3 = components(fixtures::path(3), {1});
  REQUIRE(p3.size() == 2);
  CHECK(p3[0] == VertexSet{0});
  CHECK(p3[1] == VertexSet{2});

  const auto k4 = components(fixtures::complete(4), {2});
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].size() == 3);

  CHECK(count_components(fixtures::net(), {1}) == 2);
  CHECK(count_components(Graph(0)) == 0);
  CHECK(count_components(fixtures::path(2), {0, 1}) == 0);
}

TEST_CASE("block decomposition") {
  SUBCASE("net graph") {
    const auto d = block_decomposition(fixtures::net());
    CHECK(d.cut_vertices == VertexSet{1, 2, 3});
    CHECK(d.blocks.size() == 4);
    CHECK(std::count(d.blocks.begin(), d.blocks.end(), VertexSet{1, 2, 3}) == 1);
  }
  SUBCASE("P_4") {
    const auto d = block_decomposition(fixtures::path(4));
    CHECK(d.blocks.size() == 3);
    CHECK(d.cut_vertices.size() == 2);
  }
  SUBCASE("K_4") {
    const auto d = block_decomposition(fixtures::complete(4));
    CHECK(d.blocks.size() == 1);
    CHECK(d.cut_vertices.empty());
  }
  SUBCASE("disconnected input is rejected") {
    CHECK_THROWS_AS(block_decomposition(fixtures::two_disjoint_edges()), PreconditionError);
  }
}

TEST_CASE("connectivity") {
  CHECK(vertex_connectivity(fixtures::cycle(4)) == 2);
  CHECK(vertex_connectivity(fixtures::path(3)) == 1);
  CHECK(vertex_connectivity(fixtures::complete(5)) == 4);
  CHECK(vertex_connectivity(fixtures::two_disjoint_edges()) == 0);
  CHECK(local_connectivity(fixtures::diamond(), 0, 1) == 3);
  CHECK(local_connectivity(fixtures::diamond(), 2, 3) == 2);
  CHECK(local_connectivity(fixtures::path(4), 0, 3) == 1);
}

TEST_CASE("edge editing and simple queries") {
  const Graph g = fixtures::cycle(5);
  CHECK(g.without_edge({0, 1}).size() == 4);
  CHECK(g.without_edge({0, 1}).with_edge({1, 0}) == g);
  CHECK(is_tree(fixtures::path(5)));
  CHECK_FALSE(is_tree(g));
  CHECK(is_complete(Graph(1)));
  CHECK(shortest_path(fixtures::path(4), 0, 3) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(shortest_path(g, 0, 2, {1}) == std::vector<Vertex>{0, 4, 3, 2});
  CHECK(shortest_path(fixtures::two_disjoint_edges(), 0, 3).empty());
}

TEST_CASE("DOT export lists every edge") {
  const std::string dot = to_dot(fixtures::path(3), "P3");
  CHECK(dot.find("graph P3") != std::string::npos);
  CHECK(dot.find("0 -- 1") != std::string::npos);
  CHECK(dot.find("1 -- 2") != std::string::npos);
}
