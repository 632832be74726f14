#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tough/errors.hpp"
#include "tough/toughness.hpp"
#include "tough/ttgraph.hpp"

using namespace tough;
using R = ExtendedRational;

namespace {

TTBuildFailure build_failure(const Graph& tree, VertexSet removed) {
  try {
    tt_from_tree(tree, removed);
  } catch (const TTBuildError& e) {
    return e.failure();
  }
  FAIL("construction unexpectedly succeeded");
  return TTBuildFailure::not_a_tree;
}

}  // namespace

TEST_CASE("modified degree") {
  CHECK(modified_degree(fixtures::net(), 1) == 2);
  CHECK(max_modified_degree(fixtures::net()) == 2);
  CHECK(modified_degree(fixtures::star(3), 0) == 3);
  CHECK(modified_degree(fixtures::star(3), 2) == 1);
  CHECK(modified_degree(fixtures::net(), 0) == 1);
}

TEST_CASE("toughness from the modified degree") {
  CHECK(toughness_from_modified_degree(fixtures::net()) == R(1, 2));
  CHECK(toughness_from_modified_degree(fixtures::star(3)) == R(1, 3));
  try {
    toughness_from_modified_degree(fixtures::cycle(4));
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("vertex 0") != std::string::npos);
  }
  CHECK_THROWS_AS(toughness_from_modified_degree(fixtures::complete(3)), PreconditionError);
}

TEST_CASE("building TT-graphs from trees") {
  SUBCASE("case a: the spider becomes the net graph") {
    const auto built = tt_from_tree(fixtures::spider222(), {0});
    // Kept vertices 1..6 renumbered to 0..5: triangle on the old 1, 3, 5.
    const Graph expected(6, {{0, 1}, {2, 3}, {4, 5}, {0, 2}, {0, 4}, {2, 4}});
    CHECK(built.graph == expected);
    CHECK(built.decomposition.case_tag == TTCase::a);
    CHECK(built.decomposition.mu == 2);
    REQUIRE(built.decomposition.triangle_map.size() == 1);
    CHECK(built.decomposition.triangle_map[0].center == 0);
    CHECK(built.decomposition.triangle_map[0].triangle == std::array<Vertex, 3>{0, 2, 4});
    CHECK(replay_construction(built.decomposition) == built.graph);
  }
  SUBCASE("case b: triangle with two leaves on each corner") {
    const auto built = tt_from_tree(fixtures::case_b_tree(), {0});
    CHECK(built.decomposition.case_tag == TTCase::b);
    CHECK(built.decomposition.mu == 3);
    CHECK(built.graph.order() == 9);
    CHECK(built.graph.size() == 9);
    CHECK(toughness(built.graph).value == R(1, 3));
    for (Vertex v = 0; v < 3; ++v) CHECK(modified_degree(built.graph, v) == 3);
  }
  SUBCASE("removing nothing returns the tree") {
    const auto built = tt_from_tree(fixtures::case_b_tree(), {});
    CHECK(built.graph == fixtures::case_b_tree());
    CHECK(built.decomposition.triangle_map.empty());
  }
  SUBCASE("validation failures are distinguishable") {
    CHECK(build_failure(fixtures::cycle(4), {}) == TTBuildFailure::not_a_tree);
    CHECK(build_failure(fixtures::path(5), {}) == TTBuildFailure::max_degree_below_three);
    CHECK(build_failure(fixtures::spider222(), {1}) == TTBuildFailure::removed_degree_not_three);
    CHECK(build_failure(fixtures::spider222(), VertexSet{9}) == TTBuildFailure::vertex_out_of_range);
    CHECK(build_failure(fixtures::case_b_tree(), {0, 1}) == TTBuildFailure::removed_not_independent);
    // A claw-with-tail: the removed center sees a leaf of degree 1.
    const Graph lopsided(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    CHECK(build_failure(lopsided, {0}) == TTBuildFailure::neighbor_degree_violation);
  }
}

TEST_CASE("valid removal sets") {
  const auto sets = valid_removal_sets(fixtures::spider222());
  CHECK(std::find(sets.begin(), sets.end(), VertexSet{}) != sets.end());
  CHECK(std::find(sets.begin(), sets.end(), VertexSet{0}) != sets.end());
  CHECK(valid_removal_sets(fixtures::path(5)).empty());
  for (VertexSet y : valid_removal_sets(fixtures::case_b_tree())) {
    CHECK_NOTHROW(tt_from_tree(fixtures::case_b_tree(), y));
  }
}

TEST_CASE("TT recognition") {
  SUBCASE("net graph comes from the spider") {
    const auto r = recognize_tt(fixtures::net());
    REQUIRE(r.accepted());
    CHECK(r.decomposition->case_tag == TTCase::a);
    CHECK(r.decomposition->tree.order() == 7);
    CHECK(is_tree(r.decomposition->tree));
    CHECK(r.decomposition->tree.max_degree() == 3);
    CHECK(replay_construction(*r.decomposition) == fixtures::net());
  }
  SUBCASE("rejections") {
    CHECK(recognize_tt(fixtures::complete(3)).reason == TTRejection::complete);
    CHECK(recognize_tt(fixtures::diamond_with_pendants()).reason == TTRejection::bad_block);
    const Graph lonely_pendant(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    CHECK(recognize_tt(lonely_pendant).reason == TTRejection::md_mismatch);
    CHECK(recognize_tt(fixtures::two_disjoint_edges()).reason == TTRejection::disconnected);
    CHECK(recognize_tt(fixtures::cycle(4)).reason == TTRejection::bad_block);
  }
  SUBCASE("trees are accepted as they are") {
    const auto r = recognize_tt(fixtures::path(5));
    REQUIRE(r.accepted());
    CHECK(r.decomposition->case_tag == TTCase::pure_tree);
    CHECK(r.decomposition->mu == 2);
  }
  SUBCASE("recognition inverts construction") {
    const auto built = tt_from_tree(fixtures::case_b_tree(), {0});
    const auto r = recognize_tt(built.graph);
    REQUIRE(r.accepted());
    CHECK(same_source_tree(*r.decomposition, built.decomposition));
  }
}

TEST_CASE("main classifier") {
  SUBCASE("net graph") {
    const auto r = classify_main_theorem(fixtures::net());
    CHECK(r.left);
    CHECK(r.right);
    CHECK(r.toughness == R(1, 2));
  }
  SUBCASE("diamond with pendants") {
    const auto r = classify_main_theorem(fixtures::diamond_with_pendants());
    CHECK_FALSE(r.left);
    CHECK_FALSE(r.right);
    CHECK(r.offending_edge == Edge(0, 1));
    CHECK(r.tt_rejection == TTRejection::bad_block);
  }
  SUBCASE("P_5") {
    const auto r = classify_main_theorem(fixtures::path(5));
    CHECK(r.left);
    CHECK(r.right);
    CHECK(r.agree());
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(classify_main_theorem(fixtures::cycle(4)), PreconditionError);
    CHECK_THROWS_AS(classify_main_theorem(fixtures::complete(4)), PreconditionError);
  }
}

TEST_CASE("modified degree equals degree minus triangles on TT-graphs") {
  const auto built = tt_from_tree(fixtures::case_b_tree(), {0});
  const Graph& g = built.graph;
  for (Vertex v = 0; v < g.order(); ++v) {
    int triangles = 0;
    for (Vertex a : g.neighbors(v))
      for (Vertex b : g.neighbors(v))
        if (a < b && g.adjacent(a, b)) ++triangles;
    CHECK(modified_degree(g, v) == g.degree(v) - triangles);
    CHECK(modified_degree(g, v) == oracle::modified_degree(g, v));
  }
}

TEST_CASE("case tag text") {
  for (TTCase c : {TTCase::a, TTCase::b, TTCase::pure_tree}) CHECK(parse_tt_case(to_string(c)) == c);
  CHECK_FALSE(parse_tt_case("c").has_value());
}
