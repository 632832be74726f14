#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

/// order[0] is eliminated first.
struct EliminationOrder {
  std::vector<Vertex> order;

  friend bool operator==(const EliminationOrder&, const EliminationOrder&) = default;
};

/// Lexicographic BFS started at vertex 0, ties broken by smallest id; the visit
/// order reversed.
EliminationOrder lexbfs_order(const Graph& g);

/// For each vertex, its neighbors later in the order form a clique.
bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& order);

/// A perfect elimination order when g is chordal, nullopt otherwise.
std::optional<EliminationOrder> chordal_elimination_order(const Graph& g);

inline bool is_chordal(const Graph& g) { return chordal_elimination_order(g).has_value(); }

/// Maximal cliques of a chordal graph, ordered by their sorted member lists.
/// Throws PreconditionError for non-chordal input.
std::vector<VertexSet> maximal_cliques_chordal(const Graph& g);

struct CliqueTreeEdge {
  int a = 0;
  int b = 0;
  /// |cliques[a] ∩ cliques[b]|
  int weight = 0;

  friend bool operator==(const CliqueTreeEdge&, const CliqueTreeEdge&) = default;
};

struct CliqueTree {
  std::vector<VertexSet> cliques;
  std::vector<CliqueTreeEdge> edges;
};

/// Assembles a tree over the given cliques; weights are computed from the
/// intersections. No property is checked.
CliqueTree make_clique_tree(std::vector<VertexSet> cliques, const std::vector<std::pair<int, int>>& links);

/// Maximum-weight spanning tree of the clique intersection graph, built with
/// Kruskal over (weight desc, a asc, b asc). Throws PreconditionError unless g
/// is chordal and connected.
CliqueTree build_clique_tree(const Graph& g);

/// Edge endpoints are valid indices and the edges span the cliques as a tree.
bool is_spanning_tree(const CliqueTree& tree);

/// For every pair of cliques, their intersection lies in every clique on the
/// tree path between them. False when the edges do not form a spanning tree.
bool satisfies_clique_intersection(const CliqueTree& tree);

/// For every vertex of g, the cliques containing it induce a connected subtree.
bool satisfies_induced_subtree(const CliqueTree& tree, const Graph& g);

/// Largest |K ∩ K'| over pairs of distinct maximal cliques (0 with one clique).
/// A value <= 1 means every clique tree has only weight-1 edges.
/// Throws PreconditionError for non-chordal input.
int max_pairwise_clique_intersection(const Graph& g);

enum class VertexKind { simplicial, cut, both, neither };

bool is_simplicial(const Graph& g, Vertex v);

/// Removing v increases the number of components.
bool is_cut_vertex(const Graph& g, Vertex v);

VertexKind classify_vertex(const Graph& g, Vertex v);

/// First vertex that is neither simplicial nor a cut vertex.
std::optional<Vertex> find_non_simplicial_non_cut(const Graph& g);

const char* to_string(VertexKind kind);

/// DOT rendering: one node per clique labelled with its members, edges labelled with weights.
std::string to_dot(const CliqueTree& tree);

}  // namespace tough
