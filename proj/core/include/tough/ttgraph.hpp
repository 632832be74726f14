#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tough/errors.hpp"
#include "tough/graph.hpp"
#include "tough/rational.hpp"

namespace tough {

/// omega(G - v).
int modified_degree(const Graph& g, Vertex v);

/// Maximum modified degree over all vertices (0 for the empty graph).
int max_modified_degree(const Graph& g);

/// 1 / max_modified_degree(g) for a connected noncomplete graph in which every
/// vertex is simplicial or a cut vertex; for such graphs this is the
/// toughness. Throws PreconditionError otherwise, naming an offending vertex
/// when that is the failing condition.
ExtendedRational toughness_from_modified_degree(const Graph& g);

/// How a TT-graph arises from its source tree.
///  - a: maximum degree 3, every degree-3 vertex removed, their neighbors have degree 2
///  - b: some independent degree-3 vertices removed, their neighbors have maximum degree
///  - pure_tree: the graph is a tree and nothing is removed
enum class TTCase { a, b, pure_tree };

const char* to_string(TTCase c);
std::optional<TTCase> parse_tt_case(const std::string& text);

/// A removed tree vertex and the triangle that replaces it.
struct TriangleSource {
  Vertex center = 0;                ///< id in the tree
  std::array<Vertex, 3> triangle{};  ///< ids in the graph, ascending

  friend bool operator==(const TriangleSource&, const TriangleSource&) = default;
};

/// Certificate that a graph is obtained from `tree` by replacing every removed
/// vertex with a triangle on its three neighbors.
struct TTDecomposition {
  Graph tree;
  VertexSet removed;  ///< ids in the tree
  std::vector<TriangleSource> triangle_map;
  TTCase case_tag = TTCase::pure_tree;
  int mu = 0;
  /// Graph vertex i corresponds to tree vertex correspondence[i].
  std::vector<Vertex> correspondence;

  friend bool operator==(const TTDecomposition&, const TTDecomposition&) = default;
};

enum class TTBuildFailure {
  not_a_tree,
  vertex_out_of_range,
  max_degree_below_three,
  removed_degree_not_three,
  removed_not_independent,
  neighbor_degree_violation,
};

const char* to_string(TTBuildFailure f);

class TTBuildError : public PreconditionError {
 public:
  TTBuildError(TTBuildFailure failure, const std::string& message)
      : PreconditionError(message), failure_(failure) {}

  TTBuildFailure failure() const noexcept { return failure_; }

 private:
  TTBuildFailure failure_;
};

struct TTConstruction {
  Graph graph;
  TTDecomposition decomposition;
};

/// Validates (tree, removed) against both admissible cases and builds the
/// TT-graph. Kept tree vertices are renumbered in increasing order.
/// Throws TTBuildError with a distinct failure code per violated condition.
TTConstruction tt_from_tree(const Graph& tree, VertexSet removed);

/// Re-runs the construction recorded in a decomposition without validating
/// the degree conditions. Throws PreconditionError if a removed vertex does
/// not have three kept neighbors or the correspondence is not a bijection.
Graph replay_construction(const TTDecomposition& d);

/// True when both decompositions describe the same graph and their source
/// trees agree under the vertex correspondence induced by the graph vertices
/// and the triangles. Case tags are not compared.
bool same_source_tree(const TTDecomposition& a, const TTDecomposition& b);

/// Every removal set tt_from_tree accepts for this tree, by ascending mask.
/// Empty when the tree has maximum degree below 3 (or is not a tree).
std::vector<VertexSet> valid_removal_sets(const Graph& tree);

enum class TTRejection {
  accepted,
  disconnected,
  complete,
  bad_block,       ///< a block that is neither an edge nor a triangle
  md_mismatch,     ///< a triangle vertex without maximum modified degree
  too_large,       ///< source tree would exceed the vertex limit
  replay_mismatch,
};

const char* to_string(TTRejection r);

struct TTRecognition {
  std::optional<TTDecomposition> decomposition;
  TTRejection reason = TTRejection::accepted;
  std::string detail;

  bool accepted() const noexcept { return decomposition.has_value(); }
};

/// Decides TT membership from the block structure: every block is an edge or a
/// triangle, every triangle vertex has maximum modified degree, and the graph
/// is not complete. Trees are accepted as pure_tree. Otherwise each triangle is
/// replaced by a claw on a fresh center (ids n, n+1, ...) and the resulting
/// decomposition is replayed through tt_from_tree before it is returned.
TTRecognition recognize_tt(const Graph& g);

/// Both sides of the chordal characterization, computed independently.
struct MainTheoremReport {
  ExtendedRational toughness;
  bool minimally_tough = false;
  std::optional<Edge> offending_edge;
  /// Minimally tough with toughness at most 1/2.
  bool left = false;

  int mu = 0;
  TTRejection tt_rejection = TTRejection::accepted;
  std::optional<TTCase> case_tag;
  /// TT-graph whose toughness equals 1/mu.
  bool right = false;

  bool agree() const noexcept { return left == right; }
};

/// Throws PreconditionError unless g is connected, chordal and noncomplete.
MainTheoremReport classify_main_theorem(const Graph& g);

}  // namespace tough
