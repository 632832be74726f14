#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tough/graph.hpp"
#include "tough/rational.hpp"

namespace tough {

/// Three pairwise nonadjacent vertices x, y, z with, for each pair, a path
/// that avoids the open neighborhood of the third.
struct AsteroidalTriple {
  std::array<Vertex, 3> vertices{};
  /// witness_paths[i] joins the two vertices other than vertices[i] and
  /// avoids N(vertices[i]).
  std::array<std::vector<Vertex>, 3> witness_paths;
};

/// First asteroidal triple in lexicographic order of (x < y < z), or nullopt.
std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g);

/// Chordal and free of asteroidal triples.
bool is_interval(const Graph& g);

/// A tree whose non-leaf vertices induce a path (possibly empty or a single vertex).
bool is_caterpillar(const Graph& g);

struct CorollaryReport {
  bool interval = false;
  bool minimally_tough = false;
  std::optional<ExtendedRational> toughness;
  bool caterpillar = false;
  /// Interval and minimally t-tough with t <= 1/2.
  bool applicable = false;
  /// Not applicable, or applicable and a caterpillar.
  bool consistent = true;
};

/// Checks that a minimally t-tough interval graph with t <= 1/2 is a
/// caterpillar. Complete and disconnected graphs are reported as not applicable.
CorollaryReport corollary_check(const Graph& g);

}  // namespace tough
