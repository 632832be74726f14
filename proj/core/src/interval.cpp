#include "tough/interval.hpp"

#include "tough/chordal.hpp"
#include "tough/toughness.hpp"

namespace tough {

std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g) {
  const int n = g.order();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) continue;
      for (Vertex z = y + 1; z < n; ++z) {
        if (g.adjacent(x, z) || g.adjacent(y, z)) continue;
        // Deleting N(w) also cuts w itself off, so w never appears on the path.
        if (!component_of(g, y, g.neighbors(x)).contains(z)) continue;
        if (!component_of(g, x, g.neighbors(y)).contains(z)) continue;
        if (!component_of(g, x, g.neighbors(z)).contains(y)) continue;
        AsteroidalTriple at;
        at.vertices = {x, y, z};
        at.witness_paths[0] = shortest_path(g, y, z, g.neighbors(x));
        at.witness_paths[1] = shortest_path(g, x, z, g.neighbors(y));
        at.witness_paths[2] = shortest_path(g, x, y, g.neighbors(z));
        return at;
      }
    }
  }
  return std::nullopt;
}

bool is_interval(const Graph& g) { return is_chordal(g) && !find_asteroidal_triple(g); }

bool is_caterpillar(const Graph& g) {
  if (!is_tree(g)) return false;
  VertexSet leaves;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) leaves.insert(v);
  }
  const VertexSet spine = g.vertices() - leaves;
  if (spine.size() <= 1) return true;
  // The spine of a tree is connected; it is a path iff no spine vertex has
  // three spine neighbors.
  for (Vertex v : spine) {
    if ((g.neighbors(v) & spine).size() > 2) return false;
  }
  return count_components(g, leaves) == 1;
}

CorollaryReport corollary_check(const Graph& g) {
  CorollaryReport report;
  report.interval = is_interval(g);
  report.caterpillar = is_caterpillar(g);
  if (!is_connected(g) || is_complete(g)) return report;
  const MinimalityResult m = is_minimally_tough(g);
  report.minimally_tough = m.minimal;
  report.toughness = m.toughness;
  report.applicable = report.interval && m.minimal && m.toughness <= ExtendedRational(1, 2);
  report.consistent = !report.applicable || report.caterpillar;
  return report;
}

}  // namespace tough
