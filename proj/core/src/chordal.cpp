#include "tough/chordal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "tough/errors.hpp"

namespace tough {

EliminationOrder lexbfs_order(const Graph& g) {
  const int n = g.order();
  // Labels are strings of decreasing visit stamps; comparing them as vectors
  // is the lexicographic order LexBFS needs.
  std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
  VertexSet unvisited = g.vertices();
  std::vector<Vertex> visit;
  visit.reserve(static_cast<std::size_t>(n));

  for (int step = 0; step < n; ++step) {
    Vertex pick = unvisited.front();
    for (Vertex v : unvisited) {
      if (label[static_cast<std::size_t>(v)] > label[static_cast<std::size_t>(pick)]) pick = v;
    }
    unvisited.erase(pick);
    visit.push_back(pick);
    for (Vertex w : g.neighbors(pick) & unvisited) label[static_cast<std::size_t>(w)].push_back(n - step);
  }

  std::reverse(visit.begin(), visit.end());
  return {visit};
}

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& order) {
  const int n = g.order();
  if (static_cast<int>(order.order.size()) != n) return false;
  VertexSet later = g.vertices();
  for (Vertex v : order.order) {
    if (v < 0 || v >= n || !later.contains(v)) return false;
    later.erase(v);
    if (!is_clique(g, g.neighbors(v) & later)) return false;
  }
  return true;
}

std::optional<EliminationOrder> chordal_elimination_order(const Graph& g) {
  EliminationOrder order = lexbfs_order(g);
  if (!is_perfect_elimination_order(g, order)) return std::nullopt;
  return order;
}

namespace {

bool member_order_less(VertexSet a, VertexSet b) {
  return std::ranges::lexicographical_compare(a, b);
}

std::vector<VertexSet> cliques_from_order(const Graph& g, const EliminationOrder& order) {
  std::vector<VertexSet> candidates;
  VertexSet later = g.vertices();
  for (Vertex v : order.order) {
    later.erase(v);
    candidates.push_back((g.neighbors(v) & later) | VertexSet::singleton(v));
  }
  std::vector<VertexSet> maximal;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    // Candidates are pairwise distinct: each holds its own vertex and nothing eliminated earlier.
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      dominated = i != j && candidates[i].is_subset_of(candidates[j]);
    }
    if (!dominated) maximal.push_back(candidates[i]);
  }
  std::sort(maximal.begin(), maximal.end(), member_order_less);
  return maximal;
}

std::vector<VertexSet> require_chordal_cliques(const Graph& g) {
  const auto order = chordal_elimination_order(g);
  if (!order) throw PreconditionError("graph is not chordal");
  return cliques_from_order(g, *order);
}

std::vector<std::vector<int>> tree_adjacency(const CliqueTree& tree) {
  std::vector<std::vector<int>> adj(tree.cliques.size());
  for (const auto& e : tree.edges) {
    adj[static_cast<std::size_t>(e.a)].push_back(e.b);
    adj[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  return adj;
}

}  // namespace

std::vector<VertexSet> maximal_cliques_chordal(const Graph& g) { return require_chordal_cliques(g); }

CliqueTree make_clique_tree(std::vector<VertexSet> cliques, const std::vector<std::pair<int, int>>& links) {
  CliqueTree tree;
  tree.cliques = std::move(cliques);
  const int k = static_cast<int>(tree.cliques.size());
  for (const auto& [a, b] : links) {
    const int weight = (a >= 0 && a < k && b >= 0 && b < k)
                           ? (tree.cliques[static_cast<std::size_t>(a)] & tree.cliques[static_cast<std::size_t>(b)]).size()
                           : 0;
    tree.edges.push_back({a, b, weight});
  }
  return tree;
}

CliqueTree build_clique_tree(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("clique tree requires a connected graph");
  CliqueTree tree;
  tree.cliques = require_chordal_cliques(g);
  const int k = static_cast<int>(tree.cliques.size());

  std::vector<CliqueTreeEdge> candidates;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const int w = (tree.cliques[static_cast<std::size_t>(a)] & tree.cliques[static_cast<std::size_t>(b)]).size();
      if (w > 0) candidates.push_back({a, b, w});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const CliqueTreeEdge& x, const CliqueTreeEdge& y) {
    return std::tuple(-x.weight, x.a, x.b) < std::tuple(-y.weight, y.a, y.b);
  });

  std::vector<int> root(static_cast<std::size_t>(k));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x) {
      root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      x = root[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& e : candidates) {
    const int ra = find(e.a);
    const int rb = find(e.b);
    if (ra == rb) continue;
    root[static_cast<std::size_t>(ra)] = rb;
    tree.edges.push_back(e);
  }
  return tree;
}

bool is_spanning_tree(const CliqueTree& tree) {
  const int k = static_cast<int>(tree.cliques.size());
  if (k == 0) return tree.edges.empty();
  if (static_cast<int>(tree.edges.size()) != k - 1) return false;
  for (const auto& e : tree.edges) {
    if (e.a < 0 || e.a >= k || e.b < 0 || e.b >= k || e.a == e.b) return false;
  }
  const auto adj = tree_adjacency(tree);
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == k;
}

bool satisfies_clique_intersection(const CliqueTree& tree) {
  if (!is_spanning_tree(tree)) return false;
  const int k = static_cast<int>(tree.cliques.size());
  const auto adj = tree_adjacency(tree);
  for (int source = 0; source < k; ++source) {
    // Parent pointers of the tree rooted at `source`.
    std::vector<int> parent(static_cast<std::size_t>(k), -1);
    parent[static_cast<std::size_t>(source)] = source;
    std::vector<int> queue{source};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int y : adj[static_cast<std::size_t>(queue[head])]) {
        if (parent[static_cast<std::size_t>(y)] == -1) {
          parent[static_cast<std::size_t>(y)] = queue[head];
          queue.push_back(y);
        }
      }
    }
    for (int target = source + 1; target < k; ++target) {
      const VertexSet shared = tree.cliques[static_cast<std::size_t>(source)] & tree.cliques[static_cast<std::size_t>(target)];
      for (int x = target; x != source; x = parent[static_cast<std::size_t>(x)]) {
        if (!shared.is_subset_of(tree.cliques[static_cast<std::size_t>(x)])) return false;
      }
    }
  }
  return true;
}

bool satisfies_induced_subtree(const CliqueTree& tree, const Graph& g) {
  if (!is_spanning_tree(tree)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    int nodes = 0;
    for (const VertexSet& c : tree.cliques) nodes += c.contains(v) ? 1 : 0;
    int links = 0;
    for (const auto& e : tree.edges) {
      links += (tree.cliques[static_cast<std::size_t>(e.a)].contains(v) &&
                tree.cliques[static_cast<std::size_t>(e.b)].contains(v))
                   ? 1
                   : 0;
    }
    // A subforest of a tree is connected iff it has one edge fewer than nodes.
    if (nodes == 0 || links != nodes - 1) return false;
  }
  return true;
}

int max_pairwise_clique_intersection(const Graph& g) {
  const auto cliques = require_chordal_cliques(g);
  int best = 0;
  for (std::size_t a = 0; a < cliques.size(); ++a) {
    for (std::size_t b = a + 1; b < cliques.size(); ++b) best = std::max(best, (cliques[a] & cliques[b]).size());
  }
  return best;
}

bool is_simplicial(const Graph& g, Vertex v) { return is_clique(g, g.closed_neighborhood(v)); }

bool is_cut_vertex(const Graph& g, Vertex v) {
  return count_components(g, VertexSet::singleton(v)) > count_components(g);
}

VertexKind classify_vertex(const Graph& g, Vertex v) {
  const bool simplicial = is_simplicial(g, v);
  const bool cut = is_cut_vertex(g, v);
  if (simplicial && cut) return VertexKind::both;
  if (simplicial) return VertexKind::simplicial;
  if (cut) return VertexKind::cut;
  return VertexKind::neither;
}

std::optional<Vertex> find_non_simplicial_non_cut(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (classify_vertex(g, v) == VertexKind::neither) return v;
  }
  return std::nullopt;
}

const char* to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::simplicial: return "simplicial";
    case VertexKind::cut: return "cut";
    case VertexKind::both: return "both";
    case VertexKind::neither: return "neither";
  }
  return "neither";
}

std::string to_dot(const CliqueTree& tree) {
  std::ostringstream out;
  out << "graph clique_tree {\n";
  for (std::size_t i = 0; i < tree.cliques.size(); ++i) {
    out << "  k" << i << " [label=\"{";
    bool first = true;
    for (Vertex v : tree.cliques[i]) {
      out << (first ? "" : ",") << v;
      first = false;
    }
    out << "}\"];\n";
  }
  for (const auto& e : tree.edges) out << "  k" << e.a << " -- k" << e.b << " [label=\"" << e.weight << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace tough
