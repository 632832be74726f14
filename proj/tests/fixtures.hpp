#pragma once

#include <vector>

#include "tough/graph.hpp"

namespace fixtures {

using tough::Edge;
using tough::Graph;

inline Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

inline Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

inline Graph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

/// K_{1,k} with center 0.
inline Graph star(int k) {
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return Graph(k + 1, edges);
}

/// Triangle 1-2-3 with pendants 0 (on 1), 4 (on 2) and 5 (on 3).
inline Graph net() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {1, 3}, {2, 4}, {3, 5}}); }

/// Diamond u v x y with pendants: u=0 v=1 x=2 y=3 a=4 b=5.
inline Graph diamond_with_pendants() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4}, {3, 5}});
}

/// Diamond on u=0 v=1 x=2 y=3: uv, ux, vx, uy, vy.
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}); }

/// Center 0 with legs 0-1-2, 0-3-4, 0-5-6 (the claw with every edge subdivided).
inline Graph spider222() { return Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }

/// y=0 joined to w1..w3 = 1..3, each w_i carrying two leaves.
inline Graph case_b_tree() {
  return Graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}});
}

inline Graph two_disjoint_edges() { return Graph(4, {{0, 1}, {2, 3}}); }

}  // namespace fixtures
