#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "tough/errors.hpp"
#include "tough/graph.hpp"

namespace tough {

BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("block decomposition requires a connected graph");

  const int n = g.order();
  BlockDecomposition out;
  if (n == 1) {
    out.blocks.push_back(VertexSet::singleton(0));
    return out;
  }

  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> stack;
  int timer = 0;

  // Hopcroft-Tarjan over an edge stack; n <= 64 keeps the recursion shallow.
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[static_cast<std::size_t>(w)] == -1) {
        ++children;
        stack.emplace_back(v, w);
        dfs(w, v);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
        if (low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(v)]) {
          if (parent != -1 || children > 1) out.cut_vertices.insert(v);
          VertexSet block;
          const Edge closing(v, w);
          while (true) {
            const Edge e = stack.back();
            stack.pop_back();
            block.insert(e.u);
            block.insert(e.v);
            if (e == closing) break;
          }
          out.blocks.push_back(block);
        }
      } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(v)]) {
        stack.emplace_back(v, w);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
      }
    }
  };
  dfs(0, -1);

  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

namespace {

// Unit-capacity max flow on the vertex-split digraph: vertex x becomes
// x_in = 2x and x_out = 2x + 1 joined by an arc of capacity 1 (infinite for
// the terminals). Each augmenting path is one internally disjoint s-t path.
int disjoint_paths(const Graph& g, Vertex s, Vertex t) {
  const int n = g.order();
  const int nodes = 2 * n;
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<int> cap(static_cast<std::size_t>(nodes * nodes), 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a * nodes + b)]; };
  for (Vertex x = 0; x < n; ++x) {
    at(2 * x, 2 * x + 1) = (x == s || x == t) ? kInf : 1;
    for (Vertex y : g.neighbors(x)) at(2 * x + 1, 2 * y) = kInf;
  }

  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  while (true) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[static_cast<std::size_t>(source)] = source;
    std::vector<int> queue{source};
    for (std::size_t head = 0; head < queue.size() && parent[static_cast<std::size_t>(sink)] == -1; ++head) {
      const int a = queue[head];
      for (int b = 0; b < nodes; ++b) {
        if (parent[static_cast<std::size_t>(b)] == -1 && at(a, b) > 0) {
          parent[static_cast<std::size_t>(b)] = a;
          queue.push_back(b);
        }
      }
    }
    if (parent[static_cast<std::size_t>(sink)] == -1) break;
    for (int b = sink; b != source; b = parent[static_cast<std::size_t>(b)]) {
      const int a = parent[static_cast<std::size_t>(b)];
      at(a, b) -= 1;
      at(b, a) += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int local_connectivity(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw PreconditionError("local connectivity needs two distinct vertices");
  if (g.adjacent(u, v)) return 1 + disjoint_paths(g.without_edge(Edge(u, v)), u, v);
  return disjoint_paths(g, u, v);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  if (is_complete(g)) return n - 1;
  if (!is_connected(g)) return 0;
  int best = n - 1;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.vertices() - g.closed_neighborhood(u)) {
      if (v > u) best = std::min(best, disjoint_paths(g, u, v));
    }
  }
  return best;
}

}  // namespace tough
