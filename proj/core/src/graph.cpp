#include "tough/graph.hpp"

#include <algorithm>
#include <string>

#include "tough/errors.hpp"

namespace tough {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxVertices) + "]");
  }
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::add_edge(Edge e) {
  if (e.u < 0 || e.v >= n_) {
    throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                     " has a vertex outside 0.." + std::to_string(n_ - 1));
  }
  if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
  adj_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
  adj_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
}

int Graph::size() const noexcept {
  int twice = 0;
  for (std::uint64_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (std::uint64_t row : adj_) best = std::max(best, std::popcount(row));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::without_edge(Edge e) const {
  Graph copy = *this;
  if (e.u >= 0 && e.v < n_ && e.u != e.v) {
    copy.adj_[static_cast<std::size_t>(e.u)] &= ~(std::uint64_t{1} << e.v);
    copy.adj_[static_cast<std::size_t>(e.v)] &= ~(std::uint64_t{1} << e.u);
  }
  return copy;
}

Graph Graph::with_edge(Edge e) const {
  Graph copy = *this;
  copy.add_edge(e);
  return copy;
}

bool is_clique(const Graph& g, VertexSet set) {
  for (Vertex v : set) {
    if (!(set - VertexSet::singleton(v)).is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_complete(const Graph& g) { return is_clique(g, g.vertices()); }

VertexSet component_of(const Graph& g, Vertex start, VertexSet removed) {
  const std::uint64_t allowed = g.vertices().bits() & ~removed.bits();
  std::uint64_t comp = (std::uint64_t{1} << start) & allowed;
  std::uint64_t frontier = comp;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      next |= g.adjacency_bits(std::countr_zero(f));
    }
    next &= allowed & ~comp;
    comp |= next;
    frontier = next;
  }
  return VertexSet(comp);
}

std::vector<VertexSet> components(const Graph& g, VertexSet removed) {
  std::vector<VertexSet> out;
  VertexSet remaining = g.vertices() - removed;
  while (!remaining.empty()) {
    const VertexSet comp = component_of(g, remaining.front(), removed);
    out.push_back(comp);
    remaining -= comp;
  }
  return out;
}

int count_components(const Graph& g, VertexSet removed) {
  int count = 0;
  VertexSet remaining = g.vertices() - removed;
  while (!remaining.empty()) {
    remaining -= component_of(g, remaining.front(), removed);
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) { return g.order() > 0 && count_components(g) == 1; }

bool is_tree(const Graph& g) { return is_connected(g) && g.size() == g.order() - 1; }

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to, VertexSet removed) {
  if (removed.contains(from) || removed.contains(to)) return {};
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  VertexSet seen = VertexSet::singleton(from) | removed;
  std::vector<Vertex> queue{from};
  for (std::size_t head = 0; head < queue.size() && !seen.contains(to); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbors(x) - seen) {
      seen.insert(y);
      parent[static_cast<std::size_t>(y)] = x;
      queue.push_back(y);
    }
  }
  if (!seen.contains(to) || removed.contains(to)) return {};
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace tough
