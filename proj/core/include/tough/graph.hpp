#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace tough {

using Vertex = int;

/// Graphs are limited to 64 vertices so that vertex sets fit one machine word.
inline constexpr int kMaxVertices = 64;

/// A set of vertex ids stored as a 64-bit mask.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}

    constexpr Vertex operator*() const noexcept { return std::countr_zero(rest_); }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) noexcept = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Vertex> members) noexcept {
    for (Vertex v : members) bits_ |= std::uint64_t{1} << v;
  }

  /// {0, ..., n-1}.
  static constexpr VertexSet first(int n) noexcept {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(Vertex v) noexcept { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(Vertex v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr Vertex front() const noexcept { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const noexcept { return (bits_ & other.bits_) != 0; }

  constexpr void insert(Vertex v) noexcept { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

  std::vector<Vertex> members() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;
  /// Orders by mask value, i.e. the order in which exhaustive enumeration visits sets.
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) noexcept {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() noexcept = default;
  constexpr Edge(Vertex a, Vertex b) noexcept : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertex ids 0..n-1.
///
/// Adjacency is stored as one bit mask per vertex. Values are immutable after
/// construction; derived graphs (edge deletion, edge insertion) are new values.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices. Throws GraphError when n is outside [0, 64].
  explicit Graph(int n);

  /// Duplicate edges collapse. Throws GraphError on a self-loop or an id >= n.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept;

  VertexSet vertices() const noexcept { return VertexSet::first(n_); }
  VertexSet neighbors(Vertex v) const noexcept { return VertexSet(adj_[static_cast<std::size_t>(v)]); }
  VertexSet closed_neighborhood(Vertex v) const noexcept { return neighbors(v) | VertexSet::singleton(v); }
  std::uint64_t adjacency_bits(Vertex v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const noexcept { return neighbors(u).contains(v); }
  int degree(Vertex v) const noexcept { return neighbors(v).size(); }
  int max_degree() const noexcept;

  /// All edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const;

  Graph without_edge(Edge e) const;
  Graph with_edge(Edge e) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void add_edge(Edge e);

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// True when every pair of vertices of `set` is adjacent.
bool is_clique(const Graph& g, VertexSet set);

bool is_complete(const Graph& g);

/// Connected components of G - removed, ordered by smallest member.
/// The empty vertex set has zero components.
std::vector<VertexSet> components(const Graph& g, VertexSet removed = {});

/// Same count as components(g, removed).size() without materializing the sets.
int count_components(const Graph& g, VertexSet removed = {});

/// The component of G - removed containing `start` (empty if start is removed).
VertexSet component_of(const Graph& g, Vertex start, VertexSet removed = {});

/// A graph with at least one vertex and a single component.
bool is_connected(const Graph& g);

bool is_tree(const Graph& g);

/// Shortest path from `from` to `to` in G - removed, endpoints included.
/// Empty when no such path exists or an endpoint is removed.
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to, VertexSet removed = {});

struct BlockDecomposition {
  VertexSet cut_vertices;
  /// Maximal 2-connected subgraphs and bridges, each given by its vertex set.
  std::vector<VertexSet> blocks;
};

/// Blocks and cut vertices of a connected graph. Throws PreconditionError when
/// the graph is disconnected or empty.
BlockDecomposition block_decomposition(const Graph& g);

/// Maximum number of internally vertex-disjoint u-v paths (a direct edge uv
/// counts as one path). Throws PreconditionError when u == v.
int local_connectivity(const Graph& g, Vertex u, Vertex v);

/// Vertex connectivity: minimum u-v separator over nonadjacent pairs, n-1 for
/// complete graphs, 0 for disconnected ones.
int vertex_connectivity(const Graph& g);

}  // namespace tough
