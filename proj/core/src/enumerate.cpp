#include "tough/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tough {

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((mask >> k) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::uint64_t labeled_graph_count(int n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

LabeledGraphEnumerator::LabeledGraphEnumerator(int n)
    : LabeledGraphEnumerator(n, 0, n >= 1 && n <= kMaxEnumeratedGraphOrder ? labeled_graph_count(n) : 0) {}

LabeledGraphEnumerator::LabeledGraphEnumerator(int n, std::uint64_t first, std::uint64_t last)
    : n_(n), next_mask_(first), end_(last), total_(0) {
  if (n < 1 || n > kMaxEnumeratedGraphOrder) {
    throw std::out_of_range("graph enumeration supports 1 <= n <= " + std::to_string(kMaxEnumeratedGraphOrder));
  }
  total_ = labeled_graph_count(n);
  end_ = std::min(end_, total_);
}

std::optional<Graph> LabeledGraphEnumerator::next() {
  if (next_mask_ >= end_) return std::nullopt;
  return graph_from_edge_mask(n_, next_mask_++);
}

Graph tree_from_pruefer(int n, std::span<const int> sequence) {
  if (n == 1 && sequence.empty()) return Graph(1);
  if (n < 2 || static_cast<int>(sequence.size()) != n - 2) {
    throw std::invalid_argument("Prüfer sequence must have length n - 2");
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : sequence) {
    if (x < 0 || x >= n) throw std::invalid_argument("Prüfer entry out of range");
    ++degree[static_cast<std::size_t>(x)];
  }
  std::vector<Edge> edges;
  for (int x : sequence) {
    const auto leaf = std::find(degree.begin(), degree.end(), 1) - degree.begin();
    edges.emplace_back(static_cast<Vertex>(leaf), x);
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(x)];
  }
  Vertex last_u = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] != 1) continue;
    if (last_u < 0) {
      last_u = v;
    } else {
      edges.emplace_back(last_u, v);
      break;
    }
  }
  return Graph(n, edges);
}

std::uint64_t labeled_tree_count(int n) {
  std::uint64_t count = 1;
  for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
  return count;
}

LabeledTreeEnumerator::LabeledTreeEnumerator(int n)
    : LabeledTreeEnumerator(n, 0, n >= 1 && n <= kMaxEnumeratedTreeOrder ? labeled_tree_count(n) : 0) {}

LabeledTreeEnumerator::LabeledTreeEnumerator(int n, std::uint64_t first, std::uint64_t last)
    : n_(n), rank_(first), end_(last), total_(0) {
  if (n < 1 || n > kMaxEnumeratedTreeOrder) {
    throw std::out_of_range("tree enumeration supports 1 <= n <= " + std::to_string(kMaxEnumeratedTreeOrder));
  }
  total_ = labeled_tree_count(n);
  end_ = std::min(end_, total_);
  sequence_.assign(static_cast<std::size_t>(std::max(n - 2, 0)), 0);
  // Rank in base n, most significant digit first.
  std::uint64_t r = rank_;
  for (auto it = sequence_.rbegin(); it != sequence_.rend(); ++it) {
    *it = static_cast<int>(r % static_cast<std::uint64_t>(n));
    r /= static_cast<std::uint64_t>(n);
  }
}

std::optional<Graph> LabeledTreeEnumerator::next() {
  if (rank_ >= end_) return std::nullopt;
  Graph tree = tree_from_pruefer(n_, sequence_);
  ++rank_;
  for (auto it = sequence_.rbegin(); it != sequence_.rend(); ++it) {
    if (++*it < n_) break;
    *it = 0;
  }
  return tree;
}

}  // namespace tough
