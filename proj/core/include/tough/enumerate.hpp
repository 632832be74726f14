#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

inline constexpr int kMaxEnumeratedGraphOrder = 8;
inline constexpr int kMaxEnumeratedTreeOrder = 9;

/// Bit k of `mask` is the k-th vertex pair in graph6 order
/// (0,1), (0,2), (1,2), (0,3), ...; so masks and graph6 bodies agree.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// 2^(n(n-1)/2).
std::uint64_t labeled_graph_count(int n);

/// All labeled graphs on n vertices in ascending edge-mask order.
/// Throws std::out_of_range unless 1 <= n <= 8.
class LabeledGraphEnumerator {
 public:
  explicit LabeledGraphEnumerator(int n);
  /// Restricts the stream to masks in [first, last).
  LabeledGraphEnumerator(int n, std::uint64_t first, std::uint64_t last);

  std::optional<Graph> next();
  std::uint64_t total() const noexcept { return total_; }

 private:
  int n_;
  std::uint64_t next_mask_;
  std::uint64_t end_;
  std::uint64_t total_;
};

/// Decodes a Prüfer sequence of length n-2 over {0..n-1}.
Graph tree_from_pruefer(int n, std::span<const int> sequence);

/// n^(n-2) for n >= 2, 1 for n = 1.
std::uint64_t labeled_tree_count(int n);

/// All labeled trees on n vertices, by Prüfer sequence in lexicographic order.
/// Throws std::out_of_range unless 1 <= n <= 9.
class LabeledTreeEnumerator {
 public:
  explicit LabeledTreeEnumerator(int n);
  /// Restricts the stream to sequence ranks in [first, last).
  LabeledTreeEnumerator(int n, std::uint64_t first, std::uint64_t last);

  std::optional<Graph> next();
  std::uint64_t total() const noexcept { return total_; }

 private:
  int n_;
  std::uint64_t rank_;
  std::uint64_t end_;
  std::uint64_t total_;
  std::vector<int> sequence_;
};

}  // namespace tough
