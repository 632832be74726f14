#pragma once

#include <cstdint>
#include <optional>

#include "tough/graph.hpp"
#include "tough/rational.hpp"

namespace tough {

/// Largest order accepted by the exhaustive cutset searches below.
inline constexpr int kMaxExhaustiveOrder = 32;

struct ToughnessCertificate {
  ExtendedRational value;
  /// A minimizing cutset; absent for complete and disconnected graphs.
  std::optional<VertexSet> tough_set;
  /// omega(G - tough_set), or omega(G) when there is no tough set.
  int components_after = 0;
};

/// Exact toughness by exhaustive cutset enumeration.
///
/// Complete graphs (including K_1) have infinite toughness and disconnected
/// graphs toughness 0, neither with a tough set. Otherwise the result is the
/// minimum of |S| / omega(G - S) over all S with omega(G - S) > 1, and the
/// returned tough set is the minimizer with the smallest mask value.
///
/// Sets are visited by increasing size; once k / (n - k) exceeds the best ratio
/// no set of size >= k can match it and the search stops.
ToughnessCertificate toughness(const Graph& g);

/// True when |S| >= t * omega(G - S) for every S with omega(G - S) > 1,
/// equivalently toughness(g) >= t. Throws PreconditionError for infinite t.
bool is_t_tough(const Graph& g, const ExtendedRational& t);

struct MinimalityResult {
  bool minimal = false;
  ExtendedRational toughness;
  /// First edge (lexicographic) whose deletion does not lower the toughness.
  std::optional<Edge> offending_edge;
  /// toughness(G - offending_edge).
  std::optional<ExtendedRational> toughness_after;
};

/// Minimal toughness by single-edge deletion: tau(G - e) < tau(G) for all e.
/// Throws PreconditionError for complete or disconnected graphs.
MinimalityResult is_minimally_tough(const Graph& g);

/// Certificate that an edge uv meets both edge conditions of the
/// non-minimality characterization: at least 2t + 1 internally disjoint u-v
/// paths, and |S| >= (omega(G - S) + 1) t for every cutset S of G that
/// separates u from v in G - uv.
struct WitnessReport {
  Edge edge;
  int path_count = 0;
  /// Number of sets S that were both cutsets of G and u-v separators in G - uv.
  std::uint64_t checked_cutsets = 0;
  /// First S (by mask) violating the cutset inequality.
  std::optional<VertexSet> failing_cutset;
};

struct EdgeConditionCheck {
  WitnessReport report;
  bool path_condition = false;
  bool cutset_condition = false;

  bool satisfied() const noexcept { return path_condition && cutset_condition; }
};

/// Evaluates both conditions for one edge at toughness t (t finite).
/// Every S ⊆ V - {u, v} is examined; omega(G - S) is measured in G.
EdgeConditionCheck check_witness_edge(const Graph& g, const ExtendedRational& t, Edge e);

/// Some edge satisfying both conditions, or nullopt. A witness exists exactly
/// when G is not minimally tough. Throws PreconditionError for complete or
/// disconnected graphs.
std::optional<WitnessReport> find_witness_edge(const Graph& g);

/// For a minimally t-tough graph: does some vertex have degree ceil(2t)?
/// Throws PreconditionError when the graph is not minimally tough.
bool kriesell_degree_check(const Graph& g);

}  // namespace tough
