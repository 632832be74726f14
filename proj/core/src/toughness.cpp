#include "tough/toughness.hpp"

#include <string>

#include "tough/errors.hpp"

namespace tough {

namespace {

// Next mask with the same popcount (Gosper's hack).
std::uint64_t next_same_size(std::uint64_t x) {
  const std::uint64_t lowest = x & (~x + 1);
  const std::uint64_t ripple = x + lowest;
  return ripple | (((x ^ ripple) >> 2) / lowest);
}

void require_enumerable(const Graph& g) {
  if (g.order() > kMaxExhaustiveOrder) {
    throw PreconditionError("exhaustive cutset enumeration is limited to " +
                            std::to_string(kMaxExhaustiveOrder) + " vertices");
  }
}

void require_connected_noncomplete(const Graph& g, const char* what) {
  if (!is_connected(g)) throw PreconditionError(std::string(what) + " requires a connected graph");
  if (is_complete(g)) throw PreconditionError(std::string(what) + " is undefined for complete graphs");
}

}  // namespace

ToughnessCertificate toughness(const Graph& g) {
  const int n = g.order();
  if (is_complete(g)) return {ExtendedRational::infinity(), std::nullopt, count_components(g)};
  const int whole = count_components(g);
  if (whole > 1) return {ExtendedRational(0), std::nullopt, whole};
  require_enumerable(g);

  // Best ratio so far is best_size / best_components.
  std::int64_t best_size = 0;
  std::int64_t best_components = 0;
  std::uint64_t best_mask = 0;
  bool found = false;

  for (int k = 1; k <= n - 2; ++k) {
    if (found && std::int64_t{k} * best_components > best_size * (n - k)) break;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < limit; mask = next_same_size(mask)) {
      const int w = count_components(g, VertexSet(mask));
      if (w < 2) continue;
      const std::int64_t lhs = std::int64_t{k} * best_components;
      const std::int64_t rhs = best_size * w;
      if (!found || lhs < rhs || (lhs == rhs && mask < best_mask)) {
        found = true;
        best_size = k;
        best_components = w;
        best_mask = mask;
      }
    }
  }

  // A connected noncomplete graph always has a cutset, so `found` holds here.
  return {ExtendedRational(best_size, best_components), VertexSet(best_mask), static_cast<int>(best_components)};
}

bool is_t_tough(const Graph& g, const ExtendedRational& t) {
  if (t.is_infinite()) throw PreconditionError("is_t_tough requires a finite t");
  if (t.is_zero()) return true;
  const int n = g.order();
  if (is_complete(g)) return true;
  if (count_components(g) > 1) return false;
  require_enumerable(g);

  const std::int64_t p = t.numerator();
  const std::int64_t q = t.denominator();
  for (int k = 1; k <= n - 2; ++k) {
    // |S| = k can only fail when k < t * (n - k).
    if (k * q >= p * (n - k)) break;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < limit; mask = next_same_size(mask)) {
      const int w = count_components(g, VertexSet(mask));
      if (w < 2) continue;
      if (k * q < p * w) return false;
    }
  }
  return true;
}

MinimalityResult is_minimally_tough(const Graph& g) {
  require_connected_noncomplete(g, "minimal toughness");
  MinimalityResult result;
  result.toughness = toughness(g).value;
  for (const Edge& e : g.edges()) {
    const Graph reduced = g.without_edge(e);
    if (is_t_tough(reduced, result.toughness)) {
      result.offending_edge = e;
      result.toughness_after = toughness(reduced).value;
      return result;
    }
  }
  result.minimal = true;
  return result;
}

EdgeConditionCheck check_witness_edge(const Graph& g, const ExtendedRational& t, Edge e) {
  if (t.is_infinite()) throw PreconditionError("edge conditions need a finite toughness");
  EdgeConditionCheck check;
  check.report.edge = e;
  check.report.path_count = local_connectivity(g, e.u, e.v);
  check.path_condition =
      ExtendedRational(check.report.path_count) >= ExtendedRational(2) * t + ExtendedRational(1);

  require_enumerable(g);
  const Graph reduced = g.without_edge(e);
  const std::uint64_t universe = (g.vertices() - VertexSet{e.u, e.v}).bits();
  check.cutset_condition = true;
  std::uint64_t mask = 0;
  do {
    const VertexSet s(mask);
    const int w = count_components(g, s);
    if (w > 1 && !component_of(reduced, e.u, s).contains(e.v)) {
      ++check.report.checked_cutsets;
      if (check.cutset_condition && ExtendedRational(s.size()) < ExtendedRational(w + 1) * t) {
        check.cutset_condition = false;
        check.report.failing_cutset = s;
      }
    }
    mask = (mask - universe) & universe;
  } while (mask != 0);
  return check;
}

std::optional<WitnessReport> find_witness_edge(const Graph& g) {
  require_connected_noncomplete(g, "witness search");
  const ExtendedRational t = toughness(g).value;
  for (const Edge& e : g.edges()) {
    const EdgeConditionCheck check = check_witness_edge(g, t, e);
    if (check.satisfied()) return check.report;
  }
  return std::nullopt;
}

bool kriesell_degree_check(const Graph& g) {
  const MinimalityResult r = is_minimally_tough(g);
  if (!r.minimal) throw PreconditionError("degree check requires a minimally tough graph");
  const auto target = ExtendedRational(2) * r.toughness;
  const std::int64_t degree = target.ceil();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == degree) return true;
  }
  return false;
}

}  // namespace tough
