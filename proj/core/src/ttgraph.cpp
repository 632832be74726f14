#include "tough/ttgraph.hpp"

#include <algorithm>

#include "tough/chordal.hpp"
#include "tough/toughness.hpp"

namespace tough {

int modified_degree(const Graph& g, Vertex v) { return count_components(g, VertexSet::singleton(v)); }

int max_modified_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, modified_degree(g, v));
  return best;
}

ExtendedRational toughness_from_modified_degree(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("modified-degree toughness requires a connected graph");
  if (is_complete(g)) throw PreconditionError("modified-degree toughness is undefined for complete graphs");
  if (const auto v = find_non_simplicial_non_cut(g)) {
    throw PreconditionError("vertex " + std::to_string(*v) + " is neither simplicial nor a cut vertex");
  }
  return ExtendedRational(1, max_modified_degree(g));
}

const char* to_string(TTCase c) {
  switch (c) {
    case TTCase::a: return "a";
    case TTCase::b: return "b";
    case TTCase::pure_tree: return "pure_tree";
  }
  return "pure_tree";
}

std::optional<TTCase> parse_tt_case(const std::string& text) {
  if (text == "a") return TTCase::a;
  if (text == "b") return TTCase::b;
  if (text == "pure_tree") return TTCase::pure_tree;
  return std::nullopt;
}

const char* to_string(TTBuildFailure f) {
  switch (f) {
    case TTBuildFailure::not_a_tree: return "not_a_tree";
    case TTBuildFailure::vertex_out_of_range: return "vertex_out_of_range";
    case TTBuildFailure::max_degree_below_three: return "max_degree_below_three";
    case TTBuildFailure::removed_degree_not_three: return "removed_degree_not_three";
    case TTBuildFailure::removed_not_independent: return "removed_not_independent";
    case TTBuildFailure::neighbor_degree_violation: return "neighbor_degree_violation";
  }
  return "unknown";
}

const char* to_string(TTRejection r) {
  switch (r) {
    case TTRejection::accepted: return "accepted";
    case TTRejection::disconnected: return "disconnected";
    case TTRejection::complete: return "complete";
    case TTRejection::bad_block: return "bad_block";
    case TTRejection::md_mismatch: return "md_mismatch";
    case TTRejection::too_large: return "too_large";
    case TTRejection::replay_mismatch: return "replay_mismatch";
  }
  return "unknown";
}

namespace {

VertexSet vertices_of_degree(const Graph& g, int degree) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == degree) out.insert(v);
  }
  return out;
}

bool is_independent(const Graph& g, VertexSet set) {
  for (Vertex v : set) {
    if (g.neighbors(v).intersects(set)) return false;
  }
  return true;
}

bool neighbors_have_degree(const Graph& g, VertexSet set, int degree) {
  for (Vertex y : set) {
    for (Vertex w : g.neighbors(y)) {
      if (g.degree(w) != degree) return false;
    }
  }
  return true;
}

// Shared by tt_from_tree and replay: keeps tree vertices outside `removed`,
// renames them through `to_graph`, and adds one triangle per removed vertex.
Graph construct(const Graph& tree, VertexSet removed, const std::vector<Vertex>& to_graph, int graph_order) {
  std::vector<Edge> edges;
  for (const Edge& e : tree.edges()) {
    if (!removed.contains(e.u) && !removed.contains(e.v)) edges.emplace_back(to_graph[e.u], to_graph[e.v]);
  }
  for (Vertex y : removed) {
    const VertexSet around = tree.neighbors(y);
    if (around.size() != 3 || around.intersects(removed)) {
      throw PreconditionError("removed vertex " + std::to_string(y) + " does not have three kept neighbors");
    }
    const auto m = around.members();
    edges.emplace_back(to_graph[m[0]], to_graph[m[1]]);
    edges.emplace_back(to_graph[m[0]], to_graph[m[2]]);
    edges.emplace_back(to_graph[m[1]], to_graph[m[2]]);
  }
  return Graph(graph_order, edges);
}

std::vector<TriangleSource> triangles_for(const Graph& tree, VertexSet removed, const std::vector<Vertex>& to_graph) {
  std::vector<TriangleSource> out;
  for (Vertex y : removed) {
    TriangleSource t;
    t.center = y;
    int i = 0;
    for (Vertex w : tree.neighbors(y)) t.triangle[i++] = to_graph[w];
    std::sort(t.triangle.begin(), t.triangle.end());
    out.push_back(t);
  }
  return out;
}

}  // namespace

TTConstruction tt_from_tree(const Graph& tree, VertexSet removed) {
  if (!is_tree(tree)) throw TTBuildError(TTBuildFailure::not_a_tree, "source graph is not a tree");
  if (!removed.is_subset_of(tree.vertices())) {
    throw TTBuildError(TTBuildFailure::vertex_out_of_range, "removed set names a vertex outside the tree");
  }
  const int delta = tree.max_degree();
  if (delta < 3) {
    throw TTBuildError(TTBuildFailure::max_degree_below_three,
                       "tree has maximum degree " + std::to_string(delta) + " < 3");
  }
  for (Vertex y : removed) {
    if (tree.degree(y) != 3) {
      throw TTBuildError(TTBuildFailure::removed_degree_not_three,
                         "removed vertex " + std::to_string(y) + " has degree " + std::to_string(tree.degree(y)));
    }
  }
  if (!is_independent(tree, removed)) {
    throw TTBuildError(TTBuildFailure::removed_not_independent, "removed set is not independent");
  }

  TTCase tag = TTCase::b;
  if (!removed.empty()) {
    const bool case_a =
        delta == 3 && removed == vertices_of_degree(tree, 3) && neighbors_have_degree(tree, removed, 2);
    if (case_a) {
      tag = TTCase::a;
    } else if (!neighbors_have_degree(tree, removed, delta)) {
      throw TTBuildError(TTBuildFailure::neighbor_degree_violation,
                         "neighbors of removed vertices satisfy neither admissible degree condition");
    }
  }

  TTConstruction out;
  std::vector<Vertex> to_graph(static_cast<std::size_t>(tree.order()), -1);
  for (Vertex v : tree.vertices() - removed) {
    to_graph[v] = static_cast<Vertex>(out.decomposition.correspondence.size());
    out.decomposition.correspondence.push_back(v);
  }
  const int order = static_cast<int>(out.decomposition.correspondence.size());
  out.graph = construct(tree, removed, to_graph, order);

  out.decomposition.tree = tree;
  out.decomposition.removed = removed;
  out.decomposition.triangle_map = triangles_for(tree, removed, to_graph);
  out.decomposition.case_tag = tag;
  out.decomposition.mu = max_modified_degree(out.graph);
  return out;
}

Graph replay_construction(const TTDecomposition& d) {
  const int order = static_cast<int>(d.correspondence.size());
  std::vector<Vertex> to_graph(static_cast<std::size_t>(d.tree.order()), -1);
  for (Vertex i = 0; i < order; ++i) {
    const Vertex t = d.correspondence[i];
    if (t < 0 || t >= d.tree.order() || d.removed.contains(t) || to_graph[t] != -1) {
      throw PreconditionError("correspondence is not a bijection onto the kept tree vertices");
    }
    to_graph[t] = i;
  }
  if (order + d.removed.size() != d.tree.order()) {
    throw PreconditionError("correspondence does not cover every kept tree vertex");
  }
  return construct(d.tree, d.removed, to_graph, order);
}

bool same_source_tree(const TTDecomposition& a, const TTDecomposition& b) {
  if (a.correspondence.size() != b.correspondence.size()) return false;
  if (a.tree.order() != b.tree.order() || a.tree.size() != b.tree.size()) return false;
  if (a.removed.size() != b.removed.size()) return false;

  std::vector<Vertex> a_to_b(static_cast<std::size_t>(a.tree.order()), -1);
  for (std::size_t i = 0; i < a.correspondence.size(); ++i) {
    const Vertex x = a.correspondence[i];
    if (x < 0 || x >= a.tree.order()) return false;
    a_to_b[x] = b.correspondence[i];
  }
  for (const TriangleSource& ta : a.triangle_map) {
    const auto match = std::find_if(b.triangle_map.begin(), b.triangle_map.end(),
                                    [&](const TriangleSource& tb) { return tb.triangle == ta.triangle; });
    if (match == b.triangle_map.end()) return false;
    a_to_b[ta.center] = match->center;
  }
  VertexSet image;
  for (Vertex x = 0; x < a.tree.order(); ++x) {
    if (a_to_b[x] < 0 || a_to_b[x] >= b.tree.order() || image.contains(a_to_b[x])) return false;
    image.insert(a_to_b[x]);
  }
  for (const Edge& e : a.tree.edges()) {
    if (!b.tree.adjacent(a_to_b[e.u], a_to_b[e.v])) return false;
  }
  return replay_construction(a) == replay_construction(b);
}

std::vector<VertexSet> valid_removal_sets(const Graph& tree) {
  std::vector<VertexSet> out;
  if (!is_tree(tree)) return out;
  const int delta = tree.max_degree();
  if (delta < 3) return out;

  const VertexSet degree3 = vertices_of_degree(tree, 3);
  if (delta == 3 && is_independent(tree, degree3) && neighbors_have_degree(tree, degree3, 2)) out.push_back(degree3);

  VertexSet candidates;
  for (Vertex y : degree3) {
    if (neighbors_have_degree(tree, VertexSet::singleton(y), delta)) candidates.insert(y);
  }
  const std::uint64_t universe = candidates.bits();
  std::uint64_t mask = 0;
  do {
    if (is_independent(tree, VertexSet(mask))) out.push_back(VertexSet(mask));
    mask = (mask - universe) & universe;
  } while (mask != 0);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TTRecognition recognize_tt(const Graph& g) {
  TTRecognition out;
  auto reject = [&out](TTRejection reason, std::string detail) {
    out.reason = reason;
    out.detail = std::move(detail);
    return out;
  };

  if (!is_connected(g)) return reject(TTRejection::disconnected, "graph is not connected");
  if (is_complete(g)) return reject(TTRejection::complete, "complete graphs have infinite toughness");

  const int n = g.order();
  const BlockDecomposition blocks = block_decomposition(g);
  std::vector<VertexSet> triangles;
  std::vector<Edge> bridges;
  for (const VertexSet& b : blocks.blocks) {
    if (b.size() == 2) {
      bridges.emplace_back(b.front(), (b - VertexSet::singleton(b.front())).front());
    } else if (b.size() == 3 && is_clique(g, b)) {
      triangles.push_back(b);
    } else {
      std::string members;
      for (Vertex v : b) members += (members.empty() ? "" : ",") + std::to_string(v);
      return reject(TTRejection::bad_block, "block {" + members + "} is neither an edge nor a triangle");
    }
  }

  const int mu = max_modified_degree(g);
  for (const VertexSet& t : triangles) {
    for (Vertex v : t) {
      const int md = modified_degree(g, v);
      if (md != mu) {
        return reject(TTRejection::md_mismatch, "triangle vertex " + std::to_string(v) + " has modified degree " +
                                                    std::to_string(md) + " < " + std::to_string(mu));
      }
    }
  }

  TTDecomposition d;
  d.mu = mu;
  d.correspondence.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) d.correspondence[v] = v;

  if (triangles.empty()) {
    d.tree = g;
    d.case_tag = TTCase::pure_tree;
    out.decomposition = std::move(d);
    return out;
  }

  const int tree_order = n + static_cast<int>(triangles.size());
  if (tree_order > kMaxVertices) {
    return reject(TTRejection::too_large, "source tree would need " + std::to_string(tree_order) + " vertices");
  }
  std::vector<Edge> tree_edges = bridges;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const Vertex center = n + static_cast<Vertex>(i);
    d.removed.insert(center);
    TriangleSource source;
    source.center = center;
    int k = 0;
    for (Vertex v : triangles[i]) {
      tree_edges.emplace_back(v, center);
      source.triangle[k++] = v;
    }
    d.triangle_map.push_back(source);
  }
  d.tree = Graph(tree_order, tree_edges);

  try {
    TTConstruction replay = tt_from_tree(d.tree, d.removed);
    if (replay.graph != g) return reject(TTRejection::replay_mismatch, "replayed construction differs from the input");
    d.case_tag = replay.decomposition.case_tag;
  } catch (const TTBuildError& e) {
    return reject(TTRejection::replay_mismatch, std::string("source tree rejected: ") + e.what());
  }
  out.decomposition = std::move(d);
  return out;
}

MainTheoremReport classify_main_theorem(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("classification requires a connected graph");
  if (is_complete(g)) throw PreconditionError("classification is undefined for complete graphs");
  if (!is_chordal(g)) throw PreconditionError("classification requires a chordal graph");

  MainTheoremReport report;
  const MinimalityResult minimality = is_minimally_tough(g);
  report.toughness = minimality.toughness;
  report.minimally_tough = minimality.minimal;
  report.offending_edge = minimality.offending_edge;
  report.left = minimality.minimal && minimality.toughness <= ExtendedRational(1, 2);

  report.mu = max_modified_degree(g);
  const TTRecognition recognition = recognize_tt(g);
  report.tt_rejection = recognition.reason;
  if (recognition.accepted()) report.case_tag = recognition.decomposition->case_tag;
  report.right = recognition.accepted() && report.toughness == ExtendedRational(1, report.mu);
  return report;
}

}  // namespace tough
