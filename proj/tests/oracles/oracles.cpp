#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracle {

using tough::ExtendedRational;
using tough::Graph;
using tough::VertexSet;

Matrix matrix_of(const Graph& g) {
  const int n = g.order();
  Matrix adj(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) {
    adj[e.u][e.v] = true;
    adj[e.v][e.u] = true;
  }
  return adj;
}

int components(const Matrix& adj, const std::vector<bool>& removed) {
  const int n = static_cast<int>(adj.size());
  std::vector<bool> seen(removed);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y) {
        if (adj[x][y] && !seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

namespace {

std::vector<bool> bits(int n, unsigned mask) {
  std::vector<bool> out(n);
  for (int i = 0; i < n; ++i) out[i] = (mask >> i) & 1U;
  return out;
}

ExtendedRational toughness_of(const Matrix& adj) {
  const int n = static_cast<int>(adj.size());
  if (components(adj, std::vector<bool>(n, false)) > 1) return ExtendedRational(0);
  std::optional<ExtendedRational> best;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    const int w = components(adj, bits(n, mask));
    if (w < 2) continue;
    const ExtendedRational r(__builtin_popcount(mask), w);
    if (!best || r < *best) best = r;
  }
  return best ? *best : ExtendedRational::infinity();
}

}  // namespace

ExtendedRational toughness(const Graph& g) { return toughness_of(matrix_of(g)); }

bool minimally_tough(const Graph& g) {
  Matrix adj = matrix_of(g);
  const ExtendedRational t = toughness_of(adj);
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!adj[u][v]) continue;
      adj[u][v] = adj[v][u] = false;
      const bool drops = toughness_of(adj) < t;
      adj[u][v] = adj[v][u] = true;
      if (!drops) return false;
    }
  }
  return true;
}

bool chordal(const Graph& g) {
  const Matrix adj = matrix_of(g);
  const int n = g.order();
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k < 4) continue;
    // An induced cycle: connected and every chosen vertex has exactly two
    // chosen neighbors.
    bool two_regular = true;
    for (int v = 0; v < n && two_regular; ++v) {
      if (!((mask >> v) & 1U)) continue;
      int d = 0;
      for (int w = 0; w < n; ++w) d += ((mask >> w) & 1U) && adj[v][w];
      two_regular = d == 2;
    }
    if (!two_regular) continue;
    std::vector<bool> removed(n);
    for (int v = 0; v < n; ++v) removed[v] = !((mask >> v) & 1U);
    if (components(adj, removed) == 1) return false;
  }
  return true;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  const Matrix adj = matrix_of(g);
  const int n = g.order();
  std::vector<unsigned> cliques;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    bool clique = true;
    for (int a = 0; a < n && clique; ++a)
      for (int b = a + 1; b < n && clique; ++b)
        if (((mask >> a) & 1U) && ((mask >> b) & 1U) && !adj[a][b]) clique = false;
    if (clique) cliques.push_back(mask);
  }
  std::vector<VertexSet> out;
  for (unsigned c : cliques) {
    const bool dominated = std::any_of(cliques.begin(), cliques.end(), [&](unsigned d) { return d != c && (c & d) == c; });
    if (!dominated) out.emplace_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Vertex states 0 unopened, 1 open, 2 closed, packed base 3. A vertex may
// open when it meets every open interval and no closed one; it may close once
// all of its neighbors have opened.
struct IntervalSearch {
  const Matrix& adj;
  int n;
  std::vector<int> power;
  std::vector<char> dead;

  IntervalSearch(const Matrix& a, int order) : adj(a), n(order), power(order + 1, 1) {
    for (int i = 1; i <= n; ++i) power[i] = power[i - 1] * 3;
    dead.assign(power[n], 0);
  }

  int state_of(int code, int v) const { return code / power[v] % 3; }

  bool run(int code) {
    if (code == power[n] - 1) return true;
    if (dead[code]) return false;
    for (int v = 0; v < n; ++v) {
      const int s = state_of(code, v);
      bool ok = s != 2;
      for (int w = 0; w < n && ok; ++w) {
        if (w == v) continue;
        const int t = state_of(code, w);
        if (s == 0) ok = adj[v][w] ? t != 2 : t != 1;
        else ok = !(adj[v][w] && t == 0);
      }
      if (ok && run(code + power[v])) return true;
    }
    dead[code] = 1;
    return false;
  }
};

}  // namespace

bool interval(const Graph& g) {
  const Matrix adj = matrix_of(g);
  IntervalSearch search(adj, g.order());
  return search.run(0);
}

namespace {

int min_separator(const Matrix& adj, int u, int v) {
  const int n = static_cast<int>(adj.size());
  int best = n;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (((mask >> u) & 1U) || ((mask >> v) & 1U)) continue;
    const int k = __builtin_popcount(mask);
    if (k >= best) continue;
    // Flood from u and see whether v is reached.
    std::vector<bool> seen = bits(n, mask);
    std::vector<int> stack{u};
    seen[u] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y)
        if (adj[x][y] && !seen[y]) seen[y] = true, stack.push_back(y);
    }
    if (!seen[v]) best = k;
  }
  return best;
}

}  // namespace

int local_connectivity(const Graph& g, int u, int v) {
  Matrix adj = matrix_of(g);
  const bool edge = adj[u][v];
  adj[u][v] = adj[v][u] = false;
  return min_separator(adj, u, v) + (edge ? 1 : 0);
}

int vertex_connectivity(const Graph& g) {
  const Matrix adj = matrix_of(g);
  const int n = g.order();
  int best = n - 1;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k < best && k < n && components(adj, bits(n, mask)) > 1) best = k;
  }
  return best;
}

bool valid_asteroidal_triple(const Graph& g, const tough::AsteroidalTriple& at) {
  const Matrix adj = matrix_of(g);
  const auto& x = at.vertices;
  if (x[0] == x[1] || x[1] == x[2] || x[0] == x[2]) return false;
  if (adj[x[0]][x[1]] || adj[x[1]][x[2]] || adj[x[0]][x[2]]) return false;
  for (int i = 0; i < 3; ++i) {
    const auto& path = at.witness_paths[i];
    const int a = x[(i + 1) % 3];
    const int b = x[(i + 2) % 3];
    if (path.empty()) return false;
    const bool ends = (path.front() == a && path.back() == b) || (path.front() == b && path.back() == a);
    if (!ends) return false;
    std::set<int> distinct(path.begin(), path.end());
    if (distinct.size() != path.size()) return false;
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (path[k] == x[i] || adj[path[k]][x[i]]) return false;
      if (k > 0 && !adj[path[k - 1]][path[k]]) return false;
    }
  }
  return true;
}

bool caterpillar(const Graph& g) {
  const Matrix adj = matrix_of(g);
  const int n = g.order();
  if (n == 0 || g.size() != n - 1 || components(adj, std::vector<bool>(n, false)) != 1) return false;
  std::vector<int> deg(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) deg[v] += adj[v][w];
  for (int c = 0; c < n; ++c) {
    int long_arms = 0;
    for (int w = 0; w < n; ++w) long_arms += adj[c][w] && deg[w] >= 2;
    if (long_arms >= 3) return false;
  }
  return true;
}

std::optional<int> max_clique_tree_weight(const std::vector<VertexSet>& cliques) {
  const int k = static_cast<int>(cliques.size());
  if (k == 0) return 0;
  std::vector<bool> in(k, false);
  std::vector<int> key(k, -1);
  key[0] = 0;
  int total = 0;
  for (int step = 0; step < k; ++step) {
    int pick = -1;
    for (int i = 0; i < k; ++i)
      if (!in[i] && key[i] >= 0 && (pick < 0 || key[i] > key[pick])) pick = i;
    if (pick < 0) return std::nullopt;
    in[pick] = true;
    total += key[pick];
    for (int i = 0; i < k; ++i) {
      const int w = (cliques[pick] & cliques[i]).size();
      if (!in[i] && w > 0 && w > key[i]) key[i] = w;
    }
  }
  return total;
}

bool valid_clique_tree(const tough::CliqueTree& tree, const Graph& g) {
  std::vector<VertexSet> sorted = tree.cliques;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != maximal_cliques(g)) return false;
  const int k = static_cast<int>(tree.cliques.size());
  if (static_cast<int>(tree.edges.size()) != k - 1) return false;
  Matrix links(k, std::vector<bool>(k, false));
  for (const auto& e : tree.edges) {
    if (e.a < 0 || e.b < 0 || e.a >= k || e.b >= k || e.a == e.b) return false;
    links[e.a][e.b] = links[e.b][e.a] = true;
  }
  if (components(links, std::vector<bool>(k, false)) != 1) return false;
  for (int v = 0; v < g.order(); ++v) {
    std::vector<bool> removed(k);
    for (int i = 0; i < k; ++i) removed[i] = !tree.cliques[i].contains(v);
    if (std::count(removed.begin(), removed.end(), false) > 0 && components(links, removed) != 1) return false;
  }
  return true;
}

int modified_degree(const Graph& g, int v) {
  const Matrix adj = matrix_of(g);
  std::vector<bool> removed(g.order(), false);
  removed[v] = true;
  return components(adj, removed);
}

}  // namespace oracle
