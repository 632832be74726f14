#include "tough/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tough/chordal.hpp"
#include "tough/enumerate.hpp"
#include "tough/graph_io.hpp"
#include "tough/interval.hpp"
#include "tough/toughness.hpp"

namespace tough {

namespace {

constexpr std::array<std::pair<SweepKind, const char*>, 7> kNames{{
    {SweepKind::main, "main"},
    {SweepKind::lemma14, "lemma14"},
    {SweepKind::theorem7, "theorem7"},
    {SweepKind::theorem5, "theorem5"},
    {SweepKind::corollary, "corollary"},
    {SweepKind::kriesell, "kriesell"},
    {SweepKind::construction, "construction"},
}};

const ExtendedRational kHalf(1, 2);

// Per-worker accumulator.
struct Tally {
  std::map<std::string, std::uint64_t, std::less<>> counts;
  std::vector<SweepMismatch> mismatches;
  std::vector<MinimallyToughRow> rows;
  bool collect_rows = true;

  void bump(std::string_view key, std::uint64_t by = 1) {
    auto it = counts.find(key);
    if (it == counts.end()) it = counts.emplace(std::string(key), 0).first;
    it->second += by;
  }

  void mismatch(const Graph& g, std::string reason) { mismatches.push_back({emit_graph6(g), std::move(reason)}); }

  void row(const Graph& g, const ExtendedRational& tau) {
    if (!collect_rows) return;
    const TTRecognition tt = recognize_tt(g);
    rows.push_back({emit_graph6(g), tau, max_modified_degree(g), tt.accepted(),
                    tt.accepted() ? to_string(tt.decomposition->case_tag) : ""});
  }

  void merge(Tally&& other) {
    for (auto& [key, value] : other.counts) bump(key, value);
    std::move(other.mismatches.begin(), other.mismatches.end(), std::back_inserter(mismatches));
    std::move(other.rows.begin(), other.rows.end(), std::back_inserter(rows));
  }
};

std::string members_text(VertexSet s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

// Shared prefix of the graph sweeps: counts the graph and reports whether it is
// connected and noncomplete.
bool connected_noncomplete(const Graph& g, Tally& t) {
  t.bump("examined");
  if (!is_connected(g)) return false;
  t.bump("connected");
  if (is_complete(g)) return false;
  t.bump("noncomplete");
  return true;
}

void check_main(const Graph& g, Tally& t) {
  if (!connected_noncomplete(g, t)) return;
  if (!is_chordal(g)) return;
  t.bump("chordal");
  const ExtendedRational tau = toughness(g).value;
  if (tau > kHalf) return;
  t.bump("admissible");

  const MainTheoremReport report = classify_main_theorem(g);
  if (report.left) {
    t.bump("minimally_tough");
    t.bump("minimally_tough[t=" + report.toughness.to_string() + "]");
    t.row(g, report.toughness);
  }
  if (report.tt_rejection == TTRejection::accepted) t.bump("tt_graph");
  if (report.right) t.bump("tt_with_tau_1_over_mu");
  if (!report.agree()) {
    std::ostringstream reason;
    reason << "minimally tough=" << report.left << " but TT with tau=1/mu=" << report.right << " (tau=" << report.toughness
           << ", mu=" << report.mu << ", recognition=" << to_string(report.tt_rejection) << ")";
    t.mismatch(g, reason.str());
  }
}

void check_lemma14(const Graph& g, Tally& t) {
  if (!connected_noncomplete(g, t)) return;
  if (find_non_simplicial_non_cut(g)) return;
  t.bump("simplicial_or_cut");
  const ExtendedRational brute = toughness(g).value;
  const ExtendedRational formula = toughness_from_modified_degree(g);
  if (brute != formula) t.mismatch(g, "tau=" + brute.to_string() + " but 1/mu=" + formula.to_string());
}

void check_theorem7(const Graph& g, Tally& t) {
  if (!connected_noncomplete(g, t)) return;
  const MinimalityResult m = is_minimally_tough(g);
  const auto witness = find_witness_edge(g);
  if (m.minimal) t.bump("minimally_tough");
  if (witness) t.bump("witnessed");
  if (witness.has_value() == m.minimal) {
    std::string reason = m.minimal ? "minimally tough but witness edge " : "not minimally tough but no witness edge";
    if (witness) reason += std::to_string(witness->edge.u) + "-" + std::to_string(witness->edge.v);
    t.mismatch(g, reason);
  }
}

void check_theorem5(const Graph& g, Tally& t) {
  if (!connected_noncomplete(g, t)) return;
  if (!is_chordal(g)) return;
  t.bump("chordal");
  if (toughness(g).value > ExtendedRational(1)) return;
  const MinimalityResult m = is_minimally_tough(g);
  if (!m.minimal) return;
  t.bump("minimally_tough");
  t.bump("minimally_tough[t=" + m.toughness.to_string() + "]");
  t.row(g, m.toughness);
  if (m.toughness > kHalf) {
    t.mismatch(g, "minimally " + m.toughness.to_string() + "-tough chordal graph with 1/2 < t <= 1");
    return;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_simplicial(g, v) && g.degree(v) != 1) {
      t.mismatch(g, "simplicial vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
      return;
    }
  }
}

void check_corollary(const Graph& g, Tally& t) {
  if (!connected_noncomplete(g, t)) return;
  if (!is_interval(g)) return;
  t.bump("interval");
  const CorollaryReport report = corollary_check(g);
  if (!report.applicable) return;
  t.bump("minimally_tough_interval");
  t.row(g, *report.toughness);
  if (report.caterpillar) t.bump("caterpillar");
  if (!report.consistent) {
    t.mismatch(g, "minimally " + report.toughness->to_string() + "-tough interval graph is not a caterpillar");
  }
}

void check_kriesell(const Graph& g, Tally& t) {
  if (!connected_noncomplete(g, t)) return;
  const MinimalityResult m = is_minimally_tough(g);
  if (!m.minimal) return;
  t.bump("minimally_tough");
  t.bump("minimally_tough[t=" + m.toughness.to_string() + "]");
  t.row(g, m.toughness);
  if (!kriesell_degree_check(g)) {
    t.mismatch(g, "no vertex of degree " + std::to_string((ExtendedRational(2) * m.toughness).ceil()));
  }
}

// One (tree, removal set) instance of the construction sweep.
void check_construction_instance(const Graph& tree, const Graph& g, const TTDecomposition& built, Tally& t) {
  t.bump("instances");
  t.bump(std::string("case_") + to_string(built.case_tag));
  const std::string where = "Y=" + members_text(built.removed) + ": ";

  const ExtendedRational tau = toughness(g).value;
  const int mu = max_modified_degree(g);
  if (tau != ExtendedRational(1, mu)) {
    t.mismatch(tree, where + "tau=" + tau.to_string() + " but 1/mu=1/" + std::to_string(mu));
    return;
  }
  const MinimalityResult m = is_minimally_tough(g);
  if (!m.minimal) {
    t.mismatch(tree, where + "deleting " + std::to_string(m.offending_edge->u) + "-" +
                         std::to_string(m.offending_edge->v) + " keeps toughness " + m.toughness_after->to_string());
    return;
  }
  t.bump("minimally_tough");
  const TTRecognition recognized = recognize_tt(g);
  if (!recognized.accepted()) {
    t.mismatch(tree, where + "recognition rejected: " + recognized.detail);
    return;
  }
  if (replay_construction(*recognized.decomposition) != g) {
    t.mismatch(tree, where + "replay of the recognized decomposition differs");
    return;
  }
  if (!same_source_tree(*recognized.decomposition, built)) {
    t.mismatch(tree, where + "recognized source tree differs from the input tree");
    return;
  }
  if (!built.removed.empty() && recognized.decomposition->case_tag != built.case_tag) {
    t.mismatch(tree, where + "recognized case " + to_string(recognized.decomposition->case_tag) + " but built case " +
                         to_string(built.case_tag));
    return;
  }
  t.bump("inverted");
}

void check_construction(const Graph& tree, Tally& t) {
  t.bump("trees");
  if (is_complete(tree)) return;  // K_1 and K_2
  const auto sets = valid_removal_sets(tree);
  if (sets.empty()) {
    // Paths: the tree itself, with nothing removed.
    TTDecomposition pure;
    pure.tree = tree;
    pure.case_tag = TTCase::pure_tree;
    pure.mu = max_modified_degree(tree);
    for (Vertex v = 0; v < tree.order(); ++v) pure.correspondence.push_back(v);
    check_construction_instance(tree, tree, pure, t);
    return;
  }
  for (VertexSet y : sets) {
    const TTConstruction built = tt_from_tree(tree, y);
    check_construction_instance(tree, built.graph, built.decomposition, t);
  }
}

void check_one(SweepKind kind, const Graph& g, Tally& t) {
  switch (kind) {
    case SweepKind::main: return check_main(g, t);
    case SweepKind::lemma14: return check_lemma14(g, t);
    case SweepKind::theorem7: return check_theorem7(g, t);
    case SweepKind::theorem5: return check_theorem5(g, t);
    case SweepKind::corollary: return check_corollary(g, t);
    case SweepKind::kriesell: return check_kriesell(g, t);
    case SweepKind::construction: return check_construction(g, t);
  }
}

template <typename Enumerator>
Tally run_range(SweepKind kind, int n, std::uint64_t first, std::uint64_t last, bool collect_rows) {
  Tally t;
  t.collect_rows = collect_rows;
  Enumerator source(n, first, last);
  while (auto g = source.next()) check_one(kind, *g, t);
  return t;
}

template <typename Enumerator>
void run_order(SweepKind kind, int n, std::uint64_t total, int jobs, Tally& into) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total));
  std::vector<Tally> partial(workers);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  if (workers == 1) {
    partial[0] = run_range<Enumerator>(kind, n, 0, total, into.collect_rows);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        partial[w] = run_range<Enumerator>(kind, n, w * chunk, std::min(total, (w + 1) * chunk), into.collect_rows);
      });
    }
    for (auto& th : threads) th.join();
  }
  for (auto& p : partial) into.merge(std::move(p));
}

}  // namespace

const char* to_string(SweepKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<SweepKind> parse_sweep_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (name == n) return k;
  }
  return std::nullopt;
}

std::vector<SweepKind> all_sweep_kinds() {
  std::vector<SweepKind> out;
  for (const auto& [k, name] : kNames) out.push_back(k);
  return out;
}

int default_n_max(SweepKind kind) {
  switch (kind) {
    case SweepKind::main:
    case SweepKind::theorem7:
    case SweepKind::corollary:
    case SweepKind::kriesell:
    case SweepKind::construction:
      return 6;
    case SweepKind::lemma14:
    case SweepKind::theorem5:
      return 7;
  }
  return 6;
}

int max_n(SweepKind kind, bool allow_large) {
  if (kind == SweepKind::construction) return kMaxEnumeratedTreeOrder;
  if (kind == SweepKind::theorem7) return 6;
  return allow_large ? kMaxEnumeratedGraphOrder : kMaxEnumeratedGraphOrder - 1;
}

SweepReport run_sweep(SweepKind kind, const SweepOptions& options) {
  const int n_max = options.n_max > 0 ? options.n_max : default_n_max(kind);
  const int limit = max_n(kind, options.allow_large);
  if (n_max > limit) {
    throw std::out_of_range(std::string("sweep ") + to_string(kind) + " supports n <= " + std::to_string(limit) +
                            (kind != SweepKind::construction && kind != SweepKind::theorem7 && !options.allow_large
                                 ? " (8 with the large-sweep flag)"
                                 : ""));
  }

  const auto start = std::chrono::steady_clock::now();
  Tally tally;
  tally.collect_rows = options.collect_rows;
  for (int n = 1; n <= n_max; ++n) {
    if (kind == SweepKind::construction) {
      run_order<LabeledTreeEnumerator>(kind, n, labeled_tree_count(n), options.jobs, tally);
    } else {
      run_order<LabeledGraphEnumerator>(kind, n, labeled_graph_count(n), options.jobs, tally);
    }
  }
  const auto stop = std::chrono::steady_clock::now();

  SweepReport report;
  report.sweep = to_string(kind);
  report.n_min = 1;
  report.n_max = n_max;
  report.counts.insert(tally.counts.begin(), tally.counts.end());
  report.mismatches = std::move(tally.mismatches);
  report.rows = std::move(tally.rows);
  std::sort(report.mismatches.begin(), report.mismatches.end());
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const MinimallyToughRow& a, const MinimallyToughRow& b) { return a.graph6 < b.graph6; });
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return report;
}

SweepReport sweep_main_theorem(int n_max, int jobs) { return run_sweep(SweepKind::main, {n_max, jobs}); }
SweepReport sweep_lemma14(int n_max, int jobs) { return run_sweep(SweepKind::lemma14, {n_max, jobs}); }
SweepReport sweep_theorem7(int n_max, int jobs) { return run_sweep(SweepKind::theorem7, {n_max, jobs}); }
SweepReport sweep_theorem5(int n_max, int jobs) { return run_sweep(SweepKind::theorem5, {n_max, jobs}); }
SweepReport sweep_corollary(int n_max, int jobs) { return run_sweep(SweepKind::corollary, {n_max, jobs}); }
SweepReport sweep_kriesell(int n_max, int jobs) { return run_sweep(SweepKind::kriesell, {n_max, jobs}); }
SweepReport sweep_construction(int n_max, int jobs) { return run_sweep(SweepKind::construction, {n_max, jobs}); }

std::vector<SweepMismatch> recheck(SweepKind kind, std::string_view graph6) {
  Tally t;
  t.collect_rows = false;
  check_one(kind, parse_graph6(graph6), t);
  std::sort(t.mismatches.begin(), t.mismatches.end());
  return t.mismatches;
}

std::string rows_to_csv(const std::vector<MinimallyToughRow>& rows) {
  std::ostringstream out;
  out << "graph6,tau_num,tau_den,mu,is_tt,case_tag\n";
  for (const auto& r : rows) {
    // graph6 bytes are 63..126, so no field ever needs quoting.
    out << r.graph6 << ',' << r.tau.numerator() << ',' << r.tau.denominator() << ',' << r.mu << ','
        << (r.is_tt ? "true" : "false") << ',' << r.case_tag << '\n';
  }
  return out.str();
}

}  // namespace tough
