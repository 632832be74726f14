#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tough/graph.hpp"
#include "tough/rational.hpp"
#include "tough/ttgraph.hpp"

namespace tough {

/// Exhaustive verification runs.
///
///  main          chordal graphs with toughness <= 1/2: minimally tough <=> TT-graph with toughness 1/mu
///  lemma14       every vertex simplicial or cut: toughness = 1/mu
///  theorem7      witness edge exists <=> not minimally tough
///  theorem5      minimally tough chordal: t <= 1/2 => simplicial vertices have degree 1; none with 1/2 < t <= 1
///  corollary     minimally t-tough interval graphs with t <= 1/2 are caterpillars
///  kriesell      every minimally t-tough graph has a vertex of degree ceil(2t)
///  construction  every tree and admissible removal set yields a minimally (1/mu)-tough graph that recognition inverts
enum class SweepKind { main, lemma14, theorem7, theorem5, corollary, kriesell, construction };

const char* to_string(SweepKind kind);
std::optional<SweepKind> parse_sweep_kind(std::string_view name);
std::vector<SweepKind> all_sweep_kinds();

int default_n_max(SweepKind kind);
/// Largest admissible n_max; graph sweeps reach 8 only with allow_large.
int max_n(SweepKind kind, bool allow_large);

struct SweepMismatch {
  std::string graph6;
  std::string reason;

  friend auto operator<=>(const SweepMismatch&, const SweepMismatch&) = default;
};

/// One minimally tough graph found during a sweep (CSV export).
struct MinimallyToughRow {
  std::string graph6;
  ExtendedRational tau;
  int mu = 0;
  bool is_tt = false;
  std::string case_tag;  ///< empty when not a TT-graph

  friend bool operator==(const MinimallyToughRow&, const MinimallyToughRow&) = default;
};

struct SweepReport {
  std::string sweep;
  int n_min = 1;
  int n_max = 0;
  std::map<std::string, std::uint64_t> counts;
  std::vector<SweepMismatch> mismatches;  ///< sorted by graph6
  std::vector<MinimallyToughRow> rows;    ///< sorted by graph6
  std::int64_t elapsed_ms = 0;

  bool passed() const noexcept { return mismatches.empty(); }
};

struct SweepOptions {
  int n_max = 0;  ///< 0 selects default_n_max
  int jobs = 1;
  bool allow_large = false;
  bool collect_rows = true;
};

/// Throws std::out_of_range when n_max exceeds max_n(kind, allow_large).
/// Results are identical for every job count.
SweepReport run_sweep(SweepKind kind, const SweepOptions& options);

SweepReport sweep_main_theorem(int n_max, int jobs = 1);
SweepReport sweep_lemma14(int n_max, int jobs = 1);
SweepReport sweep_theorem7(int n_max, int jobs = 1);
SweepReport sweep_theorem5(int n_max, int jobs = 1);
SweepReport sweep_corollary(int n_max, int jobs = 1);
SweepReport sweep_kriesell(int n_max, int jobs = 1);
SweepReport sweep_construction(int n_max, int jobs = 1);

/// Re-runs a sweep's check on the single graph encoded by `graph6` (a tree for
/// the construction sweep) and returns the mismatches it produces.
std::vector<SweepMismatch> recheck(SweepKind kind, std::string_view graph6);

/// Header plus one line per row: graph6,tau_num,tau_den,mu,is_tt,case_tag.
std::string rows_to_csv(const std::vector<MinimallyToughRow>& rows);

}  // namespace tough
