#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "tough/chordal.hpp"
#include "tough/errors.hpp"
#include "tough/graph_io.hpp"
#include "tough/harness.hpp"
#include "tough/interval.hpp"
#include "tough/json.hpp"
#include "tough/toughness.hpp"
#include "tough/ttgraph.hpp"

namespace tough::cli {

namespace {

using nlohmann::json;

struct InputSpec {
  std::string path = "-";
  std::string format;  // "", "edges" or "graph6"
  bool json = false;
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Graph load_graph(const InputSpec& spec, std::istream& in) {
  const std::string text = read_all(spec.path, in);
  const std::string format = !spec.format.empty() ? spec.format : (ends_with(spec.path, ".g6") ? "graph6" : "edges");
  if (format == "edges") return parse_edge_list(text);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return parse_graph6(line);
  }
  throw ParseError(0, "graph6: no graph in input");
}

void add_input(CLI::App* cmd, InputSpec& spec) {
  cmd->add_option("input", spec.path, "Graph file, or - for stdin")->capture_default_str();
  cmd->add_option("--format", spec.format, "Input format (default: graph6 for .g6 files, else edges)")
      ->check(CLI::IsMember({"edges", "graph6"}));
  cmd->add_flag("--json", spec.json, "Machine-readable output");
}

std::string set_text(VertexSet s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

std::string edge_text(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

int analyze(const Graph& g, bool as_json, std::ostream& out) {
  const ToughnessCertificate c = toughness(g);
  if (as_json) {
    out << json(c).dump() << '\n';
    return kOk;
  }
  out << "toughness = " << c.value;
  if (c.tough_set) {
    out << ", tough set " << set_text(*c.tough_set);
  } else if (c.value.is_zero()) {
    out << " (disconnected, " << c.components_after << " components)";
  } else {
    out << " (complete)";
  }
  out << '\n';
  return kOk;
}

int minimal(const Graph& g, bool as_json, std::ostream& out) {
  const MinimalityResult r = is_minimally_tough(g);
  if (as_json) {
    out << json(r).dump() << '\n';
  } else if (r.minimal) {
    out << "minimally " << r.toughness << "-tough\n";
  } else {
    out << "not minimally tough: toughness " << r.toughness << " becomes " << *r.toughness_after
        << " after deleting edge " << edge_text(*r.offending_edge) << '\n';
  }
  return r.minimal ? kOk : kNegative;
}

int witness(const Graph& g, bool as_json, std::ostream& out) {
  const auto w = find_witness_edge(g);
  if (as_json) {
    out << json{{"witness", w ? json(*w) : json(nullptr)}}.dump() << '\n';
  } else if (w) {
    out << "witness edge " << edge_text(w->edge) << ": " << w->path_count << " internally disjoint paths, "
        << w->checked_cutsets << " separating cutsets checked\n";
  } else {
    out << "no witness edge: the graph is minimally tough\n";
  }
  return w ? kOk : kNegative;
}

int chordal(const Graph& g, bool as_json, std::ostream& out) {
  const auto order = chordal_elimination_order(g);
  if (as_json) {
    out << json{{"chordal", order.has_value()}, {"order", order ? json(order->order) : json(nullptr)}}.dump() << '\n';
  } else if (order) {
    out << "chordal; perfect elimination order:";
    for (Vertex v : order->order) out << ' ' << v;
    out << '\n';
  } else {
    out << "not chordal\n";
  }
  return order ? kOk : kNegative;
}

int clique_tree(const Graph& g, bool as_json, bool dot, std::ostream& out) {
  const CliqueTree tree = build_clique_tree(g);
  if (dot) {
    out << to_dot(tree);
  } else if (as_json) {
    out << json(tree).dump() << '\n';
  } else {
    for (std::size_t i = 0; i < tree.cliques.size(); ++i) out << "K" << i << " = " << set_text(tree.cliques[i]) << '\n';
    for (const auto& e : tree.edges) out << "K" << e.a << " -- K" << e.b << " (weight " << e.weight << ")\n";
  }
  return kOk;
}

int tt_recognize(const Graph& g, bool as_json, std::ostream& out) {
  const TTRecognition r = recognize_tt(g);
  if (as_json) {
    out << json{{"tt", r.accepted()},
                {"reason", to_string(r.reason)},
                {"detail", r.detail},
                {"decomposition", r.decomposition ? json(*r.decomposition) : json(nullptr)}}
               .dump()
        << '\n';
    return r.accepted() ? kOk : kNegative;
  }
  if (!r.accepted()) {
    out << "not a TT-graph: " << to_string(r.reason) << '\n';
    if (r.reason != TTRejection::complete) out << "  " << r.detail << '\n';
    return kNegative;
  }
  const TTDecomposition& d = *r.decomposition;
  out << "TT-graph (case " << to_string(d.case_tag) << "), mu = " << d.mu << ", toughness = 1/" << d.mu << '\n';
  out << "source tree: " << emit_graph6(d.tree) << " (" << d.tree.order() << " vertices)\n";
  for (const auto& t : d.triangle_map) {
    out << "  center " << t.center << " -> triangle {" << t.triangle[0] << ',' << t.triangle[1] << ',' << t.triangle[2]
        << "}\n";
  }
  return kOk;
}

int tt_build(const Graph& tree, const std::vector<int>& remove, bool as_json, bool graph6, std::ostream& out) {
  VertexSet removed;
  for (int v : remove) {
    if (v < 0 || v >= tree.order()) throw TTBuildError(TTBuildFailure::vertex_out_of_range, "vertex " + std::to_string(v) + " is not in the tree");
    removed.insert(v);
  }
  const TTConstruction built = tt_from_tree(tree, removed);
  if (as_json) {
    out << json{{"graph", built.graph}, {"graph6", emit_graph6(built.graph)}, {"decomposition", built.decomposition}}.dump()
        << '\n';
  } else if (graph6) {
    out << emit_graph6(built.graph) << '\n';
  } else {
    out << emit_edge_list(built.graph);
  }
  return kOk;
}

int interval(const Graph& g, bool as_json, std::ostream& out) {
  const bool is_ch = is_chordal(g);
  const auto at = find_asteroidal_triple(g);
  const bool result = is_ch && !at;
  if (as_json) {
    out << json{{"interval", result}, {"chordal", is_ch}, {"asteroidal_triple", at ? json(*at) : json(nullptr)}}.dump()
        << '\n';
  } else if (result) {
    out << "interval graph\n";
  } else if (!is_ch) {
    out << "not an interval graph: not chordal\n";
  } else {
    out << "not an interval graph: asteroidal triple {" << at->vertices[0] << ',' << at->vertices[1] << ','
        << at->vertices[2] << "}\n";
  }
  return result ? kOk : kNegative;
}

int caterpillar(const Graph& g, bool as_json, std::ostream& out) {
  const bool result = is_caterpillar(g);
  if (as_json) {
    out << json{{"caterpillar", result}, {"tree", is_tree(g)}}.dump() << '\n';
  } else {
    out << (result ? "caterpillar\n" : "not a caterpillar\n");
  }
  return result ? kOk : kNegative;
}

struct SweepArgs {
  std::string check;
  int n = 0;
  int jobs = 1;
  std::string out_path;
  std::string csv_path;
  bool allow_large = false;
  bool json = false;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  file << content;
  if (!file) throw Error("write to '" + path + "' failed");
}

int sweep(const SweepArgs& a, std::ostream& out) {
  const auto kind = parse_sweep_kind(a.check);
  if (!kind) throw Error("unknown sweep '" + a.check + "'");
  SweepOptions options;
  options.n_max = a.n;
  options.jobs = std::max(1, a.jobs);
  options.allow_large = a.allow_large;
  options.collect_rows = !a.csv_path.empty();
  SweepReport report;
  try {
    report = run_sweep(*kind, options);
  } catch (const std::out_of_range& e) {
    throw Error(e.what());
  }
  const json j = report;
  if (!a.out_path.empty()) write_file(a.out_path, j.dump(2) + "\n");
  if (!a.csv_path.empty()) write_file(a.csv_path, rows_to_csv(report.rows));
  if (a.json) {
    out << j.dump() << '\n';
  } else {
    out << "sweep " << report.sweep << " n<=" << report.n_max << ": ";
    bool first = true;
    for (const auto& [key, value] : report.counts) {
      out << (first ? "" : ", ") << key << '=' << value;
      first = false;
    }
    out << "; " << report.mismatches.size() << " mismatches (" << report.elapsed_ms << " ms)\n";
    for (const auto& m : report.mismatches) out << "  " << m.graph6 << ": " << m.reason << '\n';
  }
  return report.passed() ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toughness, minimal toughness and TT-graph tools", "tough"};
  app.require_subcommand(1);

  InputSpec analyze_in, minimal_in, witness_in, chordal_in, tree_in, recognize_in, interval_in, caterpillar_in;
  add_input(app.add_subcommand("analyze", "Exact toughness and a tough set"), analyze_in);
  add_input(app.add_subcommand("minimal", "Minimal toughness by single-edge deletion"), minimal_in);
  add_input(app.add_subcommand("witness", "Search an edge certifying non-minimality"), witness_in);
  add_input(app.add_subcommand("chordal", "Chordality with a perfect elimination order"), chordal_in);

  bool dot = false;
  auto* ct = app.add_subcommand("clique-tree", "Maximum-weight clique tree of a chordal graph");
  add_input(ct, tree_in);
  ct->add_flag("--dot", dot, "Write DOT to stdout");

  auto* tt = app.add_subcommand("tt", "TT-graph recognition and construction");
  tt->require_subcommand(1);
  add_input(tt->add_subcommand("recognize", "Recognize a TT-graph and print its source tree"), recognize_in);
  auto* build = tt->add_subcommand("build", "Build a TT-graph from a tree and a removal set");
  InputSpec build_in;
  std::vector<int> remove;
  bool emit_g6 = false;
  build->add_option("--tree", build_in.path, "Tree file, or - for stdin")->required();
  build->add_option("--remove", remove, "Comma-separated ids of removed degree-3 vertices")->delimiter(',');
  build->add_option("--format", build_in.format, "Tree file format")->check(CLI::IsMember({"edges", "graph6"}));
  build->add_flag("--json", build_in.json, "Machine-readable output");
  build->add_flag("--graph6", emit_g6, "Write the built graph as graph6");

  add_input(app.add_subcommand("interval", "Interval recognition (chordal and asteroidal-triple free)"), interval_in);
  add_input(app.add_subcommand("caterpillar", "Caterpillar test"), caterpillar_in);

  SweepArgs sweep_args;
  auto* sw = app.add_subcommand("sweep", "Exhaustive verification over small labeled graphs or trees");
  std::vector<std::string> kinds;
  for (SweepKind k : all_sweep_kinds()) kinds.emplace_back(to_string(k));
  sw->add_option("--check", sweep_args.check, "Statement to verify")->required()->check(CLI::IsMember(kinds));
  sw->add_option("--n", sweep_args.n, "Largest vertex count (default depends on the check)");
  sw->add_option("--jobs", sweep_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sw->add_option("--out", sweep_args.out_path, "Write the JSON report here");
  sw->add_option("--csv", sweep_args.csv_path, "Write one CSV row per minimally tough graph here");
  sw->add_flag("--allow-n8", sweep_args.allow_large, "Permit n = 8 graph sweeps");
  sw->add_flag("--json", sweep_args.json, "Print the JSON report to stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const auto pick = [&](const char* name) { return app.got_subcommand(name); };
    if (pick("analyze")) return analyze(load_graph(analyze_in, in), analyze_in.json, out);
    if (pick("minimal")) return minimal(load_graph(minimal_in, in), minimal_in.json, out);
    if (pick("witness")) return witness(load_graph(witness_in, in), witness_in.json, out);
    if (pick("chordal")) return chordal(load_graph(chordal_in, in), chordal_in.json, out);
    if (pick("clique-tree")) return clique_tree(load_graph(tree_in, in), tree_in.json, dot, out);
    if (pick("tt")) {
      if (tt->got_subcommand("recognize")) return tt_recognize(load_graph(recognize_in, in), recognize_in.json, out);
      return tt_build(load_graph(build_in, in), remove, build_in.json, emit_g6, out);
    }
    if (pick("interval")) return interval(load_graph(interval_in, in), interval_in.json, out);
    if (pick("caterpillar")) return caterpillar(load_graph(caterpillar_in, in), caterpillar_in.json, out);
    if (pick("sweep")) return sweep(sweep_args, out);
  } catch (const TTBuildError& e) {
    err << "error: " << to_string(e.failure()) << ": " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace tough::cli
