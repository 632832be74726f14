#include "tough/json.hpp"

namespace tough {

using nlohmann::json;

void to_json(json& j, const ExtendedRational& r) {
  if (r.is_infinite()) {
    j = "inf";
  } else {
    j = json{{"num", r.numerator()}, {"den", r.denominator()}};
  }
}

void from_json(const json& j, ExtendedRational& r) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw json::other_error::create(501, "expected \"inf\" or {num, den}", &j);
    r = ExtendedRational::infinity();
    return;
  }
  r = ExtendedRational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

void to_json(json& j, const VertexSet& s) { j = s.members(); }

void from_json(const json& j, VertexSet& s) {
  s = VertexSet();
  for (const auto& v : j) {
    const int id = v.get<int>();
    if (id < 0 || id >= kMaxVertices) throw json::other_error::create(501, "vertex id out of range", &j);
    s.insert(id);
  }
}

void to_json(json& j, const Edge& e) { j = json::array({e.u, e.v}); }

void from_json(const json& j, Edge& e) { e = Edge(j.at(0).get<int>(), j.at(1).get<int>()); }

void to_json(json& j, const Graph& g) { j = json{{"n", g.order()}, {"edges", g.edges()}}; }

void from_json(const json& j, Graph& g) {
  g = Graph(j.at("n").get<int>(), j.at("edges").get<std::vector<Edge>>());
}

void to_json(json& j, const ToughnessCertificate& c) {
  j = json{{"toughness", c.value}, {"components_after", c.components_after}};
  j["tough_set"] = c.tough_set ? json(*c.tough_set) : json(nullptr);
}

void from_json(const json& j, ToughnessCertificate& c) {
  c.value = j.at("toughness").get<ExtendedRational>();
  c.components_after = j.at("components_after").get<int>();
  c.tough_set.reset();
  if (!j.at("tough_set").is_null()) c.tough_set = j.at("tough_set").get<VertexSet>();
}

void to_json(json& j, const MinimalityResult& r) {
  j = json{{"minimal", r.minimal}, {"toughness", r.toughness}};
  j["offending_edge"] = r.offending_edge ? json(*r.offending_edge) : json(nullptr);
  j["toughness_after"] = r.toughness_after ? json(*r.toughness_after) : json(nullptr);
}

void from_json(const json& j, MinimalityResult& r) {
  r.minimal = j.at("minimal").get<bool>();
  r.toughness = j.at("toughness").get<ExtendedRational>();
  r.offending_edge.reset();
  r.toughness_after.reset();
  if (!j.at("offending_edge").is_null()) r.offending_edge = j.at("offending_edge").get<Edge>();
  if (!j.at("toughness_after").is_null()) r.toughness_after = j.at("toughness_after").get<ExtendedRational>();
}

void to_json(json& j, const WitnessReport& w) {
  j = json{{"edge", w.edge}, {"path_count", w.path_count}, {"checked_cutsets", w.checked_cutsets}};
  j["failing_cutset"] = w.failing_cutset ? json(*w.failing_cutset) : json(nullptr);
}

void from_json(const json& j, WitnessReport& w) {
  w.edge = j.at("edge").get<Edge>();
  w.path_count = j.at("path_count").get<int>();
  w.checked_cutsets = j.at("checked_cutsets").get<std::uint64_t>();
  w.failing_cutset.reset();
  if (!j.at("failing_cutset").is_null()) w.failing_cutset = j.at("failing_cutset").get<VertexSet>();
}

void to_json(json& j, const CliqueTree& t) {
  j = json{{"cliques", t.cliques}, {"edges", json::array()}};
  for (const auto& e : t.edges) j["edges"].push_back(json{{"a", e.a}, {"b", e.b}, {"weight", e.weight}});
}

void from_json(const json& j, CliqueTree& t) {
  t.cliques = j.at("cliques").get<std::vector<VertexSet>>();
  t.edges.clear();
  for (const auto& e : j.at("edges")) {
    t.edges.push_back({e.at("a").get<int>(), e.at("b").get<int>(), e.at("weight").get<int>()});
  }
}

void to_json(json& j, const TTDecomposition& d) {
  j = json{{"tree", d.tree},
           {"removed", d.removed},
           {"triangle_map", json::array()},
           {"case_tag", to_string(d.case_tag)},
           {"mu", d.mu},
           {"correspondence", d.correspondence}};
  for (const auto& t : d.triangle_map) j["triangle_map"].push_back(json{{"center", t.center}, {"triangle", t.triangle}});
}

void from_json(const json& j, TTDecomposition& d) {
  d.tree = j.at("tree").get<Graph>();
  d.removed = j.at("removed").get<VertexSet>();
  d.triangle_map.clear();
  for (const auto& t : j.at("triangle_map")) {
    d.triangle_map.push_back({t.at("center").get<Vertex>(), t.at("triangle").get<std::array<Vertex, 3>>()});
  }
  const auto tag = parse_tt_case(j.at("case_tag").get<std::string>());
  if (!tag) throw json::other_error::create(501, "unknown case_tag", &j);
  d.case_tag = *tag;
  d.mu = j.at("mu").get<int>();
  d.correspondence = j.at("correspondence").get<std::vector<Vertex>>();
}

void to_json(json& j, const MainTheoremReport& r) {
  j = json{{"toughness", r.toughness},
           {"minimally_tough", r.minimally_tough},
           {"left", r.left},
           {"mu", r.mu},
           {"tt_rejection", to_string(r.tt_rejection)},
           {"right", r.right},
           {"agree", r.agree()}};
  j["offending_edge"] = r.offending_edge ? json(*r.offending_edge) : json(nullptr);
  j["case_tag"] = r.case_tag ? json(to_string(*r.case_tag)) : json(nullptr);
}

void to_json(json& j, const AsteroidalTriple& at) {
  j = json{{"vertices", at.vertices}, {"witness_paths", at.witness_paths}};
}

void from_json(const json& j, AsteroidalTriple& at) {
  at.vertices = j.at("vertices").get<std::array<Vertex, 3>>();
  at.witness_paths = j.at("witness_paths").get<std::array<std::vector<Vertex>, 3>>();
}

void to_json(json& j, const CorollaryReport& r) {
  j = json{{"interval", r.interval},
           {"minimally_tough", r.minimally_tough},
           {"caterpillar", r.caterpillar},
           {"applicable", r.applicable},
           {"consistent", r.consistent}};
  j["toughness"] = r.toughness ? json(*r.toughness) : json(nullptr);
}

void to_json(json& j, const SweepReport& r) {
  j = json{{"sweep", r.sweep}, {"n", r.n_max}, {"n_min", r.n_min}, {"counts", r.counts},
           {"mismatches", json::array()}, {"elapsed_ms", r.elapsed_ms}};
  for (const auto& m : r.mismatches) j["mismatches"].push_back(json{{"graph6", m.graph6}, {"reason", m.reason}});
}

void from_json(const json& j, SweepReport& r) {
  r.sweep = j.at("sweep").get<std::string>();
  r.n_max = j.at("n").get<int>();
  r.n_min = j.value("n_min", 1);
  r.counts = j.at("counts").get<std::map<std::string, std::uint64_t>>();
  r.mismatches.clear();
  for (const auto& m : j.at("mismatches")) {
    r.mismatches.push_back({m.at("graph6").get<std::string>(), m.at("reason").get<std::string>()});
  }
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  r.rows.clear();
}

}  // namespace tough
