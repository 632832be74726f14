#pragma once

// nlohmann::json bindings for the library's result types. Rationals are
// written as {"num": p, "den": q} or the string "inf"; vertex sets as sorted
// id arrays; edges as [u, v]; graphs as {"n": n, "edges": [[u, v], ...]}.

#include <nlohmann/json.hpp>

#include "tough/chordal.hpp"
#include "tough/graph.hpp"
#include "tough/harness.hpp"
#include "tough/interval.hpp"
#include "tough/rational.hpp"
#include "tough/toughness.hpp"
#include "tough/ttgraph.hpp"

namespace tough {

void to_json(nlohmann::json& j, const ExtendedRational& r);
void from_json(const nlohmann::json& j, ExtendedRational& r);

void to_json(nlohmann::json& j, const VertexSet& s);
void from_json(const nlohmann::json& j, VertexSet& s);

void to_json(nlohmann::json& j, const Edge& e);
void from_json(const nlohmann::json& j, Edge& e);

void to_json(nlohmann::json& j, const Graph& g);
void from_json(const nlohmann::json& j, Graph& g);

void to_json(nlohmann::json& j, const ToughnessCertificate& c);
void from_json(const nlohmann::json& j, ToughnessCertificate& c);

void to_json(nlohmann::json& j, const MinimalityResult& r);
void from_json(const nlohmann::json& j, MinimalityResult& r);

void to_json(nlohmann::json& j, const WitnessReport& w);
void from_json(const nlohmann::json& j, WitnessReport& w);

void to_json(nlohmann::json& j, const CliqueTree& t);
void from_json(const nlohmann::json& j, CliqueTree& t);

void to_json(nlohmann::json& j, const TTDecomposition& d);
void from_json(const nlohmann::json& j, TTDecomposition& d);

void to_json(nlohmann::json& j, const MainTheoremReport& r);

void to_json(nlohmann::json& j, const AsteroidalTriple& at);
void from_json(const nlohmann::json& j, AsteroidalTriple& at);

void to_json(nlohmann::json& j, const CorollaryReport& r);

/// {sweep, n, n_min, counts{...}, mismatches[{graph6, reason}], elapsed_ms}.
/// Rows are exported separately as CSV and are not part of the JSON form.
void to_json(nlohmann::json& j, const SweepReport& r);
void from_json(const nlohmann::json& j, SweepReport& r);

}  // namespace tough
