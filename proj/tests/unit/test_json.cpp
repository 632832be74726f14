#include <doctest.h>

#include "fixtures.hpp"
#include "tough/json.hpp"

using namespace tough;
using nlohmann::json;

template <typename T>
T round_trip(const T& value) {
  return json::parse(json(value).dump()).get<T>();
}

TEST_CASE("rationals") {
  CHECK(json(ExtendedRational(1, 2)) == json{{"num", 1}, {"den", 2}});
  CHECK(json(ExtendedRational::infinity()) == "inf");
  CHECK(round_trip(ExtendedRational(3, 7)) == ExtendedRational(3, 7));
  CHECK(round_trip(ExtendedRational::infinity()).is_infinite());
}

TEST_CASE("graphs and certificates") {
  CHECK(round_trip(fixtures::net()) == fixtures::net());
  CHECK(json(fixtures::path(3)) == json::parse(R"({"n":3,"edges":[[0,1],[1,2]]})"));

  const auto cert = toughness(fixtures::net());
  const auto back = round_trip(cert);
  CHECK(back.value == cert.value);
  CHECK(back.tough_set == cert.tough_set);
  CHECK(back.components_after == cert.components_after);

  const auto min = is_minimally_tough(fixtures::diamond_with_pendants());
  const auto min_back = round_trip(min);
  CHECK(min_back.minimal == min.minimal);
  CHECK(min_back.offending_edge == min.offending_edge);
  CHECK(min_back.toughness_after == min.toughness_after);

  const auto w = *find_witness_edge(fixtures::diamond_with_pendants());
  const auto w_back = round_trip(w);
  CHECK(w_back.edge == w.edge);
  CHECK(w_back.path_count == w.path_count);
  CHECK(w_back.checked_cutsets == w.checked_cutsets);
}

TEST_CASE("clique trees, decompositions and triples") {
  const CliqueTree t = build_clique_tree(fixtures::diamond_with_pendants());
  const CliqueTree t_back = round_trip(t);
  CHECK(t_back.cliques == t.cliques);
  CHECK(t_back.edges == t.edges);

  const auto d = *recognize_tt(fixtures::net()).decomposition;
  CHECK(round_trip(d) == d);

  const auto at = *find_asteroidal_triple(fixtures::spider222());
  const auto at_back = round_trip(at);
  CHECK(at_back.vertices == at.vertices);
  CHECK(at_back.witness_paths == at.witness_paths);
}

TEST_CASE("sweep reports follow the published schema") {
  const SweepReport r = sweep_main_theorem(4);
  const json j = r;
  for (const char* key : {"sweep", "n", "counts", "mismatches", "elapsed_ms"}) CHECK(j.contains(key));
  CHECK(j["n"] == 4);
  const SweepReport back = j.get<SweepReport>();
  CHECK(back.sweep == r.sweep);
  CHECK(back.counts == r.counts);
  CHECK(back.mismatches == r.mismatches);
  CHECK(back.n_max == r.n_max);
}

TEST_CASE("reports without a reader are still serializable") {
  const json main = classify_main_theorem(fixtures::net());
  CHECK(main["left"] == true);
  CHECK(main["right"] == true);
  const json cor = corollary_check(fixtures::path(4));
  CHECK(cor["consistent"] == true);
}
