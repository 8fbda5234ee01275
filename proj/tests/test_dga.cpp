#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "spinup/dga.hpp"
#include "spinup/disks.hpp"
#include "spinup/errors.hpp"
#include "spinup/knot_diagrams.hpp"

using namespace spinup;

namespace {

std::set<std::vector<std::string>> named_terms(const FreeDGA& dga, const std::string& gen) {
  std::set<std::vector<std::string>> out;
  for (const auto& w : dga.differential(static_cast<std::size_t>(dga.index_of(gen)))) {
    std::vector<std::string> names;
    for (int x : w) names.push_back(dga.generator(static_cast<std::size_t>(x)).name);
    out.insert(names);
  }
  return out;
}

}  // namespace

TEST_CASE("d^2 failure reports the surviving word") {
  FreeDGA dga({{"a", 2}, {"b", 1}});
  dga.toggle_term(0, {1});
  dga.toggle_term(1, {});
  CHECK_FALSE(check_grading_drop(dga).has_value());
  const auto r = check_d_squared(dga);
  CHECK_FALSE(r.ok);
  CHECK(r.generator == 0);
  CHECK(r.witness.empty());
  CHECK_THROWS_AS(validate_dga(dga), ConsistencyError);
}

TEST_CASE("grading violations are found") {
  FreeDGA dga({{"a", 1}, {"b", 1}});
  dga.toggle_term(0, {1});
  const auto v = check_grading_drop(dga);
  REQUIRE(v.has_value());
  CHECK(v->generator == 0);
  CHECK(v->word == Word{1});
}

TEST_CASE("terms cancel in pairs and the Leibniz rule has no signs") {
  FreeDGA dga({{"a", 1}, {"b", 0}});
  dga.toggle_term(0, {1});
  dga.toggle_term(0, {1});
  CHECK(dga.differential(0).empty());
  dga.toggle_term(0, {});
  CHECK(apply_differential(dga, {0, 0}).empty());
  CHECK(apply_differential(dga, {1, 0}) == std::set<Word>{{1}});
  CHECK_THROWS_AS(dga.toggle_term(0, {5}), InvalidInput);
  CHECK_THROWS_AS(FreeDGA({{"a", 0}, {"a", 1}}), InvalidInput);
}

TEST_CASE("DGA JSON round-trips") {
  const FreeDGA dga = build_dga(torus_knot_family(2).resolved);
  const FreeDGA again = dga_from_json(nlohmann::json::parse(dga_to_json(dga).dump()));
  CHECK(dga_to_json(again) == dga_to_json(dga));
  CHECK_THROWS_AS(dga_from_json(nlohmann::json::parse(R"({"generators": 3})")), InvalidInput);
  CHECK_THROWS_AS(dga_from_json(nlohmann::json::parse(
                      R"({"generators": [{"name": "a", "grading": 1}], "differential": {"z": []}})")),
                  InvalidInput);
  const FreeDGA cubic = load_dga(std::string(SPINUP_DATA_DIR) + "/cubic_dga.json");
  CHECK(cubic.size() == 3);
  CHECK(cubic.differential(0).size() == 4);
}

TEST_CASE("the flying saucer has two disks and d = 0") {
  const auto r = resolve_front(flying_saucer_front());
  const auto disks = enumerate_disks(r.diagram);
  CHECK(disks.size() == 2);
  for (const auto& dk : disks) CHECK(dk.negatives.empty());
  const FreeDGA dga = build_dga(r);
  REQUIRE(dga.size() == 1);
  CHECK(dga.generator(0).grading == 1);
  CHECK(dga.differential(0).empty());
}

TEST_CASE("trefoil differential") {
  const FreeDGA dga = build_dga(torus_knot_family(1).resolved);
  REQUIRE(dga.size() == 5);
  using T = std::set<std::vector<std::string>>;
  CHECK(named_terms(dga, "a1") == T{{}, {"b1"}, {"b3"}, {"b3", "b2", "b1"}});
  CHECK(named_terms(dga, "a2") == T{{}, {"b1"}, {"b3"}, {"b1", "b2", "b3"}});
  for (const char* b : {"b1", "b2", "b3"}) CHECK(named_terms(dga, b).empty());
  CHECK(dga.generator(static_cast<std::size_t>(dga.index_of("a1"))).grading == 1);
  CHECK(dga.generator(static_cast<std::size_t>(dga.index_of("b2"))).grading == 0);
}

TEST_CASE("capping-path gradings agree with the Maslov potential") {
  for (int k = 1; k <= 4; ++k) {
    const auto r = torus_knot_family(k).resolved;
    CHECK(chord_gradings(r.diagram) == r.gradings);
  }
  const auto st = resolve_front(stabilized_unknot_front());
  auto g = chord_gradings(st.diagram);
  for (auto& x : g) x = ((x % 2) + 2) % 2;
  auto h = st.gradings;
  for (auto& x : h) x = ((x % 2) + 2) % 2;
  CHECK(g == h);
}

TEST_CASE("orientation reversal leaves the DGA unchanged") {
  const auto d = torus_knot_family(1).resolved.diagram;
  CHECK(dga_to_json(build_dga(d.reversed())) == dga_to_json(build_dga(d)));
}

TEST_CASE("the mirror reverses every word") {
  const auto d = torus_knot_family(2).resolved.diagram;
  const FreeDGA a = build_dga(d);
  const FreeDGA b = build_dga(d.mirrored());
  REQUIRE(a.size() == b.size());
  for (const auto& g : a.generators()) {
    std::set<std::vector<std::string>> rev;
    for (auto w : named_terms(a, g.name)) {
      std::reverse(w.begin(), w.end());
      rev.insert(w);
    }
    CHECK(named_terms(b, g.name) == rev);
  }
}

TEST_CASE("raising the face multiplicity cap finds no new disks here") {
  for (int k = 1; k <= 2; ++k) {
    const auto r = torus_knot_family(k).resolved;
    CHECK(dga_to_json(build_dga(r, {2, 20'000'000})) == dga_to_json(build_dga(r)));
  }
}

TEST_CASE("disk search respects its budget") {
  const auto r = torus_knot_family(2).resolved;
  CHECK_THROWS_AS(build_dga(r, {1, 5}), BudgetExceeded);
  CHECK_THROWS_AS(build_dga(r, {0, 100}), InvalidInput);
}

TEST_CASE("knot DGAs satisfy the axioms through T_11") {
  for (int k = 1; k <= 5; ++k) {
    const FreeDGA dga = build_dga(torus_knot_family(k).resolved);
    CHECK_NOTHROW(validate_dga(dga));
  }
}
