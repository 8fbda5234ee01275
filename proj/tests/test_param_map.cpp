#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>

#include "spinup/errors.hpp"
#include "spinup/param_map.hpp"
#include "spinup/sampling.hpp"

using namespace spinup;
using Catch::Matchers::WithinAbs;

namespace {

const char* kUnknot = R"(# comment
kind legendrian
var s 0 2*pi periodic
coord 0 = 2 + sin(s)
coord 1 = -3 * sin(s) * cos(s)
coord 2 = cos(s)^3
)";

}  // namespace

TEST_CASE("map files parse and format round-trip") {
  const ParamMap m = parse_param_map(std::string(kUnknot));
  CHECK(m.kind == MapKind::Legendrian);
  CHECK(m.intrinsic_dim() == 1);
  CHECK(m.ambient_dim() == 3);
  CHECK(m.pair_count() == 1);
  CHECK(m.vars[0].periodic());
  CHECK_THAT(m.vars[0].hi, WithinAbs(2.0 * std::numbers::pi, 1e-15));

  const ParamMap again = parse_param_map(format_param_map(m));
  REQUIRE(again.coords.size() == m.coords.size());
  for (std::size_t i = 0; i < m.coords.size(); ++i) CHECK(again.coords[i].structurally_equal(m.coords[i]));
  CHECK(again.vars[0].role == m.vars[0].role);
}

TEST_CASE("the shipped cobordism file has t, primitive and no threshold") {
  const ParamMap m = load_param_map(std::string(SPINUP_DATA_DIR) + "/z_shift_cylinder.map");
  CHECK(m.kind == MapKind::Cobordism);
  CHECK(m.t_variable() == "u");
  CHECK(m.primitive.has_value());
  CHECK_FALSE(m.threshold.has_value());
  CHECK(m.offset() == 1);
  CHECK(m.z_index() == 3);
}

TEST_CASE("map validation rejects malformed maps") {
  auto bad = [](const std::string& text) { return parse_param_map(text); };
  CHECK_THROWS_AS(bad("var s 0 1\ncoord 0 = s\ncoord 1 = s\ncoord 2 = s\n"), InvalidInput);  // no kind
  CHECK_THROWS_AS(bad("kind legendrian\nvar s 0 1\ncoord 0 = s\ncoord 1 = s\n"), InvalidInput);
  CHECK_THROWS_AS(bad("kind legendrian\nvar s 1 0\ncoord 0 = s\ncoord 1 = s\ncoord 2 = s\n"), InvalidInput);
  CHECK_THROWS_AS(bad("kind legendrian\nvar s 0 1\ncoord 0 = q\ncoord 1 = s\ncoord 2 = s\n"), InvalidInput);
  CHECK_THROWS_AS(bad("kind legendrian\nvar s 0 1\nvar t 0 1\ncoord 0 = s\ncoord 1 = s\ncoord 2 = s\n"),
                  InvalidInput);
  CHECK_THROWS_AS(bad("kind cobordism\nvar t 0 1\ncoord 0 = t\ncoord 1 = t\ncoord 2 = t\n"), InvalidInput);
  CHECK_THROWS_AS(bad("kind legendrian\nvar s 0 1\nvar s 0 2\ncoord 0 = s\ncoord 1 = s\ncoord 2 = s\n"
                      "coord 3 = s\ncoord 4 = s\n"),
                  InvalidInput);
}

TEST_CASE("domain check") {
  const ParamMap m = parse_param_map("kind legendrian\nvar a 0 1\ncoord 0 = a\ncoord 1 = 0\ncoord 2 = 0\n");
  const std::vector<double> inside{0.5}, outside{1.5}, wrong_len{0.1, 0.2};
  CHECK_NOTHROW(m.check_domain(inside));
  CHECK_THROWS_AS(m.check_domain(outside), InvalidInput);
  CHECK_THROWS_AS(m.check_domain(wrong_len), InvalidInput);
}

TEST_CASE("radical inverse matches hand-computed values") {
  CHECK(detail::radical_inverse(1, 2) == 0.5);
  CHECK(detail::radical_inverse(2, 2) == 0.25);
  CHECK(detail::radical_inverse(3, 2) == 0.75);
  CHECK_THAT(detail::radical_inverse(1, 3), WithinAbs(1.0 / 3.0, 1e-15));
  CHECK_THAT(detail::radical_inverse(4, 3), WithinAbs(1.0 / 3.0 + 1.0 / 9.0, 1e-15));
  CHECK(detail::radical_inverse(0, 5) == 0.0);
}

TEST_CASE("samples lie in the declared domain and are deterministic") {
  const ParamMap m = parse_param_map(
      "kind cobordism\nvar t -2 2\nvar s 0 2*pi periodic\ncoord 0 = t\ncoord 1 = 2 + sin(s)\n"
      "coord 2 = cos(s)\ncoord 3 = 0\n");
  const auto a = sample_points(m, {500, 0});
  const auto b = sample_points(m, {500, 0});
  CHECK(a == b);
  REQUIRE(a.size() == 500);
  for (const auto& p : a) {
    CHECK(p[0] >= -2.0);
    CHECK(p[0] < 2.0);
    CHECK(p[1] >= 0.0);
    CHECK(p[1] < 2.0 * std::numbers::pi);
  }
  const auto shifted = sample_points(m, {1, 10});
  CHECK(shifted[0] == a[10]);
}
