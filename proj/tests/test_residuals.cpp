#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "spinup/errors.hpp"
#include "spinup/knot_diagrams.hpp"
#include "spinup/param_map.hpp"
#include "spinup/residuals.hpp"
#include "spinup/spinning.hpp"
#include "spinup/symbolic_suite.hpp"

using namespace spinup;
using Catch::Matchers::WithinAbs;

TEST_CASE("jacobian of the unknot at s = 0") {
  const ParamMap m = unknot_param();
  const std::vector<double> p{0.0};
  const auto ev = eval_with_jacobian(m, p);
  CHECK_THAT(ev.image[0], WithinAbs(2.0, 1e-15));
  CHECK_THAT(ev.image[1], WithinAbs(0.0, 1e-15));
  CHECK_THAT(ev.image[2], WithinAbs(1.0, 1e-15));
  CHECK_THAT(ev.jacobian(0, 0), WithinAbs(1.0, 1e-15));
  CHECK_THAT(ev.jacobian(1, 0), WithinAbs(-3.0, 1e-15));
  CHECK_THAT(ev.jacobian(2, 0), WithinAbs(0.0, 1e-15));
}

TEST_CASE("jacobian agrees with central differences") {
  const ParamMap m = z_shift_cobordism();
  const auto names = m.var_names();
  for (const auto& p : sample_points(m, {20, 3})) {
    const auto ev = eval_with_jacobian(m, p);
    for (std::size_t c = 0; c < p.size(); ++c) {
      auto lo = p, hi = p;
      const double h = 1e-6;
      lo[c] -= h;
      hi[c] += h;
      for (std::size_t r = 0; r < m.ambient_dim(); ++r) {
        const double fd = (evaluate(m.coords[r], names, hi) - evaluate(m.coords[r], names, lo)) / (2 * h);
        CHECK_THAT(ev.jacobian(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)), WithinAbs(fd, 1e-6));
      }
    }
  }
}

TEST_CASE("constant map has zero jacobian and rank 0") {
  const ParamMap m = parse_param_map("kind legendrian\nvar s 0 1\ncoord 0 = 2\ncoord 1 = 0\ncoord 2 = 0\n");
  const std::vector<double> p{0.3};
  CHECK(eval_with_jacobian(m, p).jacobian.isZero());
  CHECK(jacobian_rank(m, p) == 0);
  const auto emb = verify_embedding_sampled(m, {50, 0}, 1);
  CHECK(emb.rank_violations.size() == 50);
  CHECK_FALSE(emb.clean());
}

TEST_CASE("the standard unknot is Legendrian") {
  const auto r = contact_pullback_residual(unknot_param(), {10000, 0});
  CHECK(r.sample_count == 10000);
  CHECK(r.max_residual < 1e-12);
  CHECK(r.within(kDefaultResidualTol));
}

TEST_CASE("a round circle is not Legendrian") {
  const ParamMap m =
      parse_param_map("kind legendrian\nvar s 0 2*pi periodic\ncoord 0 = cos(s)\ncoord 1 = sin(s)\ncoord 2 = 0\n");
  const auto r = contact_pullback_residual(m, {1000, 0});
  // alpha = -y dx = sin(s)^2 ds peaks at 1.
  CHECK_THAT(r.max_residual, WithinAbs(1.0, 1e-3));
  CHECK_FALSE(r.within(1e-9));
  REQUIRE(r.argmax.size() == 1);
  CHECK_THAT(std::abs(std::sin(r.argmax[0])), WithinAbs(1.0, 1e-3));
}

TEST_CASE("contact residual refuses cobordisms and empty plans") {
  CHECK_THROWS_AS(contact_pullback_residual(z_shift_cobordism(), {10, 0}), InvalidInput);
  CHECK_THROWS_AS(contact_pullback_residual(unknot_param(), {0, 0}), InvalidInput);
}

TEST_CASE("exactness of the trivial cylinder and the z-shifted cylinder") {
  CHECK(exactness_residual(cylinder_over(unknot_param()), {2000, 0}).max_residual() < 1e-12);
  CHECK(exactness_residual(z_shift_cobordism(), {2000, 0}).max_residual() < 1e-9);
}

TEST_CASE("a wrong primitive is detected") {
  ParamMap m = z_shift_cobordism();
  m.primitive = Expr::constant(0.0);
  const auto r = exactness_residual(m, {2000, 0});
  CHECK(r.max_residual() > 1e-2);
  CHECK(r.lagrangian.max_residual < 1e-9);
  m.primitive.reset();
  CHECK_THROWS_AS(exactness_residual(m, {10, 0}), InvalidInput);
}

TEST_CASE("a doubly covered circle shows sampled collisions") {
  const ParamMap m = parse_param_map(
      "kind legendrian\nvar s 0 2*pi periodic\ncoord 0 = 2 + cos(2*s)\ncoord 1 = sin(2*s)\ncoord 2 = 0\n");
  const auto emb = verify_embedding_sampled(m, {400, 0}, 1);
  CHECK(emb.rank_violations.empty());
  CHECK_FALSE(emb.collisions.empty());
}

TEST_CASE("the unknot passes the sampled embedding check") {
  const auto emb = verify_embedding_sampled(unknot_param(), {800, 0}, 1);
  CHECK(emb.clean());
  CHECK(emb.min_rank_seen == 1);
}
