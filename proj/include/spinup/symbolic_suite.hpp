#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "spinup/errors.hpp"
#include "spinup/knot_diagrams.hpp"
#include "spinup/residuals.hpp"
#include "spinup/spinning.hpp"

namespace spinup {

/// Residual tolerance: SPINUP_TOL if set, else the default.
inline double residual_tolerance() {
  const char* env = std::getenv("SPINUP_TOL");
  if (!env || !*env) return kDefaultResidualTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !std::isfinite(v) || v <= 0.0) {
    throw InvalidInput(std::string("SPINUP_TOL must be a positive number, got '") + env + "'");
  }
  return v;
}

/// Exact Lagrangian R x unknot with the z coordinate shifted by
/// c(u) = 0.3 sin u along the t-direction u; primitive 0.15 e^u (sin u + cos u).
inline ParamMap z_shift_cobordism() {
  const Expr u = Expr::variable("u");
  const Expr s = Expr::variable("s");
  ParamMap m;
  m.kind = MapKind::Cobordism;
  m.vars.push_back({"u", -2.0, 2.0, VarRole::Interval});
  m.vars.push_back({"s", 0.0, 2.0 * std::numbers::pi, VarRole::Periodic});
  m.coords = {u, 2.0 + sin(s), -3.0 * sin(s) * cos(s), pow(cos(s), 3.0) + 0.3 * sin(u)};
  m.primitive = 0.15 * exp(u) * (sin(u) + cos(u));
  m.validate();
  return m;
}

struct SymbolicCheck {
  std::string name;
  /// Which verification produced the number.
  std::string stage;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  std::size_t ambient_dim = 0;
  bool passed = false;
};

struct SymbolicSuiteOptions {
  double tolerance = kDefaultResidualTol;
  double slice_tolerance = 1e-12;
  std::size_t samples = 10000;
  /// Negates y on the unknot, to exercise the failure path.
  bool inject_sign_bug = false;
};

struct SymbolicSuiteReport {
  std::vector<SymbolicCheck> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  std::optional<SymbolicCheck> first_failure() const {
    for (const auto& c : checks) {
      if (!c.passed) return c;
    }
    return std::nullopt;
  }

  /// Throws CertificationFailure naming the first failing stage.
  void require_pass() const {
    if (auto f = first_failure()) {
      throw CertificationFailure(f->stage, f->name + " residual " + std::to_string(f->max_residual) +
                                               " exceeds " + std::to_string(f->tolerance));
    }
  }
};

/// Max coordinate difference between two maps over the same variables.
inline double map_distance(const ParamMap& a, const ParamMap& b, const SamplingPlan& plan) {
  if (a.var_names() != b.var_names() || a.ambient_dim() != b.ambient_dim()) {
    throw InvalidInput("maps differ in variables or ambient dimension");
  }
  const auto names = a.var_names();
  double worst = 0.0;
  for (const auto& p : sample_points(a, plan)) {
    for (std::size_t i = 0; i < a.ambient_dim(); ++i) {
      worst = std::max(worst, std::abs(evaluate(a.coords[i], names, p) - evaluate(b.coords[i], names, p)));
    }
  }
  return worst;
}

/// Residual checks of the spinning construction: contact pullbacks of the
/// unknot and its spins, exactness of spun cobordisms with lifted
/// primitives, the cylinder condition, slices, and sampled embeddedness.
inline SymbolicSuiteReport run_symbolic_suite(const SymbolicSuiteOptions& opt = {}) {
  SymbolicSuiteReport rep;
  const SamplingPlan plan{opt.samples, 0};
  auto add = [&](std::string name, std::string stage, double r, double tol, std::size_t n, std::size_t dim) {
    rep.checks.push_back({std::move(name), std::move(stage), r, tol, n, dim, r < tol});
  };

  ParamMap unknot = unknot_param();
  if (opt.inject_sign_bug) unknot.coords[1] = -1.0 * unknot.coords[1];
  auto contact = [&](const std::string& name, const ParamMap& m) {
    const auto r = contact_pullback_residual(m, plan);
    add(name, "contact_pullback_residual", r.max_residual, opt.tolerance, r.sample_count, m.ambient_dim());
  };
  contact("unknot", unknot);
  for (int m = 1; m <= 3; ++m) contact("unknot spun by S^" + std::to_string(m), spin(unknot, SpinSpec::fresh(m, unknot)));

  auto exact = [&](const std::string& name, const ParamMap& m) {
    const auto r = exactness_residual(m, plan);
    add(name, "exactness_residual", r.max_residual(), opt.tolerance, r.exactness.sample_count, m.ambient_dim());
  };
  const ParamMap cyl = cylinder_over(unknot);
  const ParamMap shift = z_shift_cobordism();
  exact("cylinder over unknot", cyl);
  exact("z-shifted cylinder", shift);
  for (int m = 1; m <= 2; ++m) {
    const ParamMap sc = spin(cyl, SpinSpec::fresh(m, cyl));
    exact("cylinder spun by S^" + std::to_string(m), sc);
    add("cylinder spun by S^" + std::to_string(m), "cylinder_threshold", cylinder_residual(sc, {2000, 0}),
        opt.slice_tolerance, 2000, sc.ambient_dim());
    exact("z-shifted cylinder spun by S^" + std::to_string(m), spin(shift, SpinSpec::fresh(m, shift)));
  }

  for (int m = 1; m <= 2; ++m) {
    const SpinSpec spec = SpinSpec::fresh(m, shift);
    const ParamMap spun = spin(shift, spec);
    double worst = 0.0;
    for (double t0 : {-1.5, 0.25, 1.0}) {
      const ParamMap lhs = slice_at(spun, t0);
      const ParamMap rhs = spin(slice_at(shift, t0), spec);
      worst = std::max(worst, map_distance(lhs, rhs, {2000, 0}));
    }
    add("slice of z-shifted cylinder spun by S^" + std::to_string(m), "slice_property", worst, opt.slice_tolerance,
        6000, spun.ambient_dim() - 1);
  }

  const ParamMap spun1 = spin(unknot, SpinSpec::fresh(1, unknot));
  const auto emb = verify_embedding_sampled(spun1, {1500, 0}, spun1.intrinsic_dim());
  add("unknot spun by S^1 (sampled heuristic, not a proof)", "embedding",
      static_cast<double>(emb.rank_violations.size() + emb.collisions.size()), 0.5, emb.sample_count,
      spun1.ambient_dim());
  return rep;
}

inline nlohmann::ordered_json symbolic_report_to_json(const SymbolicSuiteReport& r) {
  nlohmann::ordered_json j;
  j["passed"] = r.passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"stage", c.stage},
                           {"ambient_dim", c.ambient_dim},
                           {"samples", c.samples},
                           {"max_residual", c.max_residual},
                           {"tolerance", c.tolerance},
                           {"passed", c.passed}});
  }
  return j;
}

}  // namespace spinup
