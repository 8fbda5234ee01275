#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "spinup/errors.hpp"
#include "spinup/expr.hpp"
#include "spinup/param_map.hpp"
#include "spinup/residuals.hpp"
#include "spinup/sampling.hpp"

namespace spinup {

/// Parameters of one front S^m-spinning: the sphere dimension and the names
/// of the new angle variables theta in [0, 2pi) and phi_1..phi_{m-1} in [0, pi].
struct SpinSpec {
  int m = 1;
  std::string theta = "theta";
  std::vector<std::string> phis;

  /// A spec whose variable names do not clash with those of `map`.
  static SpinSpec fresh(int m, const ParamMap& map) {
    if (m < 1) throw InvalidInput("sphere dimension must be >= 1, got " + std::to_string(m));
    auto taken = [&](const std::string& n, const std::vector<std::string>& extra) {
      if (map.find_var(n)) return true;
      for (const auto& e : extra) {
        if (e == n) return true;
      }
      return false;
    };
    auto pick = [&](const std::string& base, const std::vector<std::string>& extra) {
      if (!taken(base, extra)) return base;
      for (int k = 2;; ++k) {
        std::string cand = base + "_" + std::to_string(k);
        if (!taken(cand, extra)) return cand;
      }
    };
    SpinSpec s;
    s.m = m;
    std::vector<std::string> used;
    s.theta = pick("theta", used);
    used.push_back(s.theta);
    for (int j = 1; j < m; ++j) {
      s.phis.push_back(pick("phi" + std::to_string(j), used));
      used.push_back(s.phis.back());
    }
    return s;
  }

  void check_against(const ParamMap& map) const {
    if (m < 1) throw InvalidInput("sphere dimension must be >= 1, got " + std::to_string(m));
    if (phis.size() != static_cast<std::size_t>(m - 1)) {
      throw InvalidInput("S^" + std::to_string(m) + " spinning needs " + std::to_string(m - 1) +
                         " phi names, got " + std::to_string(phis.size()));
    }
    std::vector<std::string> names{theta};
    names.insert(names.end(), phis.begin(), phis.end());
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (map.find_var(names[i])) throw InvalidInput("spin variable '" + names[i] + "' is not fresh");
      for (std::size_t j = 0; j < i; ++j) {
        if (names[i] == names[j]) throw InvalidInput("spin variable '" + names[i] + "' repeated");
      }
    }
  }
};

/// The m+1 spherical monomials multiplying x_1 and y_1, in coordinate order
/// -m+1, ..., 1:
///   sin(theta) sin(phi_1)...sin(phi_{m-1}),
///   cos(theta) sin(phi_1)...sin(phi_{m-1}),
///   cos(phi_1) sin(phi_2)...sin(phi_{m-1}),
///   ...,
///   cos(phi_{m-1}).
/// Their squares sum to 1.
inline std::vector<Expr> spherical_monomials(const SpinSpec& spec) {
  const std::size_t m = static_cast<std::size_t>(spec.m);
  std::vector<Expr> phi;
  for (const auto& n : spec.phis) phi.push_back(Expr::variable(n));
  auto sin_tail = [&](std::size_t from) {  // prod_{j >= from} sin(phi_j), 1-based
    std::vector<Expr> f;
    for (std::size_t j = from; j <= m - 1; ++j) f.push_back(sin(phi[j - 1]));
    return f;
  };
  const Expr theta = Expr::variable(spec.theta);
  std::vector<Expr> out;
  {
    auto f = sin_tail(1);
    f.insert(f.begin(), sin(theta));
    out.push_back(Expr::product(std::move(f)));
  }
  {
    auto f = sin_tail(1);
    f.insert(f.begin(), cos(theta));
    out.push_back(Expr::product(std::move(f)));
  }
  for (std::size_t r = 2; r <= m; ++r) {
    auto f = sin_tail(r);
    f.insert(f.begin(), cos(phi[r - 2]));
    out.push_back(Expr::product(std::move(f)));
  }
  return out;
}

/// Smallest sampled value of the x_1 coordinate.
inline double sampled_x1_min(const ParamMap& map, const SamplingPlan& plan = {2000, 0}) {
  const auto names = map.var_names();
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& p : sample_points(map, plan)) {
    lo = std::min(lo, evaluate(map.coords[map.x_index(0)], names, p));
  }
  return lo;
}

/// Adds `dx` to the x_1 coordinate.
inline ParamMap translate(const ParamMap& map, double dx) {
  ParamMap out = map;
  const std::size_t i = map.x_index(0);
  out.coords[i] = map.coords[i] + dx;
  return out;
}

/// Translates so that the sampled minimum of x_1 becomes 2.
inline ParamMap translate_to_positive(const ParamMap& map, const SamplingPlan& plan = {2000, 0}) {
  return translate(map, 2.0 - sampled_x1_min(map, plan));
}

inline void require_x1_positive(const ParamMap& map, const SamplingPlan& plan = {2000, 0}) {
  const double lo = sampled_x1_min(map, plan);
  if (!(lo > 0.0)) {
    throw InvalidInput("x_1 is not positive on the sampled domain (min " + std::to_string(lo) +
                       "); translate the map in x_1 first");
  }
}

namespace detail {

inline ParamMap spin_coordinates(const ParamMap& map, const SpinSpec& spec) {
  spec.check_against(map);
  const std::size_t off = map.offset();
  const Expr x1 = map.coords[off];
  const Expr y1 = map.coords[off + 1];

  ParamMap out;
  out.kind = map.kind;
  out.vars = map.vars;
  out.vars.push_back({spec.theta, 0.0, 2.0 * std::numbers::pi, VarRole::Periodic});
  for (const auto& n : spec.phis) out.vars.push_back({n, 0.0, std::numbers::pi, VarRole::Polar});

  for (std::size_t i = 0; i < off; ++i) out.coords.push_back(map.coords[i]);
  for (const auto& mono : spherical_monomials(spec)) {
    out.coords.push_back(x1 * mono);
    out.coords.push_back(y1 * mono);
  }
  for (std::size_t i = off + 2; i < map.coords.size(); ++i) out.coords.push_back(map.coords[i]);
  out.threshold = map.threshold;
  return out;
}

}  // namespace detail

/// Front S^m-spinning of a Legendrian parametrization.
inline ParamMap spin_legendrian(const ParamMap& map, const SpinSpec& spec) {
  if (map.kind != MapKind::Legendrian) throw InvalidInput("spin_legendrian expects a Legendrian map");
  map.validate();
  require_x1_positive(map);
  ParamMap out = detail::spin_coordinates(map, spec);
  out.validate();
  return out;
}

/// Primitive of e^t alpha on the spun cobordism: the input primitive,
/// constant along the sphere factor.
inline Expr lift_primitive(const ParamMap& map, const SpinSpec& spec) {
  if (!map.primitive) throw InvalidInput("cobordism map carries no primitive to lift");
  spec.check_against(map);
  return *map.primitive;
}

/// Front S^m-spinning of a Lagrangian cobordism; t passes through unchanged.
/// A primitive, when present, is lifted along.
inline ParamMap spin_cobordism(const ParamMap& map, const SpinSpec& spec) {
  if (map.kind != MapKind::Cobordism) throw InvalidInput("spin_cobordism expects a cobordism map");
  map.validate();
  require_x1_positive(map);
  ParamMap out = detail::spin_coordinates(map, spec);
  if (map.primitive) out.primitive = lift_primitive(map, spec);
  out.validate();
  return out;
}

inline ParamMap spin(const ParamMap& map, const SpinSpec& spec) {
  return map.kind == MapKind::Legendrian ? spin_legendrian(map, spec) : spin_cobordism(map, spec);
}

/// Spins by S^{i_1}, then S^{i_2}, ..., with fresh variable names each time.
/// A spun map has x_1 of both signs, so later steps first translate x_1 to
/// be positive; translation in x_1 does not change the contact form.
inline ParamMap iterated_spin(const ParamMap& map, const std::vector<int>& spins) {
  ParamMap cur = map;
  for (std::size_t k = 0; k < spins.size(); ++k) {
    if (k > 0 && !(sampled_x1_min(cur) > 0.0)) cur = translate_to_positive(cur);
    cur = spin(cur, SpinSpec::fresh(spins[k], cur));
  }
  return cur;
}

/// The Legendrian slice {t = t0} of a cobordism whose coordinate 0 is the t variable.
inline ParamMap slice_at(const ParamMap& map, double t0) {
  const auto t = map.t_variable();
  if (!t) throw InvalidInput("slice needs a cobordism whose first coordinate is a variable");
  ParamMap out;
  out.kind = MapKind::Legendrian;
  for (const auto& v : map.vars) {
    if (v.name != *t) out.vars.push_back(v);
  }
  const Expr c = Expr::constant(t0);
  for (std::size_t i = 1; i < map.coords.size(); ++i) out.coords.push_back(map.coords[i].substitute(*t, c));
  out.validate();
  return out;
}

/// Largest |d(coord)/dt| over sampled points with |t| >= threshold, for the
/// non-t coordinates. Zero for a map that is cylindrical beyond its threshold.
inline double cylinder_residual(const ParamMap& map, const SamplingPlan& plan = {500, 0}) {
  const auto t = map.t_variable();
  if (!t) throw InvalidInput("cylinder check needs a cobordism whose first coordinate is a variable");
  if (!map.threshold) throw InvalidInput("cobordism declares no cylinder threshold");
  std::size_t t_col = 0;
  while (map.vars[t_col].name != *t) ++t_col;
  double worst = 0.0;
  for (const auto& p : sample_points(map, plan)) {
    if (std::abs(p[t_col]) < *map.threshold) continue;
    const MapEvaluation ev = eval_with_jacobian(map, p);
    for (Eigen::Index r = 1; r < ev.jacobian.rows(); ++r) {
      worst = std::max(worst, std::abs(ev.jacobian(r, static_cast<Eigen::Index>(t_col))));
    }
  }
  return worst;
}

inline bool cylindrical_beyond_threshold(const ParamMap& map, const SamplingPlan& plan = {500, 0},
                                         double tol = 1e-12) {
  if (!map.t_variable() || !map.threshold) return false;
  return cylinder_residual(map, plan) <= tol;
}

/// The trivial cylinder R x Lambda over a Legendrian, with primitive 0.
inline ParamMap cylinder_over(const ParamMap& leg, double t_lo = -2.0, double t_hi = 2.0,
                              const std::string& t_name = "t") {
  if (leg.kind != MapKind::Legendrian) throw InvalidInput("cylinder_over expects a Legendrian map");
  if (leg.find_var(t_name)) throw InvalidInput("variable '" + t_name + "' already in use");
  ParamMap out;
  out.kind = MapKind::Cobordism;
  out.vars.push_back({t_name, t_lo, t_hi, VarRole::Interval});
  out.vars.insert(out.vars.end(), leg.vars.begin(), leg.vars.end());
  out.coords.push_back(Expr::variable(t_name));
  out.coords.insert(out.coords.end(), leg.coords.begin(), leg.coords.end());
  out.primitive = Expr::constant(0.0);
  out.threshold = 0.0;
  out.validate();
  return out;
}

}  // namespace spinup
