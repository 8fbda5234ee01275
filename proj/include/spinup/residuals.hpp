#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinup/dual.hpp"
#include "spinup/errors.hpp"
#include "spinup/expr.hpp"
#include "spinup/param_map.hpp"
#include "spinup/sampling.hpp"

namespace spinup {

/// Default tolerance for residuals of analytic identities.
inline constexpr double kDefaultResidualTol = 1e-9;

struct MapEvaluation {
  std::vector<double> image;
  /// One row per ambient coordinate, one column per intrinsic variable.
  Eigen::MatrixXd jacobian;
};

/// Image point and exact Jacobian at `point`, by forward-mode differentiation.
inline MapEvaluation eval_with_jacobian(const ParamMap& map, std::span<const double> point) {
  map.check_domain(point);
  const std::size_t n = map.intrinsic_dim();
  const auto names = map.var_names();
  std::vector<Dual> seeds;
  seeds.reserve(n);
  for (std::size_t i = 0; i < n; ++i) seeds.push_back(Dual::seed(point[i], n, i));

  MapEvaluation out;
  out.image.resize(map.ambient_dim());
  out.jacobian.resize(static_cast<Eigen::Index>(map.ambient_dim()), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < map.ambient_dim(); ++r) {
    const Dual v = evaluate<Dual>(map.coords[r], names, seeds, n);
    if (!std::isfinite(v.v)) throw EvaluationError("coordinate " + std::to_string(r) + " is not finite");
    out.image[r] = v.v;
    for (std::size_t c = 0; c < n; ++c) {
      if (!std::isfinite(v.d[c])) {
        throw EvaluationError("derivative of coordinate " + std::to_string(r) + " is not finite");
      }
      out.jacobian(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v.d[c];
    }
  }
  return out;
}

/// Value and gradient of a scalar expression over the map's variables.
inline Dual eval_scalar_with_gradient(const ParamMap& map, const Expr& e,
                                      std::span<const double> point) {
  const std::size_t n = map.intrinsic_dim();
  const auto names = map.var_names();
  std::vector<Dual> seeds;
  for (std::size_t i = 0; i < n; ++i) seeds.push_back(Dual::seed(point[i], n, i));
  Dual v = evaluate<Dual>(e, names, seeds, n);
  if (!std::isfinite(v.v)) throw EvaluationError("non-finite value of " + e.to_string());
  return v;
}

struct ResidualReport {
  std::size_t sample_count = 0;
  double max_residual = 0.0;
  std::vector<double> argmax;
  std::vector<std::string> component_labels;
  std::vector<double> component_max;

  bool within(double tol) const noexcept { return max_residual < tol; }

  void record(std::size_t component, double residual, std::span<const double> point) {
    component_max[component] = std::max(component_max[component], residual);
    if (argmax.empty() || residual > max_residual) {
      max_residual = residual;
      argmax.assign(point.begin(), point.end());
    }
  }
};

namespace detail {

inline ResidualReport make_report(std::vector<std::string> labels) {
  ResidualReport r;
  r.component_max.assign(labels.size(), 0.0);
  r.component_labels = std::move(labels);
  return r;
}

/// alpha(v) = dz(v) - sum_i y_i dx_i(v) for the v = column `col` of the Jacobian.
inline double contact_form_on(const ContactData& contact, const MapEvaluation& ev, Eigen::Index col) {
  double a = ev.jacobian(static_cast<Eigen::Index>(contact.z_index), col);
  for (const auto& [xi, yi] : contact.xy_pairs) {
    a -= ev.image[yi] * ev.jacobian(static_cast<Eigen::Index>(xi), col);
  }
  return a;
}

}  // namespace detail

/// Samples |(f^* alpha)(d/du_j)| for every intrinsic direction u_j.
inline ResidualReport contact_pullback_residual(const ParamMap& map, const ContactData& contact,
                                                const SamplingPlan& plan) {
  if (map.kind != MapKind::Legendrian) {
    throw InvalidInput("contact pullback residual expects a Legendrian map");
  }
  contact.check_against(map);
  if (plan.count == 0) throw InvalidInput("sampling plan is empty");
  std::vector<std::string> labels;
  for (const auto& v : map.vars) labels.push_back("alpha(d/d" + v.name + ")");
  ResidualReport report = detail::make_report(std::move(labels));
  for (const auto& p : sample_points(map, plan)) {
    const MapEvaluation ev = eval_with_jacobian(map, p);
    for (Eigen::Index j = 0; j < ev.jacobian.cols(); ++j) {
      report.record(static_cast<std::size_t>(j), std::abs(detail::contact_form_on(contact, ev, j)), p);
    }
    ++report.sample_count;
  }
  return report;
}

inline ResidualReport contact_pullback_residual(const ParamMap& map, const SamplingPlan& plan) {
  return contact_pullback_residual(map, ContactData::for_map(map), plan);
}

/// Result of checking d(f^*h) = f^*(e^t alpha) and f^* d(e^t alpha) = 0.
struct ExactnessReport {
  ResidualReport exactness;
  ResidualReport lagrangian;

  double max_residual() const noexcept {
    return std::max(exactness.max_residual, lagrangian.max_residual);
  }
  bool within(double tol) const noexcept { return max_residual() < tol; }
};

inline ExactnessReport exactness_residual(const ParamMap& map, const SamplingPlan& plan) {
  if (map.kind != MapKind::Cobordism) throw InvalidInput("exactness residual expects a cobordism map");
  if (!map.primitive) throw InvalidInput("cobordism map carries no primitive");
  if (plan.count == 0) throw InvalidInput("sampling plan is empty");
  map.validate();
  const ContactData contact = ContactData::for_map(map);
  const std::size_t n = map.intrinsic_dim();

  std::vector<std::string> ex_labels;
  for (const auto& v : map.vars) ex_labels.push_back("dh-e^t alpha (d/d" + v.name + ")");
  std::vector<std::string> lag_labels;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      lag_labels.push_back("omega(d/d" + map.vars[j].name + ", d/d" + map.vars[k].name + ")");
    }
  }
  ExactnessReport out{detail::make_report(std::move(ex_labels)), detail::make_report(std::move(lag_labels))};

  for (const auto& p : sample_points(map, plan)) {
    const MapEvaluation ev = eval_with_jacobian(map, p);
    const Dual h = eval_scalar_with_gradient(map, *map.primitive, p);
    const double et = std::exp(ev.image[0]);
    std::vector<double> alpha(n);
    for (std::size_t j = 0; j < n; ++j) alpha[j] = detail::contact_form_on(contact, ev, static_cast<Eigen::Index>(j));

    for (std::size_t j = 0; j < n; ++j) {
      out.exactness.record(j, std::abs(h.d[j] - et * alpha[j]), p);
    }
    std::size_t comp = 0;
    const auto& J = ev.jacobian;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k, ++comp) {
        const auto ej = static_cast<Eigen::Index>(j);
        const auto ek = static_cast<Eigen::Index>(k);
        // d(e^t alpha) = e^t (dt ^ alpha + sum_i dx_i ^ dy_i)
        double w = J(0, ej) * alpha[k] - J(0, ek) * alpha[j];
        for (const auto& [xi, yi] : contact.xy_pairs) {
          const auto x = static_cast<Eigen::Index>(xi);
          const auto y = static_cast<Eigen::Index>(yi);
          w += J(x, ej) * J(y, ek) - J(x, ek) * J(y, ej);
        }
        out.lagrangian.record(comp, std::abs(et * w), p);
      }
    }
    ++out.exactness.sample_count;
    ++out.lagrangian.sample_count;
  }
  return out;
}

/// Numerical rank of the Jacobian at `point`.
inline std::size_t jacobian_rank(const ParamMap& map, std::span<const double> point,
                                 double rel_tol = 1e-9) {
  const MapEvaluation ev = eval_with_jacobian(map, point);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(ev.jacobian);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  const double cutoff = rel_tol * std::max(1.0, s(0));
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cutoff) ++rank;
  }
  return rank;
}

struct EmbeddingTolerance {
  /// Pairs closer than this in parameter space are never compared.
  double intrinsic_separation = 0.5;
  /// Pairs whose images are closer than this are reported.
  double ambient_epsilon = 0.05;
  /// Samples with sin(phi) below this for a polar variable are skipped.
  double pole_window = 1e-3;
};

struct NearCollision {
  std::vector<double> a;
  std::vector<double> b;
  double ambient_distance = 0.0;
};

/// Sampled evidence for embeddedness. This is a heuristic: a clean report
/// does not prove injectivity, it only says no violation was observed.
struct EmbeddingReport {
  std::size_t sample_count = 0;
  std::size_t pole_excluded = 0;
  std::size_t min_rank_seen = 0;
  std::vector<std::vector<double>> rank_violations;
  std::vector<NearCollision> collisions;

  bool clean() const noexcept { return rank_violations.empty() && collisions.empty(); }
};

namespace detail {

inline double intrinsic_distance(const ParamMap& map, const std::vector<double>& a,
                                 const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = std::abs(a[i] - b[i]);
    if (map.vars[i].periodic()) d = std::min(d, map.vars[i].width() - d);
    s += d * d;
  }
  return std::sqrt(s);
}

inline bool near_pole(const ParamMap& map, const std::vector<double>& p, double window) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (map.vars[i].role == VarRole::Polar && std::abs(std::sin(p[i])) < window) return true;
  }
  return false;
}

}  // namespace detail

inline EmbeddingReport verify_embedding_sampled(const ParamMap& map, const SamplingPlan& plan,
                                                std::size_t min_rank,
                                                const EmbeddingTolerance& tol = {}) {
  map.validate();
  EmbeddingReport report;
  report.min_rank_seen = map.intrinsic_dim();
  std::vector<std::vector<double>> kept;
  std::vector<std::vector<double>> images;
  for (const auto& p : sample_points(map, plan)) {
    ++report.sample_count;
    if (detail::near_pole(map, p, tol.pole_window)) {
      ++report.pole_excluded;
      continue;
    }
    const std::size_t rank = jacobian_rank(map, p);
    report.min_rank_seen = std::min(report.min_rank_seen, rank);
    if (rank < min_rank) report.rank_violations.push_back(p);
    images.push_back(eval_with_jacobian(map, p).image);
    kept.push_back(p);
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      double d2 = 0.0;
      for (std::size_t c = 0; c < images[i].size(); ++c) {
        const double d = images[i][c] - images[j][c];
        d2 += d * d;
      }
      if (d2 >= tol.ambient_epsilon * tol.ambient_epsilon) continue;
      if (detail::intrinsic_distance(map, kept[i], kept[j]) <= tol.intrinsic_separation) continue;
      report.collisions.push_back({kept[i], kept[j], std::sqrt(d2)});
    }
  }
  return report;
}

}  // namespace spinup
