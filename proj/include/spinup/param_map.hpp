#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <charconv>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "spinup/errors.hpp"
#include "spinup/expr.hpp"

namespace spinup {

enum class MapKind { Legendrian, Cobordism };

/// How a parameter is sampled. Polar variables are the spherical angles
/// phi_j in [0, pi]; their endpoints are coordinate poles.
enum class VarRole { Interval, Periodic, Polar };

struct Variable {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  VarRole role = VarRole::Interval;

  bool periodic() const noexcept { return role == VarRole::Periodic; }
  double width() const noexcept { return hi - lo; }
};

/// A parametrized immersion into R^{2n+1} (Legendrian) or R x R^{2n+1}
/// (cobordism in the symplectization).
///
/// Coordinates are ordered (t,) x_1, y_1, ..., x_n, y_n, z. For cobordisms
/// coordinate 0 is t. `threshold` is the cylinder threshold T: for |t| >= T
/// the non-t coordinates do not depend on the t variable.
struct ParamMap {
  MapKind kind = MapKind::Legendrian;
  std::vector<Variable> vars;
  std::vector<Expr> coords;
  std::optional<Expr> primitive;
  std::optional<double> threshold;

  std::size_t intrinsic_dim() const noexcept { return vars.size(); }
  std::size_t ambient_dim() const noexcept { return coords.size(); }
  /// Number of (x_i, y_i) pairs.
  std::size_t pair_count() const noexcept {
    const std::size_t offset = kind == MapKind::Cobordism ? 1 : 0;
    return coords.size() < offset + 1 ? 0 : (coords.size() - offset - 1) / 2;
  }
  /// Index of the first contact coordinate (x_1): 0 for Legendrians, 1 for cobordisms.
  std::size_t offset() const noexcept { return kind == MapKind::Cobordism ? 1 : 0; }
  std::size_t x_index(std::size_t i) const noexcept { return offset() + 2 * i; }
  std::size_t y_index(std::size_t i) const noexcept { return offset() + 2 * i + 1; }
  std::size_t z_index() const noexcept { return coords.size() - 1; }

  std::vector<std::string> var_names() const {
    std::vector<std::string> out;
    out.reserve(vars.size());
    for (const auto& v : vars) out.push_back(v.name);
    return out;
  }

  const Variable* find_var(const std::string& name) const {
    for (const auto& v : vars) {
      if (v.name == name) return &v;
    }
    return nullptr;
  }

  /// Name of the t variable when coordinate 0 is exactly a variable.
  std::optional<std::string> t_variable() const {
    if (kind != MapKind::Cobordism || coords.empty()) return std::nullopt;
    if (coords[0].op() != Op::Variable) return std::nullopt;
    return coords[0].name();
  }

  /// Structural checks: coordinate count matches the kind, variables are
  /// distinct and bound, intervals are non-empty.
  void validate() const {
    const std::size_t n = pair_count();
    if (vars.empty()) throw InvalidInput("parametrization has no variables");
    if (kind == MapKind::Legendrian) {
      if (coords.size() < 3 || coords.size() % 2 != 1) {
        throw InvalidInput("Legendrian map needs 2n+1 coordinates, got " +
                           std::to_string(coords.size()));
      }
      if (vars.size() != n) {
        throw InvalidInput("Legendrian map in R^" + std::to_string(coords.size()) + " needs " +
                           std::to_string(n) + " variables, got " + std::to_string(vars.size()));
      }
    } else {
      if (coords.size() < 4 || coords.size() % 2 != 0) {
        throw InvalidInput("cobordism map needs 2n+2 coordinates, got " +
                           std::to_string(coords.size()));
      }
      if (vars.size() != n + 1) {
        throw InvalidInput("cobordism map in R^" + std::to_string(coords.size()) + " needs " +
                           std::to_string(n + 1) + " variables, got " +
                           std::to_string(vars.size()));
      }
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!(vars[i].hi > vars[i].lo)) throw InvalidInput("empty interval for " + vars[i].name);
      for (std::size_t j = 0; j < i; ++j) {
        if (vars[i].name == vars[j].name) throw InvalidInput("duplicate variable " + vars[i].name);
      }
    }
    const auto names = var_names();
    auto check_bound = [&](const Expr& e, const std::string& what) {
      for (const auto& v : e.variables()) {
        if (!find_var(v)) throw InvalidInput(what + " uses undeclared variable '" + v + "'");
      }
    };
    for (std::size_t i = 0; i < coords.size(); ++i) check_bound(coords[i], "coordinate " + std::to_string(i));
    if (primitive) check_bound(*primitive, "primitive");
    if (threshold && !(*threshold >= 0.0)) throw InvalidInput("threshold must be non-negative");
  }

  /// Throws unless `point` lies in the declared domain.
  void check_domain(std::span<const double> point) const {
    if (point.size() != vars.size()) {
      throw InvalidInput("point has " + std::to_string(point.size()) + " entries, map has " +
                         std::to_string(vars.size()) + " variables");
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const auto& v = vars[i];
      const double p = point[i];
      const bool ok = v.periodic() ? std::isfinite(p) : (p >= v.lo && p <= v.hi);
      if (!ok) {
        throw InvalidInput("point outside domain: " + v.name + "=" + std::to_string(p) + " not in [" +
                           std::to_string(v.lo) + ", " + std::to_string(v.hi) + "]");
      }
    }
  }
};

/// The contact form dz - sum_i y_i dx_i described by coordinate indices.
struct ContactData {
  std::size_t ambient_dim = 0;
  std::vector<std::pair<std::size_t, std::size_t>> xy_pairs;
  std::size_t z_index = 0;
  /// Index of t for the symplectization, if present.
  std::optional<std::size_t> t_index;

  static ContactData standard(std::size_t pairs) {
    ContactData c;
    c.ambient_dim = 2 * pairs + 1;
    for (std::size_t i = 0; i < pairs; ++i) c.xy_pairs.emplace_back(2 * i, 2 * i + 1);
    c.z_index = 2 * pairs;
    return c;
  }

  /// Contact data matching the coordinate layout of `map`.
  static ContactData for_map(const ParamMap& map) {
    ContactData c;
    c.ambient_dim = map.ambient_dim();
    for (std::size_t i = 0; i < map.pair_count(); ++i) {
      c.xy_pairs.emplace_back(map.x_index(i), map.y_index(i));
    }
    c.z_index = map.z_index();
    if (map.kind == MapKind::Cobordism) c.t_index = 0;
    return c;
  }

  void check_against(const ParamMap& map) const {
    if (ambient_dim != map.ambient_dim()) {
      throw InvalidInput("contact data for R^" + std::to_string(ambient_dim) +
                         " does not match map into R^" + std::to_string(map.ambient_dim()));
    }
    const ContactData expected = for_map(map);
    if (xy_pairs != expected.xy_pairs || z_index != expected.z_index) {
      throw InvalidInput("contact data index set does not match the map's coordinate layout");
    }
  }
};

// --- Text format -----------------------------------------------------------
//
//   kind legendrian|cobordism
//   var <name> <lo> <hi> [periodic|polar]
//   coord <index> = <expression>
//   primitive = <expression>
//   threshold <T>
//
// Bounds are constant expressions without spaces (e.g. 2*pi). Lines starting
// with '#' are comments.

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace detail

inline ParamMap parse_param_map(std::istream& in) {
  ParamMap map;
  std::vector<std::optional<Expr>> coords;
  bool saw_kind = false;
  std::string raw;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw InvalidInput("map line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "kind") {
      std::string k;
      ls >> k;
      if (k == "legendrian") map.kind = MapKind::Legendrian;
      else if (k == "cobordism") map.kind = MapKind::Cobordism;
      else fail("unknown kind '" + k + "'");
      saw_kind = true;
    } else if (key == "var") {
      Variable v;
      std::string lo, hi, role;
      if (!(ls >> v.name >> lo >> hi)) fail("expected 'var <name> <lo> <hi> [periodic|polar]'");
      v.lo = evaluate_constant(parse_expr(lo));
      v.hi = evaluate_constant(parse_expr(hi));
      if (ls >> role) {
        if (role == "periodic") v.role = VarRole::Periodic;
        else if (role == "polar") v.role = VarRole::Polar;
        else fail("unknown variable role '" + role + "'");
      }
      map.vars.push_back(v);
    } else if (key == "coord") {
      std::size_t idx = 0;
      std::string eq;
      if (!(ls >> idx >> eq) || eq != "=") fail("expected 'coord <index> = <expr>'");
      std::string rest;
      std::getline(ls, rest);
      if (coords.size() <= idx) coords.resize(idx + 1);
      if (coords[idx]) fail("coordinate " + std::to_string(idx) + " given twice");
      coords[idx] = parse_expr(rest);
    } else if (key == "primitive") {
      std::string eq;
      if (!(ls >> eq) || eq != "=") fail("expected 'primitive = <expr>'");
      std::string rest;
      std::getline(ls, rest);
      map.primitive = parse_expr(rest);
    } else if (key == "threshold") {
      double t = 0;
      if (!(ls >> t)) fail("expected 'threshold <T>'");
      map.threshold = t;
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (!saw_kind) throw InvalidInput("map file lacks a 'kind' line");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i]) throw InvalidInput("coordinate " + std::to_string(i) + " missing");
    map.coords.push_back(*coords[i]);
  }
  map.validate();
  return map;
}

inline ParamMap parse_param_map(const std::string& text) {
  std::istringstream in(text);
  return parse_param_map(in);
}

inline std::string format_param_map(const ParamMap& map) {
  std::ostringstream out;
  out << "kind " << (map.kind == MapKind::Legendrian ? "legendrian" : "cobordism") << "\n";
  for (const auto& v : map.vars) {
    out << "var " << v.name << " " << detail::format_double(v.lo) << " "
        << detail::format_double(v.hi);
    if (v.role == VarRole::Periodic) out << " periodic";
    if (v.role == VarRole::Polar) out << " polar";
    out << "\n";
  }
  for (std::size_t i = 0; i < map.coords.size(); ++i) {
    out << "coord " << i << " = " << map.coords[i].to_string() << "\n";
  }
  if (map.primitive) out << "primitive = " << map.primitive->to_string() << "\n";
  if (map.threshold) out << "threshold " << detail::format_double(*map.threshold) << "\n";
  return out.str();
}

inline ParamMap load_param_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return parse_param_map(in);
}

}  // namespace spinup
