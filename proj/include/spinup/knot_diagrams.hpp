#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "spinup/errors.hpp"
#include "spinup/expr.hpp"
#include "spinup/front.hpp"
#include "spinup/lagrangian_diagram.hpp"
#include "spinup/param_map.hpp"

namespace spinup {

/// Lagrangian diagram obtained from a front, with the data the front
/// provides for free.
struct ResolvedFront {
  LagrangianDiagram diagram;
  /// Chord gradings from the Maslov potential, indexed like the diagram's crossings.
  std::vector<int> gradings;
  /// 2|r|, or 0 when the rotation number vanishes and gradings are integers.
  int grading_modulus = 0;
  /// true for the crossings created at right cusps.
  std::vector<bool> from_right_cusp;
  int front_tb = 0;
  int front_rotation = 0;
};

namespace detail {

// Geometric ports of a crossing, counterclockwise from the upper right.
inline constexpr int kNE = 0, kNW = 1, kSW = 2, kSE = 3;

enum class NodeKind { LeftCusp, Crossing, Cap };

struct PortRef {
  int node = -1;
  int port = -1;
};

struct ResolutionGraph {
  std::vector<NodeKind> kind;
  std::vector<int> crossing_index;  // -1 unless kind == Crossing
  std::vector<std::array<PortRef, 4>> link;

  int add(NodeKind k, int ci = -1) {
    kind.push_back(k);
    crossing_index.push_back(ci);
    link.push_back({});
    return static_cast<int>(kind.size()) - 1;
  }
  void connect(PortRef a, PortRef b) {
    link[static_cast<std::size_t>(a.node)][static_cast<std::size_t>(a.port)] = b;
    link[static_cast<std::size_t>(b.node)][static_cast<std::size_t>(b.port)] = a;
  }
};

inline int reduce_mod(int v, int m) { return m == 0 ? v : ((v % m) + m) % m; }

}  // namespace detail

/// Resolution of a front into a Lagrangian projection (Ng's procedure).
///
/// Every front crossing stays a crossing; every right cusp becomes a small
/// loop with one crossing. At each crossing the strand running from upper
/// left to lower right has the smaller front slope, hence the larger y and,
/// after resolution, passes over. Crossings from right cusps are named
/// a1, a2, ... and come first; front crossings follow as b1, b2, ... , both
/// numbered left to right.
inline ResolvedFront resolve_front(const FrontDiagram& front) {
  using namespace detail;
  front.validate();
  if (front.events.front().kind != FrontEventKind::LeftCusp) {
    throw InvalidInput("front must start with a left cusp");
  }
  const int n_loop = static_cast<int>(front.right_cusp_count());
  const int n_cross = static_cast<int>(front.crossing_count());

  ResolutionGraph g;
  std::vector<PortRef> open;
  int next_a = 0, next_b = n_loop;
  int last_loop_node = -1;
  for (const auto& e : front.events) {
    const auto p = static_cast<std::size_t>(e.pos);
    switch (e.kind) {
      case FrontEventKind::LeftCusp: {
        const int n = g.add(NodeKind::LeftCusp);
        open.insert(open.begin() + e.pos, {PortRef{n, 0}, PortRef{n, 1}});
        break;
      }
      case FrontEventKind::Crossing: {
        const int n = g.add(NodeKind::Crossing, next_b++);
        g.connect(open[p], {n, kNW});
        g.connect(open[p + 1], {n, kSW});
        open[p] = {n, kNE};
        open[p + 1] = {n, kSE};
        break;
      }
      case FrontEventKind::RightCusp: {
        const int x = g.add(NodeKind::Crossing, next_a++);
        const int cap = g.add(NodeKind::Cap);
        g.connect(open[p], {x, kNW});
        g.connect(open[p + 1], {x, kSW});
        g.connect({x, kSE}, {cap, 0});
        g.connect({x, kNE}, {cap, 1});
        open.erase(open.begin() + e.pos, open.begin() + e.pos + 2);
        last_loop_node = x;
        break;
      }
    }
  }

  std::size_t total_links = 0;
  for (std::size_t i = 0; i < g.kind.size(); ++i) total_links += g.kind[i] == NodeKind::Crossing ? 2 : 1;

  const int V = n_loop + n_cross;
  std::vector<Visit> visits;
  std::vector<int> entry_over(static_cast<std::size_t>(V), -1), entry_under(static_cast<std::size_t>(V), -1);
  std::vector<int> mu_over(static_cast<std::size_t>(V), 0), mu_under(static_cast<std::size_t>(V), 0);
  int mu = 0, down = 0, up = 0;
  PortRef cur{0, 0};  // leaving the first left cusp along its upper branch
  std::size_t steps = 0;
  do {
    const PortRef in = g.link[static_cast<std::size_t>(cur.node)][static_cast<std::size_t>(cur.port)];
    if (in.node < 0) throw ConsistencyError("resolution left a dangling strand");
    ++steps;
    if (steps > total_links) throw ConsistencyError("resolution trace did not close");
    const auto ni = static_cast<std::size_t>(in.node);
    switch (g.kind[ni]) {
      case NodeKind::Crossing: {
        const int c = g.crossing_index[ni];
        const bool over = in.port == kNW || in.port == kSE;
        visits.push_back({c, over});
        (over ? entry_over : entry_under)[static_cast<std::size_t>(c)] = in.port;
        (over ? mu_over : mu_under)[static_cast<std::size_t>(c)] = mu;
        cur = {in.node, (in.port + 2) % 4};
        break;
      }
      case NodeKind::LeftCusp:
      case NodeKind::Cap:
        // Port 0 is the upper branch; passing from it to the lower one is a down cusp.
        if (in.port == 0) {
          ++down;
          --mu;
        } else {
          ++up;
          ++mu;
        }
        cur = {in.node, 1 - in.port};
        break;
    }
  } while (!(cur.node == 0 && cur.port == 0));
  if (steps != total_links) throw InvalidInput("front has more than one component");
  if ((down - up) % 2 != 0) throw ConsistencyError("odd cusp imbalance on a closed front");

  ResolvedFront out;
  out.front_rotation = (down - up) / 2;
  out.grading_modulus = 2 * std::abs(out.front_rotation);

  std::vector<Crossing> crossings(static_cast<std::size_t>(V));
  out.from_right_cusp.assign(static_cast<std::size_t>(V), false);
  out.gradings.assign(static_cast<std::size_t>(V), 0);
  int front_writhe = 0;
  for (int c = 0; c < V; ++c) {
    const auto ci = static_cast<std::size_t>(c);
    const bool loop = c < n_loop;
    const bool over_right = entry_over[ci] == kNW;
    const bool under_right = entry_under[ci] == kSW;
    crossings[ci].sign = over_right == under_right ? 1 : -1;
    crossings[ci].name = loop ? "a" + std::to_string(c + 1) : "b" + std::to_string(c - n_loop + 1);
    out.from_right_cusp[ci] = loop;
    out.gradings[ci] = reduce_mod(mu_over[ci] - mu_under[ci], out.grading_modulus);
    if (!loop) front_writhe += crossings[ci].sign;
  }
  out.front_tb = front_writhe - n_loop;

  // The region above the last right-cusp loop is unbounded. Find the
  // normalized quadrant sitting between the NE and NW ports there.
  const int last = g.crossing_index[static_cast<std::size_t>(last_loop_node)];
  Corner outer{last, -1};
  for (int c = 0; c < V; ++c) {
    const auto ci = static_cast<std::size_t>(c);
    const int o_in = entry_over[ci], u_in = entry_under[ci];
    const int o_out = (o_in + 2) % 4, u_out = (u_in + 2) % 4;
    const std::array<int, 4> slots = crossings[ci].sign > 0 ? std::array<int, 4>{o_out, u_out, o_in, u_in}
                                                             : std::array<int, 4>{o_out, u_in, o_in, u_out};
    for (int s = 0; s < 4; ++s) {
      if (slots[static_cast<std::size_t>((s + 1) % 4)] != (slots[static_cast<std::size_t>(s)] + 1) % 4) {
        throw ConsistencyError("crossing sign disagrees with the port geometry at " + crossings[ci].name);
      }
      if (c == last && slots[static_cast<std::size_t>(s)] == kNE) outer.quadrant = s;
    }
  }
  out.diagram = LagrangianDiagram::from_gauss(std::move(crossings), std::move(visits), outer);
  return out;
}

inline int thurston_bennequin(const LagrangianDiagram& d) { return d.writhe(); }
inline int rotation_number(const LagrangianDiagram& d) { return d.rotation_number(); }

/// tb from the front: signed crossings minus right cusps.
inline int thurston_bennequin(const FrontDiagram& f) { return resolve_front(f).front_tb; }
/// (down cusps - up cusps) / 2.
inline int rotation_number(const FrontDiagram& f) { return resolve_front(f).front_rotation; }

struct TorusKnot {
  int k = 1;
  FrontDiagram front;
  ResolvedFront resolved;
};

/// The maximal-tb Legendrian (2, 2k+1) torus knot T_{2k+1}.
inline TorusKnot torus_knot_family(int k) {
  TorusKnot t;
  t.k = k;
  t.front = torus_front(k);
  t.resolved = resolve_front(t.front);
  return t;
}

/// The standard unknot: x = 2 + sin s, y = -3 sin s cos s, z = cos^3 s.
inline ParamMap unknot_param() {
  const Expr s = Expr::variable("s");
  ParamMap m;
  m.kind = MapKind::Legendrian;
  m.vars.push_back({"s", 0.0, 2.0 * std::numbers::pi, VarRole::Periodic});
  m.coords.push_back(2.0 + sin(s));
  m.coords.push_back(-3.0 * sin(s) * cos(s));
  m.coords.push_back(pow(cos(s), 3.0));
  m.validate();
  return m;
}

/// Lagrangian diagram of a parametrized Legendrian knot in R^3, read off a
/// closed polyline through `samples` points of its (x, y) projection.
/// Crossings are named c1, c2, ... in order of first passage.
inline LagrangianDiagram extract_diagram(const ParamMap& map, std::size_t samples = 4096) {
  map.validate();
  if (map.kind != MapKind::Legendrian || map.ambient_dim() != 3 || !map.vars[0].periodic()) {
    throw InvalidInput("diagram extraction needs a periodic Legendrian knot in R^3");
  }
  if (samples < 16) throw InvalidInput("too few samples for diagram extraction");
  const Variable& v = map.vars[0];
  const double h = v.width() / static_cast<double>(samples);
  // A generic shift keeps symmetric double points off the polyline vertices.
  const double shift = 0.3819660112501051;
  const std::vector<std::string> names{v.name};
  auto param = [&](double k) { return v.lo + (k + shift) * h; };
  auto eval = [&](std::size_t coord, double s) {
    const double pt[1] = {s};
    return evaluate(map.coords[coord], names, std::span<const double>(pt, 1));
  };
  std::vector<double> xs(samples), ys(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    xs[k] = eval(0, param(static_cast<double>(k)));
    ys[k] = eval(1, param(static_cast<double>(k)));
  }

  struct Hit {
    double s_a, s_b;
    double dxa, dya, dxb, dyb;
  };
  std::vector<Hit> hits;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t i1 = (i + 1) % samples;
    const double ax = xs[i], ay = ys[i], rx = xs[i1] - ax, ry = ys[i1] - ay;
    for (std::size_t j = i + 2; j < samples; ++j) {
      if (i == 0 && j == samples - 1) continue;
      const std::size_t j1 = (j + 1) % samples;
      const double bx = xs[j], by = ys[j], qx = xs[j1] - bx, qy = ys[j1] - by;
      const double den = rx * qy - ry * qx;
      if (den == 0.0) continue;
      const double t = ((bx - ax) * qy - (by - ay) * qx) / den;
      const double u = ((bx - ax) * ry - (by - ay) * rx) / den;
      if (t < 0.0 || t >= 1.0 || u < 0.0 || u >= 1.0) continue;
      hits.push_back({param(static_cast<double>(i) + t), param(static_cast<double>(j) + u), rx, ry, qx, qy});
    }
  }
  if (hits.empty()) throw InvalidInput("Lagrangian projection has no double points");

  struct Pass {
    double s;
    int crossing;
    bool over;
  };
  std::vector<Pass> passes;
  std::vector<int> signs;
  for (std::size_t c = 0; c < hits.size(); ++c) {
    const Hit& hit = hits[c];
    const double za = eval(2, hit.s_a), zb = eval(2, hit.s_b);
    if (za == zb) throw InvalidInput("double point with equal z: the knot is not embedded");
    const bool a_over = za > zb;
    const double ox = a_over ? hit.dxa : hit.dxb, oy = a_over ? hit.dya : hit.dyb;
    const double ux = a_over ? hit.dxb : hit.dxa, uy = a_over ? hit.dyb : hit.dya;
    signs.push_back(ox * uy - oy * ux > 0.0 ? 1 : -1);
    passes.push_back({hit.s_a, static_cast<int>(c), a_over});
    passes.push_back({hit.s_b, static_cast<int>(c), !a_over});
  }
  std::sort(passes.begin(), passes.end(), [](const Pass& a, const Pass& b) { return a.s < b.s; });

  // Rename crossings in order of first passage.
  std::vector<int> rename(hits.size(), -1);
  int next = 0;
  std::vector<Crossing> crossings(hits.size());
  std::vector<Visit> visits;
  for (const auto& p : passes) {
    auto& r = rename[static_cast<std::size_t>(p.crossing)];
    if (r < 0) {
      r = next++;
      crossings[static_cast<std::size_t>(r)] = {"c" + std::to_string(r + 1), signs[static_cast<std::size_t>(p.crossing)]};
    }
    visits.push_back({r, p.over});
  }

  // Above the highest vertex lies the unbounded face.
  const std::size_t top = static_cast<std::size_t>(std::max_element(ys.begin(), ys.end()) - ys.begin());
  const double dx = xs[(top + 1) % samples] - xs[top];
  const double s_top = param(static_cast<double>(top) + 0.5);
  int edge = static_cast<int>(passes.size()) - 1;
  for (std::size_t i = 0; i < passes.size(); ++i) {
    if (passes[i].s <= s_top) edge = static_cast<int>(i);
  }
  return LagrangianDiagram::from_gauss(std::move(crossings), std::move(visits), EdgeSide{edge, dx > 0.0});
}

}  // namespace spinup
