#pragma once

#include <array>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "spinup/errors.hpp"

namespace spinup {

/// One pass of the knot through a crossing.
struct Visit {
  int crossing = 0;
  bool over = false;

  bool operator==(const Visit&) const = default;
};

struct Crossing {
  std::string name;
  /// Writhe sign of the oriented crossing.
  int sign = 1;
};

/// A quadrant at a crossing.
///
/// Quadrants are numbered counterclockwise; quadrant q lies between slot q
/// and slot q+1, where slot 0 is the outgoing half of the over strand. The
/// over strand always occupies the even slots, so rotating it
/// counterclockwise onto the under strand sweeps quadrants 0 and 2: those
/// carry positive Reeb sign, quadrants 1 and 3 negative.
struct Corner {
  int crossing = 0;
  int quadrant = 0;

  bool positive() const noexcept { return quadrant % 2 == 0; }
  auto operator<=>(const Corner&) const = default;
};

/// Selects the unbounded face as the face to one side of an edge.
struct EdgeSide {
  int edge = 0;
  bool left = true;
};

using OuterFaceSpec = std::variant<Corner, EdgeSide>;

/// Lagrangian projection of an oriented Legendrian knot, stored as a signed
/// Gauss code plus the choice of unbounded face.
///
/// Edge i runs from visit i to visit i+1 (cyclically), following the knot
/// orientation. Dart 2i traverses edge i forwards, dart 2i+1 backwards. The
/// over strand is the one with larger z; a Reeb chord runs from the under
/// pass to the over pass.
class LagrangianDiagram {
 public:
  static LagrangianDiagram from_gauss(std::vector<Crossing> crossings, std::vector<Visit> visits,
                                      OuterFaceSpec outer) {
    LagrangianDiagram d;
    d.crossings_ = std::move(crossings);
    d.visits_ = std::move(visits);
    d.build(outer);
    return d;
  }

  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  std::size_t edge_count() const noexcept { return visits_.size(); }
  std::size_t dart_count() const noexcept { return 2 * visits_.size(); }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<Visit>& visits() const noexcept { return visits_; }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
      if (crossings_[i].name == name) return static_cast<int>(i);
    }
    throw InvalidInput("no crossing named '" + name + "'");
  }

  int over_visit(int c) const { return over_visit_[static_cast<std::size_t>(c)]; }
  int under_visit(int c) const { return under_visit_[static_cast<std::size_t>(c)]; }

  /// Dart leaving crossing `c` through slot `s`.
  int dart_out(int c, int s) const { return dart_out_[static_cast<std::size_t>(c)][static_cast<std::size_t>(s & 3)]; }
  /// (crossing, slot) at which dart `d` arrives.
  std::pair<int, int> dart_head(int d) const { return head_[static_cast<std::size_t>(d)]; }
  static int dart_edge(int d) noexcept { return d / 2; }
  static bool dart_forward(int d) noexcept { return d % 2 == 0; }

  std::size_t face_count() const noexcept { return face_corners_.size(); }
  int face_of_dart(int d) const { return dart_face_[static_cast<std::size_t>(d)]; }
  const std::vector<Corner>& face_corners(int f) const { return face_corners_[static_cast<std::size_t>(f)]; }
  int corner_face(const Corner& c) const {
    return corner_face_[static_cast<std::size_t>(c.crossing)][static_cast<std::size_t>(c.quadrant & 3)];
  }
  int left_face(int e) const { return dart_face_[static_cast<std::size_t>(2 * e)]; }
  int right_face(int e) const { return dart_face_[static_cast<std::size_t>(2 * e + 1)]; }
  int outer_face() const noexcept { return outer_face_; }

  int writhe() const {
    int w = 0;
    for (const auto& c : crossings_) w += c.sign;
    return w;
  }

  /// Winding numbers of a closed path given by per-dart traversal counts,
  /// normalized to 0 on the unbounded face.
  std::vector<int> winding_numbers(const std::vector<int>& dart_counts) const {
    const std::size_t F = face_count();
    std::vector<std::vector<std::pair<int, int>>> adj(F);  // (neighbour, w(nb) - w(self))
    for (std::size_t e = 0; e < edge_count(); ++e) {
      const int L = left_face(static_cast<int>(e));
      const int R = right_face(static_cast<int>(e));
      const int jump = dart_counts[2 * e] - dart_counts[2 * e + 1];
      adj[static_cast<std::size_t>(R)].push_back({L, jump});
      adj[static_cast<std::size_t>(L)].push_back({R, -jump});
    }
    std::vector<int> w(F, 0);
    std::vector<bool> seen(F, false);
    std::queue<int> q;
    q.push(outer_face_);
    seen[static_cast<std::size_t>(outer_face_)] = true;
    while (!q.empty()) {
      const int f = q.front();
      q.pop();
      for (auto [nb, jump] : adj[static_cast<std::size_t>(f)]) {
        const int val = w[static_cast<std::size_t>(f)] + jump;
        if (!seen[static_cast<std::size_t>(nb)]) {
          seen[static_cast<std::size_t>(nb)] = true;
          w[static_cast<std::size_t>(nb)] = val;
          q.push(nb);
        } else if (w[static_cast<std::size_t>(nb)] != val) {
          throw ConsistencyError("dart counts do not describe a closed path");
        }
      }
    }
    return w;
  }

  /// Sum over bounded faces of w(f) * (4 - #corners(f)). For a closed path
  /// this is 4x its tangent rotation measured in full turns, with every
  /// crossing drawn as a right angle.
  int quarter_turns(const std::vector<int>& dart_counts) const {
    const auto w = winding_numbers(dart_counts);
    int s = 0;
    for (std::size_t f = 0; f < face_count(); ++f) {
      if (static_cast<int>(f) == outer_face_) continue;
      s += w[f] * (4 - static_cast<int>(face_corners_[f].size()));
    }
    return s;
  }

  /// Rotation (Whitney) number of the oriented projection.
  int rotation_number() const {
    std::vector<int> counts(dart_count(), 0);
    for (std::size_t e = 0; e < edge_count(); ++e) counts[2 * e] = 1;
    const int q = quarter_turns(counts);
    if (q % 4 != 0) throw ConsistencyError("rotation of a closed curve is not integral");
    return q / 4;
  }

  /// Dart counts of the knot arc running from the over pass of `c` to its
  /// under pass along the orientation.
  std::vector<int> capping_path(int c) const {
    std::vector<int> counts(dart_count(), 0);
    const int n = static_cast<int>(edge_count());
    for (int e = over_visit(c); e != under_visit(c); e = (e + 1) % n) counts[static_cast<std::size_t>(2 * e)] += 1;
    return counts;
  }

  /// Same knot with the opposite orientation.
  LagrangianDiagram reversed() const {
    const int n = static_cast<int>(edge_count());
    std::vector<Visit> v(visits_.rbegin(), visits_.rend());
    const EdgeSide old = outer_edge_side();
    // New edge i runs from old visit n-1-i to n-2-i: old edge n-2-i backwards.
    const int new_edge = ((n - 2 - old.edge) % n + n) % n;
    return from_gauss(crossings_, std::move(v), EdgeSide{new_edge, !old.left});
  }

  /// Image under (x, y, z) -> (-x, y, -z): over and under swap, the plane is
  /// reflected, writhe signs are unchanged.
  LagrangianDiagram mirrored() const {
    std::vector<Visit> v = visits_;
    for (auto& x : v) x.over = !x.over;
    const EdgeSide old = outer_edge_side();
    return from_gauss(crossings_, std::move(v), EdgeSide{old.edge, !old.left});
  }

  /// An edge side bounding the unbounded face.
  EdgeSide outer_edge_side() const {
    for (std::size_t e = 0; e < edge_count(); ++e) {
      if (left_face(static_cast<int>(e)) == outer_face_) return {static_cast<int>(e), true};
      if (right_face(static_cast<int>(e)) == outer_face_) return {static_cast<int>(e), false};
    }
    throw ConsistencyError("unbounded face has no edges");
  }

 private:
  struct SlotRef {
    int edge = -1;
    bool tail = false;
  };

  void build(const OuterFaceSpec& outer) {
    const std::size_t V = crossings_.size();
    if (V == 0) throw InvalidInput("a knot projection needs at least one crossing");
    if (visits_.size() != 2 * V) {
      throw InvalidInput("Gauss code must visit each of the " + std::to_string(V) +
                         " crossings exactly twice");
    }
    over_visit_.assign(V, -1);
    under_visit_.assign(V, -1);
    for (std::size_t i = 0; i < V; ++i) {
      if (crossings_[i].sign != 1 && crossings_[i].sign != -1) {
        throw InvalidInput("crossing " + crossings_[i].name + " has sign other than +-1");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (crossings_[i].name == crossings_[j].name) {
          throw InvalidInput("duplicate crossing name " + crossings_[i].name);
        }
      }
    }
    for (std::size_t i = 0; i < visits_.size(); ++i) {
      const auto& v = visits_[i];
      if (v.crossing < 0 || static_cast<std::size_t>(v.crossing) >= V) {
        throw InvalidInput("Gauss code refers to an unknown crossing");
      }
      auto& slot = v.over ? over_visit_[static_cast<std::size_t>(v.crossing)]
                          : under_visit_[static_cast<std::size_t>(v.crossing)];
      if (slot != -1) {
        throw InvalidInput("crossing " + crossings_[static_cast<std::size_t>(v.crossing)].name +
                           " is passed " + (v.over ? "over" : "under") + " twice");
      }
      slot = static_cast<int>(i);
    }

    const int n = static_cast<int>(visits_.size());
    slots_.assign(V, {});
    for (std::size_t c = 0; c < V; ++c) {
      const int io = over_visit_[c];
      const int iu = under_visit_[c];
      const SlotRef o_out{io, true}, o_in{(io - 1 + n) % n, false};
      const SlotRef u_out{iu, true}, u_in{(iu - 1 + n) % n, false};
      if (crossings_[c].sign > 0) slots_[c] = {o_out, u_out, o_in, u_in};
      else slots_[c] = {o_out, u_in, o_in, u_out};
    }

    dart_out_.assign(V, {});
    head_.assign(dart_count(), {-1, -1});
    for (std::size_t c = 0; c < V; ++c) {
      for (int s = 0; s < 4; ++s) {
        const SlotRef r = slots_[c][static_cast<std::size_t>(s)];
        const int dart = r.tail ? 2 * r.edge : 2 * r.edge + 1;
        dart_out_[c][static_cast<std::size_t>(s)] = dart;
        // The opposite dart of the same edge arrives here through this slot.
        head_[static_cast<std::size_t>(dart ^ 1)] = {static_cast<int>(c), s};
      }
    }

    dart_face_.assign(dart_count(), -1);
    corner_face_.assign(V, {-1, -1, -1, -1});
    face_corners_.clear();
    for (std::size_t d0 = 0; d0 < dart_count(); ++d0) {
      if (dart_face_[d0] != -1) continue;
      const int f = static_cast<int>(face_corners_.size());
      face_corners_.emplace_back();
      int d = static_cast<int>(d0);
      while (dart_face_[static_cast<std::size_t>(d)] == -1) {
        dart_face_[static_cast<std::size_t>(d)] = f;
        const auto [c, s] = head_[static_cast<std::size_t>(d)];
        const int q = (s + 3) % 4;
        face_corners_.back().push_back({c, q});
        corner_face_[static_cast<std::size_t>(c)][static_cast<std::size_t>(q)] = f;
        d = dart_out_[static_cast<std::size_t>(c)][static_cast<std::size_t>(q)];
      }
    }
    if (face_corners_.size() != V + 2) {
      throw InvalidInput("Gauss code is not realizable as a planar curve (" +
                         std::to_string(face_corners_.size()) + " faces, expected " +
                         std::to_string(V + 2) + ")");
    }

    if (const auto* corner = std::get_if<Corner>(&outer)) {
      if (corner->crossing < 0 || static_cast<std::size_t>(corner->crossing) >= V ||
          corner->quadrant < 0 || corner->quadrant > 3) {
        throw InvalidInput("outer face corner out of range");
      }
      outer_face_ = corner_face(*corner);
    } else {
      const auto& es = std::get<EdgeSide>(outer);
      if (es.edge < 0 || es.edge >= n) throw InvalidInput("outer face edge out of range");
      outer_face_ = es.left ? left_face(es.edge) : right_face(es.edge);
    }
  }

  std::vector<Crossing> crossings_;
  std::vector<Visit> visits_;
  std::vector<int> over_visit_;
  std::vector<int> under_visit_;
  std::vector<std::array<SlotRef, 4>> slots_;
  std::vector<std::array<int, 4>> dart_out_;
  std::vector<std::pair<int, int>> head_;
  std::vector<int> dart_face_;
  std::vector<std::array<int, 4>> corner_face_;
  std::vector<std::vector<Corner>> face_corners_;
  int outer_face_ = -1;
};

// --- Diagram file format ---------------------------------------------------
//
//   crossing <name> <over|under> <+1|-1>     one line per pass, in traversal order
//   outer <name> <quadrant>                  a corner of the unbounded face
//
// Each crossing appears on exactly two lines with the same sign.

inline LagrangianDiagram parse_diagram(std::istream& in) {
  std::vector<Crossing> crossings;
  std::map<std::string, int> index;
  std::vector<Visit> visits;
  std::optional<std::pair<std::string, int>> outer;
  std::string raw;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw InvalidInput("diagram line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    if (key == "crossing") {
      std::string name, pass;
      int sign = 0;
      if (!(ls >> name >> pass >> sign)) fail("expected 'crossing <name> <over|under> <sign>'");
      if (pass != "over" && pass != "under") fail("pass must be 'over' or 'under'");
      auto it = index.find(name);
      if (it == index.end()) {
        it = index.emplace(name, static_cast<int>(crossings.size())).first;
        crossings.push_back({name, sign});
      } else if (crossings[static_cast<std::size_t>(it->second)].sign != sign) {
        fail("crossing " + name + " listed with two different signs");
      }
      visits.push_back({it->second, pass == "over"});
    } else if (key == "outer") {
      std::string name;
      int q = 0;
      if (!(ls >> name >> q)) fail("expected 'outer <name> <quadrant>'");
      outer = {name, q};
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (!outer) throw InvalidInput("diagram lacks an 'outer' line");
  auto it = index.find(outer->first);
  if (it == index.end()) throw InvalidInput("outer corner names unknown crossing " + outer->first);
  return LagrangianDiagram::from_gauss(std::move(crossings), std::move(visits),
                                       Corner{it->second, outer->second});
}

inline LagrangianDiagram parse_diagram(const std::string& text) {
  std::istringstream in(text);
  return parse_diagram(in);
}

inline LagrangianDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return parse_diagram(in);
}

inline std::string format_diagram(const LagrangianDiagram& d) {
  std::ostringstream out;
  for (const auto& v : d.visits()) {
    const auto& c = d.crossings()[static_cast<std::size_t>(v.crossing)];
    out << "crossing " << c.name << (v.over ? " over " : " under ") << (c.sign > 0 ? "+1" : "-1")
        << "\n";
  }
  const Corner oc = d.face_corners(d.outer_face()).front();
  out << "outer " << d.crossings()[static_cast<std::size_t>(oc.crossing)].name << " " << oc.quadrant
      << "\n";
  return out.str();
}

}  // namespace spinup
