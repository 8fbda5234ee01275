#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "spinup/dga.hpp"
#include "spinup/errors.hpp"
#include "spinup/knot_diagrams.hpp"
#include "spinup/lagrangian_diagram.hpp"

namespace spinup {

/// An immersed polygon in the Lagrangian projection with convex corners and
/// one positive corner. The boundary runs counterclockwise, disk on the left.
struct DiskPolygon {
  Corner positive;
  /// Negative corners in boundary order after the positive one.
  std::vector<Corner> negatives;
  /// Boundary darts, starting at the positive corner.
  std::vector<int> darts;
  /// Multiplicity of the disk over each face.
  std::vector<int> winding;

  Word word() const {
    Word w;
    for (const auto& c : negatives) w.push_back(c.crossing);
    return w;
  }
};

struct DiskSearchOptions {
  /// Largest number of times the disk may cover a face.
  int max_face_multiplicity = 1;
  /// Search nodes allowed before giving up with BudgetExceeded.
  std::size_t node_budget = 20'000'000;
};

namespace detail {

class DiskSearch {
 public:
  DiskSearch(const LagrangianDiagram& d, const DiskSearchOptions& opt)
      : d_(d), cap_(opt.max_face_multiplicity), budget_(opt.node_budget) {
    if (cap_ < 1) throw InvalidInput("face multiplicity cap must be >= 1");
  }

  std::vector<DiskPolygon> run() {
    for (int a = 0; a < static_cast<int>(d_.crossing_count()); ++a) {
      for (int q : {0, 2}) {
        start_ = {a, q};
        dart_use_.assign(d_.dart_count(), 0);
        contrib_.assign(d_.crossing_count(), {0, 0, 0, 0});
        path_.clear();
        negatives_.clear();
        passes_.assign(d_.crossing_count(), 0);
        if (!add_contrib(a, q)) continue;
        ++passes_[static_cast<std::size_t>(a)];
        step(d_.dart_out(a, q));
      }
    }
    return std::move(found_);
  }

 private:
  bool add_contrib(int c, int q) {
    int& v = contrib_[static_cast<std::size_t>(c)][static_cast<std::size_t>(q & 3)];
    ++v;
    return v <= cap_;
  }
  void remove_contrib(int c, int q) { --contrib_[static_cast<std::size_t>(c)][static_cast<std::size_t>(q & 3)]; }

  void step(int dart) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("disk search exceeded its budget of " + std::to_string(budget_) + " nodes");
    }
    auto& use = dart_use_[static_cast<std::size_t>(dart)];
    if (use >= cap_ || d_.face_of_dart(dart) == d_.outer_face()) return;
    ++use;
    path_.push_back(dart);
    const auto [c, t] = d_.dart_head(dart);
    if (c == start_.crossing && t == (start_.quadrant + 1) % 4) try_close();
    if (c != start_.crossing || t != (start_.quadrant + 1) % 4 || cap_ > 1) {
      ++passes_[static_cast<std::size_t>(c)];
      // Straight on: the disk covers the two quadrants on the left.
      const bool ok_a = add_contrib(c, t + 2);
      const bool ok_b = add_contrib(c, t + 3);
      if (ok_a && ok_b) step(d_.dart_out(c, t + 2));
      remove_contrib(c, t + 2);
      remove_contrib(c, t + 3);
      // Left turn at a negative quadrant: a convex corner.
      const int q = (t + 3) % 4;
      if (q % 2 == 1) {
        if (add_contrib(c, q)) {
          negatives_.push_back({c, q});
          step(d_.dart_out(c, q));
          negatives_.pop_back();
        }
        remove_contrib(c, q);
      }
      --passes_[static_cast<std::size_t>(c)];
    }
    path_.pop_back();
    --use;
  }

  void try_close() {
    std::vector<int> counts(d_.dart_count(), 0);
    for (int dd : path_) ++counts[static_cast<std::size_t>(dd)];
    const auto w = d_.winding_numbers(counts);
    for (int x : w) {
      if (x < 0 || x > cap_) return;
    }
    // Sheets passing a crossing in their interior, and the Euler
    // characteristic of the domain assembled from faces, edges, vertices.
    long chi = 0;
    for (int x : w) chi += x;
    for (std::size_t e = 0; e < d_.edge_count(); ++e) {
      chi -= w[static_cast<std::size_t>(d_.left_face(static_cast<int>(e)))] + counts[2 * e + 1];
    }
    for (int c = 0; c < static_cast<int>(d_.crossing_count()); ++c) {
      const auto& k = contrib_[static_cast<std::size_t>(c)];
      int base = -1;
      for (int q = 0; q < 4; ++q) {
        const int b = w[static_cast<std::size_t>(d_.corner_face({c, q}))] - k[static_cast<std::size_t>(q)];
        if (b < 0 || (base >= 0 && b != base)) return;
        base = b;
      }
      chi += base + passes_[static_cast<std::size_t>(c)];
    }
    if (chi != 1) return;
    found_.push_back({start_, negatives_, path_, w});
  }

  const LagrangianDiagram& d_;
  int cap_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  Corner start_;
  std::vector<int> dart_use_;
  std::vector<std::array<int, 4>> contrib_;
  std::vector<int> passes_;
  std::vector<int> path_;
  std::vector<Corner> negatives_;
  std::vector<DiskPolygon> found_;
};

}  // namespace detail

/// All disks with at most `max_face_multiplicity` sheets over any face.
///
/// Depth-first search over boundary paths from every positive corner. At
/// multiplicity 1 the acceptance test is exact; above it, the winding and
/// Euler characteristic tests are necessary conditions for an immersed disk.
inline std::vector<DiskPolygon> enumerate_disks(const LagrangianDiagram& d, const DiskSearchOptions& opt = {}) {
  return detail::DiskSearch(d, opt).run();
}

/// Chord gradings read off the diagram alone: the rotation of the capping
/// path from the over pass to the under pass. Reduced mod 2|r|.
inline std::vector<int> chord_gradings(const LagrangianDiagram& d) {
  const int r = d.rotation_number();
  const int mod = 2 * std::abs(r);
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(d.crossing_count()); ++c) {
    const int s = d.quarter_turns(d.capping_path(c));
    if ((s % 2 + 2) % 2 != 1) throw ConsistencyError("capping path of a transverse double point has even turning");
    out.push_back(detail::reduce_mod((s - 1) / 2, mod));
  }
  return out;
}

/// The Chekanov-Eliashberg DGA: d(a) sums the negative-corner words of the
/// disks with positive corner at a. Fails unless d lowers grading by one
/// and squares to zero.
inline FreeDGA build_dga(const LagrangianDiagram& d, const std::vector<int>& gradings, int grading_modulus,
                         const DiskSearchOptions& opt = {}) {
  if (gradings.size() != d.crossing_count()) throw InvalidInput("one grading per chord required");
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) gens.push_back({d.crossings()[i].name, gradings[i]});
  FreeDGA dga(std::move(gens), grading_modulus);
  for (const auto& disk : enumerate_disks(d, opt)) {
    dga.toggle_term(static_cast<std::size_t>(disk.positive.crossing), disk.word());
  }
  validate_dga(dga);
  return dga;
}

inline FreeDGA build_dga(const LagrangianDiagram& d, const DiskSearchOptions& opt = {}) {
  return build_dga(d, chord_gradings(d), 2 * std::abs(d.rotation_number()), opt);
}

inline FreeDGA build_dga(const ResolvedFront& r, const DiskSearchOptions& opt = {}) {
  return build_dga(r.diagram, r.gradings, r.grading_modulus, opt);
}

}  // namespace spinup
