#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "spinup/errors.hpp"

namespace spinup {

enum class FrontEventKind { LeftCusp, Crossing, RightCusp };

/// One event of a front swept from left to right. Strand positions count
/// from the top (0) down, within the current x-slice.
///   LeftCusp at p:  a new pair of strands is born at positions p, p+1.
///   Crossing at p:  strands p and p+1 swap.
///   RightCusp at p: strands p and p+1 merge and end.
struct FrontEvent {
  FrontEventKind kind = FrontEventKind::Crossing;
  int pos = 0;

  bool operator==(const FrontEvent&) const = default;
};

struct FrontDiagram {
  std::vector<FrontEvent> events;

  std::size_t count(FrontEventKind k) const {
    std::size_t n = 0;
    for (const auto& e : events) n += e.kind == k ? 1 : 0;
    return n;
  }
  std::size_t crossing_count() const { return count(FrontEventKind::Crossing); }
  std::size_t right_cusp_count() const { return count(FrontEventKind::RightCusp); }

  /// Number of strands in each x-slice, one entry after every event.
  std::vector<int> strand_counts() const {
    std::vector<int> out;
    int n = 0;
    for (const auto& e : events) {
      n += e.kind == FrontEventKind::LeftCusp ? 2 : e.kind == FrontEventKind::RightCusp ? -2 : 0;
      out.push_back(n);
    }
    return out;
  }

  /// Positional checks. Single-component closure is checked on resolution.
  void validate() const {
    if (events.empty()) throw InvalidInput("front has no events");
    int n = 0;
    for (std::size_t i = 0; i < events.size(); ++i) {
      const auto& e = events[i];
      const std::string where = "front event " + std::to_string(i) + ": ";
      switch (e.kind) {
        case FrontEventKind::LeftCusp:
          if (e.pos < 0 || e.pos > n) throw InvalidInput(where + "left cusp position out of range");
          n += 2;
          break;
        case FrontEventKind::Crossing:
          if (e.pos < 0 || e.pos + 1 >= n) throw InvalidInput(where + "crossing position out of range");
          break;
        case FrontEventKind::RightCusp:
          if (e.pos < 0 || e.pos + 1 >= n) throw InvalidInput(where + "right cusp position out of range");
          n -= 2;
          break;
      }
    }
    if (n != 0) throw InvalidInput("front does not close up: " + std::to_string(n) + " strands left open");
    if (count(FrontEventKind::LeftCusp) != right_cusp_count()) {
      throw InvalidInput("front has unequal numbers of left and right cusps");
    }
  }
};

/// Front with a single left and right cusp (the flying saucer).
inline FrontDiagram flying_saucer_front() {
  return {{{FrontEventKind::LeftCusp, 0}, {FrontEventKind::RightCusp, 0}}};
}

/// The flying saucer with one zigzag on its upper strand.
inline FrontDiagram stabilized_unknot_front() {
  return {{{FrontEventKind::LeftCusp, 0},
           {FrontEventKind::LeftCusp, 1},
           {FrontEventKind::RightCusp, 0},
           {FrontEventKind::RightCusp, 0}}};
}

/// Plat closure of the 2-braid sigma_1^{2k+1}: the maximal-tb Legendrian
/// (2, 2k+1) torus knot.
inline FrontDiagram torus_front(int k) {
  if (k < 1) throw InvalidInput("torus family index k must be >= 1, got " + std::to_string(k));
  FrontDiagram f;
  f.events.push_back({FrontEventKind::LeftCusp, 0});
  f.events.push_back({FrontEventKind::LeftCusp, 2});
  for (int i = 0; i < 2 * k + 1; ++i) f.events.push_back({FrontEventKind::Crossing, 1});
  f.events.push_back({FrontEventKind::RightCusp, 2});
  f.events.push_back({FrontEventKind::RightCusp, 0});
  return f;
}

// Text format: one event per line, "left <p>", "cross <p>" or "right <p>".

inline FrontDiagram parse_front(std::istream& in) {
  FrontDiagram f;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    int p = 0;
    if (!(ls >> p)) throw InvalidInput("front line " + std::to_string(line_no) + ": missing position");
    if (key == "left") f.events.push_back({FrontEventKind::LeftCusp, p});
    else if (key == "cross") f.events.push_back({FrontEventKind::Crossing, p});
    else if (key == "right") f.events.push_back({FrontEventKind::RightCusp, p});
    else throw InvalidInput("front line " + std::to_string(line_no) + ": unknown event '" + key + "'");
  }
  f.validate();
  return f;
}

inline FrontDiagram parse_front(const std::string& text) {
  std::istringstream in(text);
  return parse_front(in);
}

inline FrontDiagram load_front(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return parse_front(in);
}

inline std::string format_front(const FrontDiagram& f) {
  std::ostringstream out;
  for (const auto& e : f.events) {
    out << (e.kind == FrontEventKind::LeftCusp ? "left " : e.kind == FrontEventKind::Crossing ? "cross " : "right ")
        << e.pos << "\n";
  }
  return out.str();
}

}  // namespace spinup
