#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "spinup/dga.hpp"
#include "spinup/errors.hpp"
#include "spinup/gf2.hpp"
#include "spinup/homology_profile.hpp"

namespace spinup {

/// Algebra map to GF(2), given by its values on generators.
struct Augmentation {
  std::vector<std::uint8_t> values;

  bool operator()(int gen) const { return values.at(static_cast<std::size_t>(gen)) != 0; }
  bool operator==(const Augmentation&) const = default;
};

/// epsilon applied to a word (the product of its letters' values).
inline bool evaluate_word(const Augmentation& eps, const Word& w) {
  for (int x : w) {
    if (!eps(x)) return false;
  }
  return true;
}

/// epsilon(1) = 1 holds by construction; checks epsilon o d = 0, and in
/// graded mode that epsilon vanishes off grading 0.
inline bool is_augmentation(const FreeDGA& dga, const Augmentation& eps, bool graded = true) {
  if (eps.values.size() != dga.size()) return false;
  for (std::size_t g = 0; g < dga.size(); ++g) {
    if (graded && eps(static_cast<int>(g)) && dga.generator(g).grading != 0) return false;
    bool sum = false;
    for (const auto& w : dga.differential(g)) sum ^= evaluate_word(eps, w);
    if (sum) return false;
  }
  return true;
}

inline constexpr std::size_t kAugmentationBudget = 24;

/// Every augmentation, by exhaustive scan over the free generators (those of
/// grading 0 in graded mode). Ordered by the binary value of the assignment.
inline std::vector<Augmentation> enumerate_augmentations(const FreeDGA& dga, bool graded = true,
                                                         std::size_t budget = kAugmentationBudget) {
  std::vector<std::size_t> free;
  for (std::size_t g = 0; g < dga.size(); ++g) {
    if (!graded || dga.generator(g).grading == 0) free.push_back(g);
  }
  if (free.size() > budget || free.size() >= 64) {
    throw BudgetExceeded("augmentation search over " + std::to_string(free.size()) +
                         " generators exceeds the budget of " + std::to_string(budget));
  }
  std::vector<Augmentation> out;
  const std::uint64_t n = std::uint64_t{1} << free.size();
  Augmentation eps{std::vector<std::uint8_t>(dga.size(), 0)};
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    for (std::size_t i = 0; i < free.size(); ++i) eps.values[free[i]] = (mask >> i) & 1U;
    if (is_augmentation(dga, eps, graded)) out.push_back(eps);
  }
  return out;
}

/// Finite chain complex over GF(2): basis elements with degrees and the full
/// differential matrix (column j = image of basis element j). Degrees are
/// taken mod `modulus` when it is nonzero.
struct Z2Complex {
  std::vector<std::string> names;
  std::vector<int> degrees;
  int modulus = 0;
  BitMatrix differential;

  std::size_t size() const noexcept { return names.size(); }

  int reduce(int d) const noexcept { return modulus == 0 ? d : ((d % modulus) + modulus) % modulus; }

  std::vector<int> degree_set() const {
    std::vector<int> ds;
    for (int d : degrees) {
      if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
  }

  /// Block of the differential from degree d to degree d-1.
  BitMatrix block(int d) const {
    std::vector<std::size_t> src, dst;
    for (std::size_t i = 0; i < size(); ++i) {
      if (degrees[i] == reduce(d)) src.push_back(i);
      if (degrees[i] == reduce(d - 1)) dst.push_back(i);
    }
    BitMatrix m(dst.size(), src.size());
    for (std::size_t r = 0; r < dst.size(); ++r) {
      for (std::size_t c = 0; c < src.size(); ++c) m.set(r, c, differential.get(dst[r], src[c]));
    }
    return m;
  }

  bool squares_to_zero() const { return (differential * differential).is_zero(); }

  /// Throws unless every nonzero entry lowers degree by one.
  void check_graded() const {
    for (std::size_t r = 0; r < size(); ++r) {
      for (std::size_t c = 0; c < size(); ++c) {
        if (differential.get(r, c) && degrees[r] != reduce(degrees[c] - 1)) {
          throw ConsistencyError("differential maps " + names[c] + " to " + names[r] + " off degree -1");
        }
      }
    }
  }
};

/// d^epsilon_1: conjugate d by a -> a + epsilon(a) and keep the linear part.
/// The coefficient of h in d^epsilon_1(g) counts, over words w of d(g) and
/// positions i with w_i = h, the product of epsilon over the other letters.
inline Z2Complex linearized_complex(const FreeDGA& dga, const Augmentation& eps) {
  if (!is_augmentation(dga, eps, false)) throw InvalidInput("epsilon is not an augmentation of this DGA");
  Z2Complex cx;
  cx.modulus = dga.grading_modulus();
  for (const auto& g : dga.generators()) {
    cx.names.push_back(g.name);
    cx.degrees.push_back(g.grading);
  }
  cx.differential = BitMatrix(dga.size(), dga.size());
  for (std::size_t g = 0; g < dga.size(); ++g) {
    for (const auto& w : dga.differential(g)) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        bool others = true;
        for (std::size_t j = 0; j < w.size() && others; ++j) {
          if (j != i && !eps(w[j])) others = false;
        }
        if (others) cx.differential.flip(static_cast<std::size_t>(w[i]), g);
      }
    }
  }
  if (!cx.squares_to_zero()) throw ConsistencyError("linearized differential does not square to zero");
  return cx;
}

/// dim H_d = n_d - rank(d_d) - rank(d_{d+1}) for every degree present.
inline HomologyProfile homology_dims(const Z2Complex& cx) {
  if (!cx.squares_to_zero()) throw ConsistencyError("complex does not square to zero");
  cx.check_graded();
  HomologyProfile p;
  for (int d : cx.degree_set()) {
    int n = 0;
    for (int x : cx.degrees) n += x == d ? 1 : 0;
    const auto r_out = static_cast<int>(cx.block(d).rank());
    const auto r_in = static_cast<int>(cx.block(d + 1).rank());
    p.set(d, n - r_out - r_in);
  }
  return p;
}

/// Cohomology of the dual complex. Over a field its dimensions agree with
/// homology degree by degree.
inline HomologyProfile cohomology_dims(const Z2Complex& cx) { return homology_dims(cx); }

/// dim ker - dim im of the ungraded linearized differential. When epsilon
/// comes from a filling this is the total Betti number of the filling;
/// otherwise it is only a formal Betti sum.
inline int betti_sum(const FreeDGA& dga, const Augmentation& eps) {
  const Z2Complex cx = linearized_complex(dga, eps);
  return static_cast<int>(cx.size()) - 2 * static_cast<int>(cx.differential.rank());
}

/// The filling profile i -> dim LCH^{n-i}_epsilon predicted by the Seidel
/// isomorphism, for degrees 0..n. Needs integer gradings.
inline HomologyProfile seidel_profile(const FreeDGA& dga, const Augmentation& eps, int n) {
  if (dga.grading_modulus() != 0) throw InvalidInput("Seidel profile needs integer gradings (rotation number 0)");
  if (n < 1) throw InvalidInput("Legendrian dimension must be >= 1");
  const HomologyProfile lch = cohomology_dims(linearized_complex(dga, eps));
  HomologyProfile out;
  for (int i = 0; i <= n; ++i) out.set(i, lch[n - i]);
  for (const auto& [d, v] : lch.entries()) {
    if (v && (d > n || d < 0)) out.set(n - d, v);
  }
  return out;
}

/// One Seidel profile per graded augmentation, in augmentation order.
inline std::vector<HomologyProfile> seidel_profiles(const FreeDGA& dga, int n) {
  std::vector<HomologyProfile> out;
  for (const auto& eps : enumerate_augmentations(dga, true)) out.push_back(seidel_profile(dga, eps, n));
  return out;
}

inline nlohmann::ordered_json augmentation_to_json(const FreeDGA& dga, const Augmentation& eps) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t g = 0; g < dga.size(); ++g) j[dga.generator(g).name] = static_cast<int>(eps.values[g]);
  return j;
}

}  // namespace spinup
