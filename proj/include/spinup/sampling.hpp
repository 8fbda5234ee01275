#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "spinup/param_map.hpp"

namespace spinup {

/// Deterministic low-discrepancy sampling of a map's parameter domain.
///
/// Variable i is driven by the radical-inverse sequence in the i-th prime
/// base (a Halton sequence), starting at index `offset + 1`. Every sample
/// lies in [lo, hi), the half-open fundamental domain for periodic variables.
struct SamplingPlan {
  std::size_t count = 1000;
  std::uint64_t offset = 0;
};

namespace detail {

inline constexpr std::array<std::uint32_t, 24> kPrimes = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

inline double radical_inverse(std::uint64_t index, std::uint32_t base) {
  double inv = 1.0 / base;
  double f = inv;
  double out = 0.0;
  while (index > 0) {
    out += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return out;
}

}  // namespace detail

/// Unit-cube Halton point for sample number `k`.
inline std::vector<double> halton_point(std::uint64_t k, std::size_t dims) {
  if (dims > detail::kPrimes.size()) throw InvalidInput("too many dimensions for Halton sampling");
  std::vector<double> u(dims);
  for (std::size_t i = 0; i < dims; ++i) u[i] = detail::radical_inverse(k, detail::kPrimes[i]);
  return u;
}

/// All sample points of `plan` mapped into the domain of `map`.
inline std::vector<std::vector<double>> sample_points(const ParamMap& map, const SamplingPlan& plan) {
  std::vector<std::vector<double>> pts;
  pts.reserve(plan.count);
  for (std::size_t k = 0; k < plan.count; ++k) {
    auto u = halton_point(plan.offset + k + 1, map.vars.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = map.vars[i].lo + u[i] * map.vars[i].width();
    pts.push_back(std::move(u));
  }
  return pts;
}

}  // namespace spinup
