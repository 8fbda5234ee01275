#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "spinup/errors.hpp"

namespace spinup {

/// Largest number of intrinsic variables a forward-mode gradient can carry.
inline constexpr std::size_t kMaxIntrinsicDim = 16;

/// Forward-mode dual number: a value plus its gradient with respect to up to
/// kMaxIntrinsicDim seed variables.
struct Dual {
  double v = 0.0;
  std::array<double, kMaxIntrinsicDim> d{};
  std::size_t n = 0;

  Dual() = default;
  Dual(double value, std::size_t dims) : v(value), n(dims) {
    if (dims > kMaxIntrinsicDim) {
      throw InvalidInput("too many intrinsic variables for forward-mode evaluation");
    }
  }

  static Dual seed(double value, std::size_t dims, std::size_t index) {
    Dual out(value, dims);
    out.d[index] = 1.0;
    return out;
  }
};

inline Dual operator+(const Dual& a, const Dual& b) {
  Dual r(a.v + b.v, a.n);
  for (std::size_t i = 0; i < a.n; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}

inline Dual operator*(const Dual& a, const Dual& b) {
  Dual r(a.v * b.v, a.n);
  for (std::size_t i = 0; i < a.n; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}

/// Scales the gradient by the chain-rule factor `df` and replaces the value.
inline Dual chain(const Dual& a, double value, double df) {
  Dual r(value, a.n);
  for (std::size_t i = 0; i < a.n; ++i) r.d[i] = df * a.d[i];
  return r;
}

inline Dual sin(const Dual& a) { return chain(a, std::sin(a.v), std::cos(a.v)); }
inline Dual cos(const Dual& a) { return chain(a, std::cos(a.v), -std::sin(a.v)); }
inline Dual exp(const Dual& a) {
  const double e = std::exp(a.v);
  return chain(a, e, e);
}
inline Dual pow(const Dual& a, double k) {
  return chain(a, std::pow(a.v, k), k * std::pow(a.v, k - 1.0));
}

}  // namespace spinup
