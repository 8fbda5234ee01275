#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "spinup/errors.hpp"
#include "spinup/homology_profile.hpp"

namespace spinup {

struct SpunProfileRequest {
  HomologyProfile base;
  std::vector<int> spins;
  /// Asserts the base is connected (dim H_0 = 1).
  bool connected = true;
};

/// #{j : i_j = degree}.
inline int sphere_count(const std::vector<int>& spins, int degree) {
  int l = 0;
  for (int i : spins) l += i == degree ? 1 : 0;
  return l;
}

namespace detail {

inline void check_spins(const std::vector<int>& spins) {
  for (int i : spins) {
    if (i < 1) throw InvalidInput("sphere dimensions must be >= 1, got " + std::to_string(i));
  }
}

}  // namespace detail

/// Homology of base x S^{i_1} x ... x S^{i_k} by iterated Kunneth over GF(2):
/// p'(d) = p(d) + p(d - i).
inline HomologyProfile spun_profile(const SpunProfileRequest& req) {
  detail::check_spins(req.spins);
  if (req.connected && req.base[0] != 1) {
    throw InvalidInput("connected base must have dim H_0 = 1, got " + std::to_string(req.base[0]));
  }
  HomologyProfile cur = req.base;
  for (int i : req.spins) {
    HomologyProfile next;
    for (const auto& [d, v] : cur.entries()) next.add(d, v);
    for (const auto& [d, v] : cur.entries()) {
      if (d >= 0 && v) next.add(d + i, v);
    }
    if (req.connected && next[i] - cur[i] != 1) {
      throw ConsistencyError("Kunneth step by S^" + std::to_string(i) + " did not add exactly one class in degree " +
                             std::to_string(i));
    }
    cur = std::move(next);
  }
  return cur;
}

inline HomologyProfile spun_profile(const HomologyProfile& base, const std::vector<int>& spins) {
  return spun_profile({base, spins, base[0] == 1});
}

/// tb of the S^m-spun Legendrian: 2(-1)^{m/2} tb for even m, 0 for odd m.
inline int spun_tb(int tb, int m) {
  if (m < 1) throw InvalidInput("sphere dimension must be >= 1, got " + std::to_string(m));
  if (m % 2 == 1) return 0;
  return (m / 2) % 2 == 0 ? 2 * tb : -2 * tb;
}

/// Sign s(n) with tb = s(n) chi(filling) for an n-dimensional Legendrian.
inline int filling_sign(int n) {
  if (n < 1) throw InvalidInput("Legendrian dimension must be >= 1, got " + std::to_string(n));
  const int e = n % 2 == 0 ? n / 2 + 1 : (n - 2) * (n - 1) / 2 + 1;
  return e % 2 == 0 ? 1 : -1;
}

/// tb of an n-dimensional Legendrian with an exact filling of Euler characteristic chi.
inline int tb_from_filling(int chi, int n) { return filling_sign(n) * chi; }

/// Euler characteristic of any exact filling, from tb.
inline int filling_chi_from_tb(int tb, int n) { return filling_sign(n) * tb; }

/// chi(L x S^m).
inline int product_chi(int chi, int m) {
  if (m < 1) throw InvalidInput("sphere dimension must be >= 1, got " + std::to_string(m));
  return m % 2 == 0 ? 2 * chi : 0;
}

/// A connected orientable cobordism surface between two knots.
struct CobordismRecord {
  int tb_plus = 0;
  int tb_minus = 0;
  int chi = 0;
  int genus = 0;
  int punctures = 2;
  HomologyProfile profile;
};

/// Exact cobordism between knots: 2g = tb_+ - tb_- = -chi, and the twice
/// punctured genus-g surface has profile {0:1, 1:2g+1, 2:0}.
inline CobordismRecord chantraine_genus(int tb_plus, int tb_minus) {
  const int diff = tb_plus - tb_minus;
  if (diff < 0) throw InvalidInput("tb difference of an exact cobordism cannot be negative");
  if (diff % 2 != 0) throw InvalidInput("tb difference of an orientable cobordism must be even");
  CobordismRecord r;
  r.tb_plus = tb_plus;
  r.tb_minus = tb_minus;
  r.genus = diff / 2;
  r.chi = -diff;
  r.profile = {{0, 1}, {1, 2 * r.genus + 1}, {2, 0}};
  if (r.chi != 2 - 2 * r.genus - r.punctures || r.profile.euler_characteristic() != r.chi) {
    throw ConsistencyError("cobordism record is not self-consistent");
  }
  return r;
}

/// Lower bound on dim H_i of the filling of the positive end obtained by
/// gluing a cobordism L onto a filling of the negative end (Mayer-Vietoris):
/// fill(i) + L(i) - end(i). Requires L(i) > end(i), which makes the bound
/// strictly larger than fill(i).
inline int mv_strict_bound(const HomologyProfile& dims_L, const HomologyProfile& dims_end,
                           const HomologyProfile& dims_fill, int i) {
  if (dims_L[i] <= dims_end[i]) {
    throw InvalidInput("strict bound needs dim H_" + std::to_string(i) + "(L) = " + std::to_string(dims_L[i]) +
                       " > dim H_" + std::to_string(i) + "(negative end) = " + std::to_string(dims_end[i]));
  }
  return dims_fill[i] + dims_L[i] - dims_end[i];
}

struct SpunClassical {
  int tb = 0;
  /// Rotation class of the unspun knot; spinning only carries it along.
  int r = 0;
  std::vector<int> spins;
  std::string topological_type;
};

inline SpunClassical classical_invariants_of_spun(int tb, int r, const std::vector<int>& spins,
                                                  const std::string& base_type = "S^1") {
  detail::check_spins(spins);
  SpunClassical out{tb, r, spins, base_type};
  for (int m : spins) {
    out.tb = spun_tb(out.tb, m);
    out.topological_type += " x S^" + std::to_string(m);
  }
  return out;
}

/// Equal tb, equal rotation data and the same topological type.
inline bool classical_invariants_coincide(const SpunClassical& a, const SpunClassical& b) {
  return a.tb == b.tb && a.r == b.r && a.topological_type == b.topological_type;
}

inline nlohmann::ordered_json cobordism_to_json(const CobordismRecord& c) {
  return {{"tb_plus", c.tb_plus}, {"tb_minus", c.tb_minus}, {"chi", c.chi},
          {"genus", c.genus},     {"punctures", c.punctures}, {"profile", profile_to_json(c.profile)}};
}

}  // namespace spinup
