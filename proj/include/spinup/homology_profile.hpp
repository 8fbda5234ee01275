#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "json.hpp"
#include "spinup/errors.hpp"

namespace spinup {

/// Degree -> dimension over GF(2). Entries set explicitly to zero are kept
/// for display; comparison ignores them.
class HomologyProfile {
 public:
  HomologyProfile() = default;
  HomologyProfile(std::initializer_list<std::pair<const int, int>> init) {
    for (const auto& [d, v] : init) set(d, v);
  }

  int operator[](int degree) const {
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
  }

  void set(int degree, int dim) {
    if (dim < 0) throw InvalidInput("negative homology dimension in degree " + std::to_string(degree));
    dims_[degree] = dim;
  }
  void add(int degree, int dim) { set(degree, (*this)[degree] + dim); }

  const std::map<int, int>& entries() const noexcept { return dims_; }

  int total() const {
    int s = 0;
    for (const auto& [d, v] : dims_) s += v;
    return s;
  }

  int euler_characteristic() const {
    int s = 0;
    for (const auto& [d, v] : dims_) s += (d % 2 == 0 ? v : -v);
    return s;
  }

  /// Highest degree with nonzero dimension, or -1.
  int top_degree() const {
    int top = -1;
    for (const auto& [d, v] : dims_) {
      if (v) top = d;
    }
    return top;
  }

  bool operator==(const HomologyProfile& o) const { return nonzero() == o.nonzero(); }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [d, v] : dims_) {
      if (!first) s += ", ";
      first = false;
      s += std::to_string(d) + ":" + std::to_string(v);
    }
    return s + "}";
  }

 private:
  std::map<int, int> nonzero() const {
    std::map<int, int> m;
    for (const auto& [d, v] : dims_) {
      if (v) m.emplace(d, v);
    }
    return m;
  }

  std::map<int, int> dims_;
};

inline nlohmann::ordered_json profile_to_json(const HomologyProfile& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [d, v] : p.entries()) j[std::to_string(d)] = v;
  return j;
}

inline HomologyProfile profile_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("homology profile must be a JSON object");
  HomologyProfile p;
  for (const auto& [k, v] : j.items()) {
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != k.size() || !v.is_number_integer()) throw InvalidInput("bad profile entry '" + k + "'");
    p.set(d, v.get<int>());
  }
  return p;
}

/// Parses "0:1,1:3" (spaces and braces allowed).
inline HomologyProfile parse_profile(const std::string& text) {
  HomologyProfile p;
  std::string cleaned;
  for (char c : text) {
    if (c != '{' && c != '}' && c != ' ') cleaned += c;
  }
  std::size_t pos = 0;
  while (pos < cleaned.size()) {
    const std::size_t comma = cleaned.find(',', pos);
    const std::string item = cleaned.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) throw InvalidInput("profile entry '" + item + "' lacks ':'");
    try {
      std::size_t a = 0, b = 0;
      const int d = std::stoi(item.substr(0, colon), &a);
      const int v = std::stoi(item.substr(colon + 1), &b);
      if (a != colon || b != item.size() - colon - 1) throw std::invalid_argument("trailing");
      p.set(d, v);
    } catch (const std::logic_error&) {
      throw InvalidInput("profile entry '" + item + "' is not degree:dimension");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return p;
}

}  // namespace spinup
