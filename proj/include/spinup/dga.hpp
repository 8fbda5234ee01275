#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "spinup/errors.hpp"

namespace spinup {

/// Product of generators, by index. The empty word is the unit.
using Word = std::vector<int>;

struct Generator {
  std::string name;
  int grading = 0;
};

/// Free noncommutative algebra over GF(2) with a differential given on
/// generators. Gradings live in Z/modulus (modulus 0 means Z).
class FreeDGA {
 public:
  FreeDGA() = default;
  explicit FreeDGA(std::vector<Generator> gens, int grading_modulus = 0)
      : gens_(std::move(gens)), d_(gens_.size()), modulus_(grading_modulus) {
    if (modulus_ < 0) throw InvalidInput("grading modulus must be >= 0");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (gens_[i].name == gens_[j].name) throw InvalidInput("duplicate generator " + gens_[i].name);
      }
      gens_[i].grading = reduce(gens_[i].grading);
    }
  }

  std::size_t size() const noexcept { return gens_.size(); }
  const std::vector<Generator>& generators() const noexcept { return gens_; }
  const Generator& generator(std::size_t i) const { return gens_.at(i); }
  int grading_modulus() const noexcept { return modulus_; }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i].name == name) return static_cast<int>(i);
    }
    throw InvalidInput("no generator named '" + name + "'");
  }

  const std::set<Word>& differential(std::size_t i) const { return d_.at(i); }

  /// Adds `w` to d(gen); over GF(2) a repeated word cancels.
  void toggle_term(std::size_t gen, const Word& w) {
    for (int x : w) {
      if (x < 0 || static_cast<std::size_t>(x) >= gens_.size()) throw InvalidInput("word uses unknown generator");
    }
    auto& s = d_.at(gen);
    if (!s.erase(w)) s.insert(w);
  }

  int reduce(int g) const noexcept { return modulus_ == 0 ? g : ((g % modulus_) + modulus_) % modulus_; }

  int word_grading(const Word& w) const {
    int g = 0;
    for (int x : w) g += gens_.at(static_cast<std::size_t>(x)).grading;
    return reduce(g);
  }

  std::string format_word(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ' ';
      s += gens_.at(static_cast<std::size_t>(w[i])).name;
    }
    return s;
  }

  std::string format_differential(std::size_t i) const {
    const auto& s = d_.at(i);
    if (s.empty()) return "0";
    std::string out;
    for (const auto& w : s) {
      if (!out.empty()) out += " + ";
      out += format_word(w);
    }
    return out;
  }

 private:
  std::vector<Generator> gens_;
  std::vector<std::set<Word>> d_;
  int modulus_ = 0;
};

/// d applied to a word by the Leibniz rule (no signs over GF(2)).
inline std::set<Word> apply_differential(const FreeDGA& dga, const Word& w) {
  std::set<Word> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const auto& v : dga.differential(static_cast<std::size_t>(w[i]))) {
      Word t(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      t.insert(t.end(), v.begin(), v.end());
      t.insert(t.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
      if (!out.erase(t)) out.insert(std::move(t));
    }
  }
  return out;
}

struct DSquaredResult {
  bool ok = true;
  /// Generator g and a word surviving in d(d(g)) when !ok.
  std::size_t generator = 0;
  Word witness;
};

inline DSquaredResult check_d_squared(const FreeDGA& dga) {
  for (std::size_t g = 0; g < dga.size(); ++g) {
    std::set<Word> dd;
    for (const auto& w : dga.differential(g)) {
      for (const auto& t : apply_differential(dga, w)) {
        if (!dd.erase(t)) dd.insert(t);
      }
    }
    if (!dd.empty()) return {false, g, *dd.begin()};
  }
  return {};
}

struct GradingViolation {
  std::size_t generator = 0;
  Word word;
};

/// The first summand of d whose grading is not grading(g) - 1, if any.
inline std::optional<GradingViolation> check_grading_drop(const FreeDGA& dga) {
  for (std::size_t g = 0; g < dga.size(); ++g) {
    const int want = dga.reduce(dga.generator(g).grading - 1);
    for (const auto& w : dga.differential(g)) {
      if (dga.word_grading(w) != want) return GradingViolation{g, w};
    }
  }
  return std::nullopt;
}

/// Throws ConsistencyError unless d lowers grading by one and d^2 = 0.
inline void validate_dga(const FreeDGA& dga) {
  if (auto v = check_grading_drop(dga)) {
    throw ConsistencyError("d(" + dga.generator(v->generator).name + ") contains " +
                           dga.format_word(v->word) + " of the wrong grading");
  }
  const auto sq = check_d_squared(dga);
  if (!sq.ok) {
    throw ConsistencyError("d^2(" + dga.generator(sq.generator).name + ") contains " +
                           dga.format_word(sq.witness));
  }
}

// JSON: {"generators": [{"name", "grading"}], "differential": {name: [[factor, ...], ...]},
//        "grading_modulus": m}. An empty inner list is the unit.

inline nlohmann::ordered_json dga_to_json(const FreeDGA& dga) {
  nlohmann::ordered_json j;
  j["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : dga.generators()) j["generators"].push_back({{"name", g.name}, {"grading", g.grading}});
  j["differential"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < dga.size(); ++i) {
    auto terms = nlohmann::ordered_json::array();
    for (const auto& w : dga.differential(i)) {
      auto word = nlohmann::ordered_json::array();
      for (int x : w) word.push_back(dga.generator(static_cast<std::size_t>(x)).name);
      terms.push_back(std::move(word));
    }
    j["differential"][dga.generator(i).name] = std::move(terms);
  }
  j["grading_modulus"] = dga.grading_modulus();
  return j;
}

/// Parses and validates a user-supplied DGA.
inline FreeDGA dga_from_json(const nlohmann::json& j) {
  try {
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators")) gens.push_back({g.at("name").get<std::string>(), g.at("grading").get<int>()});
    FreeDGA dga(std::move(gens), j.value("grading_modulus", 0));
    if (j.contains("differential")) {
      for (const auto& [name, terms] : j.at("differential").items()) {
        const auto g = static_cast<std::size_t>(dga.index_of(name));
        for (const auto& term : terms) {
          Word w;
          for (const auto& f : term) w.push_back(dga.index_of(f.get<std::string>()));
          dga.toggle_term(g, w);
        }
      }
    }
    validate_dga(dga);
    return dga;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed DGA JSON: ") + e.what());
  }
}

inline FreeDGA load_dga(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("cannot parse " + path + ": " + e.what());
  }
  return dga_from_json(j);
}

}  // namespace spinup
