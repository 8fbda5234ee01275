#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "spinup/augmentation.hpp"
#include "spinup/disks.hpp"
#include "spinup/errors.hpp"
#include "spinup/homology_profile.hpp"
#include "spinup/invariants.hpp"
#include "spinup/knot_diagrams.hpp"
#include "spinup/symbolic_suite.hpp"

namespace spinup {

inline constexpr const char* kReportSchema = "spinup.pair/1";

/// Everything the pipeline derives from one member T_{2k+1} of the family.
struct KnotSummary {
  int k = 0;
  std::size_t chords = 0;
  int tb = 0;
  int r = 0;
  FreeDGA dga;
  std::vector<Augmentation> augmentations;
  std::vector<HomologyProfile> seidel;
  std::vector<int> betti_sums;
  /// Largest degree-1 entry among the Seidel profiles.
  int max_h1 = 0;
};

/// Builds T_{2k+1}, its DGA and augmentations, and certifies tb = 2k-1,
/// r = 0 and the filling identity: every Betti sum is 1 + 2g with the genus
/// g read off tb.
inline KnotSummary analyze_torus_knot(int k, const DiskSearchOptions& disks = {}) {
  const std::string stage = "knot T_" + std::to_string(2 * k + 1);
  const TorusKnot t = torus_knot_family(k);
  KnotSummary s;
  s.k = k;
  s.chords = t.resolved.diagram.crossing_count();
  s.tb = thurston_bennequin(t.resolved.diagram);
  s.r = rotation_number(t.resolved.diagram);
  if (s.tb != 2 * k - 1 || s.r != 0 || s.tb != t.resolved.front_tb || s.r != t.resolved.front_rotation) {
    throw CertificationFailure(stage, "classical invariants tb=" + std::to_string(s.tb) + ", r=" +
                                          std::to_string(s.r) + " disagree with the family");
  }
  try {
    s.dga = build_dga(t.resolved, disks);
  } catch (const ConsistencyError& e) {
    throw CertificationFailure(stage, std::string("DGA: ") + e.what());
  }
  s.augmentations = enumerate_augmentations(s.dga, true);
  if (s.augmentations.empty()) throw CertificationFailure(stage, "no augmentation");
  const int chi = filling_chi_from_tb(s.tb, 1);
  const int genus = (1 - chi) / 2;
  for (const auto& eps : s.augmentations) {
    s.seidel.push_back(seidel_profile(s.dga, eps, 1));
    s.betti_sums.push_back(betti_sum(s.dga, eps));
    if (s.betti_sums.back() != 1 + 2 * genus) {
      throw CertificationFailure(stage, "Betti sum " + std::to_string(s.betti_sums.back()) +
                                            " differs from 1 + 2g = " + std::to_string(1 + 2 * genus));
    }
    s.max_h1 = std::max(s.max_h1, s.seidel.back()[1]);
  }
  return s;
}

struct PipelineOptions {
  DiskSearchOptions disks;
  bool run_symbolic = false;
  SymbolicSuiteOptions symbolic;
};

struct PairReport {
  int j = 0;
  int k = 0;
  std::vector<int> spins;
  int degree = 1;
  KnotSummary minus;
  KnotSummary plus;
  CobordismRecord cobordism;
  HomologyProfile end_profile;
  HomologyProfile fill_minus_profile;
  int mv_bound = 0;
  HomologyProfile spun_cobordism;
  HomologyProfile spun_end;
  HomologyProfile spun_fill_minus;
  int spun_bound = 0;
  SpunClassical classical_minus;
  SpunClassical classical_plus;
  bool coincide = false;
  bool distinguished = false;
  std::optional<SymbolicSuiteReport> symbolic;

  std::string verdict() const { return distinguished ? "distinguished" : "not-distinguished"; }
};

/// T_{2j+1} and T_{2k+1}, spun by `spins`: certifies that the spun cobordism
/// keeps dim H_1 strictly above the spun negative end, so that gluing onto
/// the best available filling of the negative end beats every
/// augmentation-derived filling profile of it.
inline PairReport run_theorem_pipeline(int j, int k, const std::vector<int>& spins, const PipelineOptions& opt = {}) {
  if (j < 1 || k <= j) throw InvalidInput("need 1 <= j < k, got j=" + std::to_string(j) + ", k=" + std::to_string(k));
  for (int i : spins) {
    if (i < 1) throw InvalidInput("spin dimensions must be >= 1");
  }
  PairReport rep;
  rep.j = j;
  rep.k = k;
  rep.spins = spins;
  const int i = rep.degree;

  rep.minus = analyze_torus_knot(j, opt.disks);
  rep.plus = analyze_torus_knot(k, opt.disks);

  // The stand-in for the maximal filling of the negative end: the Seidel
  // profile with the largest H_1. Geometric fillings can only do worse.
  rep.fill_minus_profile = rep.minus.seidel.front();
  for (const auto& p : rep.minus.seidel) {
    if (p[i] > rep.fill_minus_profile[i]) rep.fill_minus_profile = p;
  }

  rep.cobordism = chantraine_genus(rep.plus.tb, rep.minus.tb);
  if (rep.cobordism.genus != k - j) throw CertificationFailure("cobordism", "genus differs from k - j");
  rep.end_profile = {{0, 1}, {1, 1}};
  try {
    rep.mv_bound = mv_strict_bound(rep.cobordism.profile, rep.end_profile, rep.fill_minus_profile, i);
  } catch (const InvalidInput& e) {
    throw CertificationFailure("mayer_vietoris", e.what());
  }
  if (rep.mv_bound != rep.plus.max_h1) {
    throw CertificationFailure("mayer_vietoris", "glued bound " + std::to_string(rep.mv_bound) +
                                                     " differs from the augmentation maximum " +
                                                     std::to_string(rep.plus.max_h1) + " of the positive end");
  }

  rep.spun_cobordism = spun_profile(rep.cobordism.profile, spins);
  rep.spun_end = spun_profile(rep.end_profile, spins);
  rep.spun_fill_minus = spun_profile(rep.fill_minus_profile, spins);
  const int l = sphere_count(spins, i);
  if (rep.spun_cobordism[i] != rep.cobordism.profile[i] + l || rep.spun_end[i] != rep.end_profile[i] + l) {
    throw CertificationFailure("kunneth", "degree-" + std::to_string(i) + " growth differs from l = " + std::to_string(l));
  }
  try {
    rep.spun_bound = mv_strict_bound(rep.spun_cobordism, rep.spun_end, rep.spun_fill_minus, i);
  } catch (const InvalidInput& e) {
    throw CertificationFailure("spun_mayer_vietoris", e.what());
  }

  rep.classical_minus = classical_invariants_of_spun(rep.minus.tb, rep.minus.r, spins);
  rep.classical_plus = classical_invariants_of_spun(rep.plus.tb, rep.plus.r, spins);
  rep.coincide = classical_invariants_coincide(rep.classical_minus, rep.classical_plus);
  const bool odd = std::any_of(spins.begin(), spins.end(), [](int m) { return m % 2 == 1; });
  if (odd && !rep.coincide) {
    throw CertificationFailure("classical_invariants", "an odd sphere is present but the classical invariants differ");
  }

  rep.distinguished = rep.cobordism.profile[i] > rep.end_profile[i] && rep.mv_bound > rep.fill_minus_profile[i] &&
                      rep.spun_cobordism[i] > rep.spun_end[i] && rep.spun_bound > rep.spun_fill_minus[i];
  if (!rep.distinguished) throw CertificationFailure("verdict", "strict inequality failed");

  if (opt.run_symbolic) {
    rep.symbolic = run_symbolic_suite(opt.symbolic);
    rep.symbolic->require_pass();
  }
  return rep;
}

inline nlohmann::ordered_json knot_summary_to_json(const KnotSummary& s) {
  nlohmann::ordered_json j;
  j["k"] = s.k;
  j["name"] = "T_" + std::to_string(2 * s.k + 1);
  j["chords"] = s.chords;
  j["tb"] = s.tb;
  j["r"] = s.r;
  j["augmentations"] = s.augmentations.size();
  j["formal_betti_sums"] = s.betti_sums;
  auto profiles = nlohmann::ordered_json::array();
  for (const auto& p : s.seidel) profiles.push_back(profile_to_json(p));
  j["seidel_profiles"] = std::move(profiles);
  j["max_h1"] = s.max_h1;
  return j;
}

inline nlohmann::ordered_json spun_classical_to_json(const SpunClassical& c) {
  return {{"tb", c.tb}, {"r", c.r}, {"topological_type", c.topological_type}};
}

inline nlohmann::ordered_json pair_report_to_json(const PairReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["j"] = r.j;
  j["k"] = r.k;
  j["spins"] = r.spins;
  j["degree"] = r.degree;
  j["negative_end"] = knot_summary_to_json(r.minus);
  j["positive_end"] = knot_summary_to_json(r.plus);
  j["cobordism"] = cobordism_to_json(r.cobordism);
  j["comparison"] =
      "filling bound from gluing vs maximum H_1 over augmentation-derived filling profiles of the negative end";
  j["base"] = {{"cobordism_h1", r.cobordism.profile[r.degree]},
               {"end_h1", r.end_profile[r.degree]},
               {"fill_minus_max_h1", r.fill_minus_profile[r.degree]},
               {"mv_bound", r.mv_bound}};
  j["spun"] = {{"cobordism", profile_to_json(r.spun_cobordism)},
               {"end", profile_to_json(r.spun_end)},
               {"fill_minus", profile_to_json(r.spun_fill_minus)},
               {"l", sphere_count(r.spins, r.degree)},
               {"mv_bound", r.spun_bound}};
  j["classical"] = {{"negative", spun_classical_to_json(r.classical_minus)},
                    {"positive", spun_classical_to_json(r.classical_plus)},
                    {"coincide", r.coincide}};
  j["verdict"] = r.verdict();
  if (r.symbolic) j["symbolic"] = symbolic_report_to_json(*r.symbolic);
  return j;
}

}  // namespace spinup
