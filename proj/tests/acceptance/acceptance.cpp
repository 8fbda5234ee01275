// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "spinup/spinup.hpp"

using namespace spinup;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Recorder {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

int reference_spun_tb(int tb, int m) {
  if (m % 2 == 1) return 0;
  return (m / 2) % 2 == 0 ? 2 * tb : -2 * tb;
}

Outcome c1_classical_invariants() {
  Recorder r;
  for (int k = 1; k <= 6; ++k) {
    const auto t = torus_knot_family(k);
    const int tb = thurston_bennequin(t.resolved.diagram);
    const int rot = rotation_number(t.resolved.diagram);
    r.expect(tb == 2 * k - 1, "tb(T_" + std::to_string(2 * k + 1) + ") = " + std::to_string(tb));
    r.expect(rot == 0, "r(T_" + std::to_string(2 * k + 1) + ") = " + std::to_string(rot));
    r.expect(rotation_number(t.front) == 0, "front rotation of T_" + std::to_string(2 * k + 1));
  }
  return r.result();
}

Outcome c2_dga_axioms() {
  Recorder r;
  auto check = [&](const std::string& name, const FreeDGA& dga) {
    r.expect(!check_grading_drop(dga).has_value(), name + ": d does not lower grading by 1");
    r.expect(check_d_squared(dga).ok, name + ": d^2 != 0");
  };
  check("unknot", build_dga(resolve_front(flying_saucer_front())));
  for (int k = 1; k <= 6; ++k) check("T_" + std::to_string(2 * k + 1), build_dga(torus_knot_family(k).resolved));
  return r.result();
}

Outcome c3_unknot_chain() {
  Recorder r;
  const FreeDGA dga = build_dga(resolve_front(flying_saucer_front()));
  r.expect(dga.size() == 1, "chord count " + std::to_string(dga.size()));
  r.expect(dga.size() == 1 && dga.differential(0).empty(), "d != 0");
  const auto augs = enumerate_augmentations(dga, true);
  r.expect(augs.size() == 1, "augmentation count " + std::to_string(augs.size()));
  for (const auto& eps : augs) {
    const auto lch = cohomology_dims(linearized_complex(dga, eps));
    r.expect(lch == HomologyProfile{{1, 1}}, "linearized cohomology " + lch.to_string());
    r.expect(betti_sum(dga, eps) == 1, "Betti sum");
    const auto p = seidel_profile(dga, eps, 1);
    r.expect(p == HomologyProfile{{0, 1}, {1, 0}} && p[1] == 0, "Seidel profile " + p.to_string());
  }
  return r.result();
}

Outcome c4_trefoil_chain() {
  Recorder r;
  const FreeDGA dga = build_dga(torus_knot_family(1).resolved);
  r.expect(dga.size() == 5, "chord count " + std::to_string(dga.size()));
  std::size_t brute = 0;
  for (unsigned mask = 0; mask < 32; ++mask) {
    Augmentation eps{std::vector<std::uint8_t>(5, 0)};
    for (unsigned b = 0; b < 5; ++b) eps.values[b] = (mask >> b) & 1U;
    if (is_augmentation(dga, eps, true)) ++brute;
  }
  const auto augs = enumerate_augmentations(dga, true);
  r.expect(brute == 5, "brute-force augmentation count " + std::to_string(brute));
  r.expect(augs.size() == brute, "enumerator disagrees with brute force");
  for (const auto& eps : augs) {
    r.expect(betti_sum(dga, eps) == 3, "Betti sum " + std::to_string(betti_sum(dga, eps)));
    const auto p = seidel_profile(dga, eps, 1);
    r.expect(p == HomologyProfile{{0, 1}, {1, 2}}, "Seidel profile " + p.to_string());
  }
  return r.result();
}

Outcome c5_betti_filling() {
  Recorder r;
  for (int k = 1; k <= 4; ++k) {
    const auto t = torus_knot_family(k);
    const FreeDGA dga = build_dga(t.resolved);
    const int chi = filling_chi_from_tb(thurston_bennequin(t.resolved.diagram), 1);
    const int genus = (1 - chi) / 2;
    r.expect(tb_from_filling(chi, 1) == 2 * k - 1, "filling formula round trip");
    for (const auto& eps : enumerate_augmentations(dga, true)) {
      const int b = betti_sum(dga, eps);
      r.expect(b == 2 * k + 1 && b == 1 + 2 * genus,
               "T_" + std::to_string(2 * k + 1) + " Betti sum " + std::to_string(b));
    }
  }
  return r.result();
}

Outcome c6_spun_tb() {
  Recorder r;
  for (int tb = -10; tb <= 10; ++tb) {
    for (int m = 1; m <= 6; ++m) {
      const int direct = spun_tb(tb, m);
      const int composed = tb_from_filling(product_chi(filling_chi_from_tb(tb, 1), m), 1 + m);
      r.expect(direct == reference_spun_tb(tb, m), "spun_tb(" + std::to_string(tb) + "," + std::to_string(m) + ")");
      r.expect(direct == composed, "composition mismatch at tb=" + std::to_string(tb) + ", m=" + std::to_string(m));
    }
  }
  return r.result();
}

Outcome c7_chantraine() {
  Recorder r;
  for (int k = 2; k <= 6; ++k) {
    for (int j = 1; j < k; ++j) {
      const auto c = chantraine_genus(2 * k - 1, 2 * j - 1);
      r.expect(c.genus == k - j && c.chi == -2 * (k - j) && c.profile[1] == 2 * (k - j) + 1,
               "pair (" + std::to_string(j) + "," + std::to_string(k) + ")");
    }
  }
  return r.result();
}

Outcome c8_mayer_vietoris() {
  Recorder r;
  std::vector<KnotSummary> knots;
  for (int k = 1; k <= 5; ++k) knots.push_back(analyze_torus_knot(k));
  for (int k = 2; k <= 5; ++k) {
    for (int j = 1; j < k; ++j) {
      const auto& minus = knots[static_cast<std::size_t>(j - 1)];
      const auto& plus = knots[static_cast<std::size_t>(k - 1)];
      const HomologyProfile fill{{0, 1}, {1, minus.max_h1}};
      const auto cob = chantraine_genus(plus.tb, minus.tb);
      const int bound = mv_strict_bound(cob.profile, HomologyProfile{{0, 1}, {1, 1}}, fill, 1);
      const std::string tag = "(" + std::to_string(j) + "," + std::to_string(k) + ")";
      r.expect(bound > fill[1], tag + " bound not strict");
      r.expect(bound == 2 * k, tag + " bound " + std::to_string(bound) + " != 2k");
      // Criterion 5 cross-check: the genus-k filling has H_1 = Betti sum - 1.
      r.expect(bound == plus.betti_sums.front() - 1 && bound == plus.max_h1, tag + " disagrees with T_{2k+1}");
    }
  }
  return r.result();
}

Outcome c9_kunneth_strictness() {
  Recorder r;
  const auto cob = chantraine_genus(3, 1);
  const HomologyProfile end{{0, 1}, {1, 1}};
  for (const auto& spins : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {3}}) {
    const auto L = spun_profile(cob.profile, spins);
    const auto E = spun_profile(end, spins);
    const int l = sphere_count(spins, 1);
    r.expect(L[1] == cob.profile[1] + l && E[1] == end[1] + l, "l-increment");
    r.expect(L[1] > E[1], "strictness lost for spins of size " + std::to_string(spins.size()));
  }
  return r.result();
}

Outcome c10_symbolic() {
  Recorder r;
  const auto rep = run_symbolic_suite({});
  std::size_t contact = 0, exact_spun = 0, slice = 0;
  for (const auto& c : rep.checks) {
    if (c.stage == "contact_pullback_residual") {
      ++contact;
      r.expect(c.samples == 10000 && c.max_residual < 1e-9, c.name + " contact residual");
    } else if (c.stage == "exactness_residual") {
      if (c.name.find("spun") != std::string::npos) ++exact_spun;
      r.expect(c.max_residual < 1e-9, c.name + " exactness residual");
    } else if (c.stage == "slice_property") {
      ++slice;
      r.expect(c.max_residual < 1e-12, c.name + " slice residual");
    }
  }
  r.expect(contact == 4, "expected 4 contact checks");
  r.expect(exact_spun >= 2, "expected spun cylinder exactness checks");
  r.expect(slice >= 1, "expected slice checks");
  r.expect(rep.passed(), "suite reports a failure");
  return r.result();
}

Outcome c11_pipeline(const std::string& cli) {
  Recorder r;
  for (int k = 2; k <= 5; ++k) {
    for (int j = 1; j < k; ++j) {
      const std::string tag = "(" + std::to_string(j) + "," + std::to_string(k) + ")";
      const auto odd = run_theorem_pipeline(j, k, {1});
      r.expect(odd.distinguished && odd.coincide, tag + " spins [1]");
      const auto even = run_theorem_pipeline(j, k, {2});
      r.expect(even.distinguished && !even.coincide, tag + " spins [2]");
      for (const char* s : {"1", "2"}) {
        const std::string cmd =
            cli + " pair --j " + std::to_string(j) + " --k " + std::to_string(k) + " --spins " + s + " > /dev/null";
        r.expect(std::system(cmd.c_str()) == 0, tag + " CLI exit code for spins " + s);
      }
    }
  }
  return r.result();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"C1 classical invariants of T_{2k+1}, k=1..6", c1_classical_invariants},
      {"C2 DGA axioms (grading drop, d^2=0)", c2_dga_axioms},
      {"C3 unknot oracle chain", c3_unknot_chain},
      {"C4 trefoil oracle chain", c4_trefoil_chain},
      {"C5 Betti sum vs filling genus, k<=4", c5_betti_filling},
      {"C6 spun tb grid and composition", c6_spun_tb},
      {"C7 cobordism genus arithmetic", c7_chantraine},
      {"C8 Mayer-Vietoris strict bound", c8_mayer_vietoris},
      {"C9 strictness after spinning", c9_kunneth_strictness},
      {"C10 symbolic residuals", c10_symbolic},
      {"C11 pipeline verdicts and exit codes", [] { return c11_pipeline(SPINUP_CLI_PATH); }},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << "  (" << static_cast<long>(ms) << " ms)";
    if (!o.ok) std::cout << "  -- " << o.detail;
    std::cout << std::endl;
    failures += o.ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
