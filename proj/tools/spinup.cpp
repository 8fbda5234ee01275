// spinup: command-line front end for the spinning toolkit.

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinup/spinup.hpp"

namespace {

using namespace spinup;
using ojson = nlohmann::ordered_json;

constexpr int kExitCertification = 1;
constexpr int kExitInput = 2;
constexpr int kMaxSpinSum = 8;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InvalidInput("'" + item + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

void write_json(const std::string& path, const ojson& j) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string format_spins(const std::vector<int>& spins) {
  std::string s = "[";
  for (std::size_t i = 0; i < spins.size(); ++i) s += (i ? "," : "") + std::to_string(spins[i]);
  return s + "]";
}

struct KnotSource {
  int k = 0;
  std::string front_file;
  std::string diagram_file;
  std::string param_file;

  void attach(CLI::App* app) {
    app->add_option("--k", k, "member T_{2k+1} of the torus family");
    app->add_option("--front", front_file, "front file (left/cross/right events)");
    app->add_option("--diagram", diagram_file, "Lagrangian diagram file (signed Gauss code)");
    app->add_option("--param", param_file, "parametrized Legendrian knot in R^3");
  }

  int given() const {
    return (k != 0) + !front_file.empty() + !diagram_file.empty() + !param_file.empty();
  }

  /// The diagram plus front-derived gradings when a front is available.
  std::pair<LagrangianDiagram, std::optional<ResolvedFront>> load() const {
    if (given() != 1) throw InvalidInput("give exactly one of --k, --front, --diagram, --param");
    if (k != 0) {
      auto t = torus_knot_family(k);
      return {t.resolved.diagram, t.resolved};
    }
    if (!front_file.empty()) {
      auto r = resolve_front(load_front(front_file));
      return {r.diagram, r};
    }
    if (!diagram_file.empty()) return {load_diagram(diagram_file), std::nullopt};
    return {extract_diagram(load_param_map(param_file)), std::nullopt};
  }
};

int cmd_pair(int j, int k, const std::string& spins_text, const std::string& json_path, bool symbolic,
             std::optional<double> tol) {
  const auto spins = parse_int_list(spins_text);
  const int sum = std::accumulate(spins.begin(), spins.end(), 0);
  if (sum > kMaxSpinSum) throw InvalidInput("spin vector sums to " + std::to_string(sum) + "; the CLI caps it at 8");
  PipelineOptions opt;
  opt.run_symbolic = symbolic;
  opt.symbolic.tolerance = tol ? *tol : residual_tolerance();
  const PairReport r = run_theorem_pipeline(j, k, spins, opt);
  std::cout << "pair T_" << 2 * j + 1 << " -> T_" << 2 * k + 1 << " spins " << format_spins(spins) << "\n"
            << "  cobordism genus " << r.cobordism.genus << ", profile " << r.cobordism.profile.to_string() << "\n"
            << "  degree 1: dim H_1(L) = " << r.cobordism.profile[1] << " > " << r.end_profile[1]
            << " = dim H_1(negative end)\n"
            << "  glued filling bound " << r.mv_bound << " > " << r.fill_minus_profile[1]
            << " = max H_1 over augmentation profiles of T_" << 2 * j + 1 << "\n"
            << "  spun: L " << r.spun_cobordism.to_string() << ", end " << r.spun_end.to_string() << ", bound "
            << r.spun_bound << " > " << r.spun_fill_minus[1] << "\n"
            << "  spun tb " << r.classical_minus.tb << " vs " << r.classical_plus.tb << ", r " << r.classical_minus.r
            << " vs " << r.classical_plus.r << ", coincide=" << (r.coincide ? "true" : "false") << "\n"
            << "  verdict: " << r.verdict() << "\n";
  write_json(json_path, pair_report_to_json(r));
  return 0;
}

int cmd_verify_symbolic(std::size_t samples, bool inject, const std::string& json_path, std::optional<double> tol) {
  SymbolicSuiteOptions opt;
  opt.tolerance = tol ? *tol : residual_tolerance();
  opt.samples = samples;
  opt.inject_sign_bug = inject;
  const auto rep = run_symbolic_suite(opt);
  for (const auto& c : rep.checks) {
    std::cout << (c.passed ? "ok   " : "FAIL ") << c.stage << "  " << c.name << "  (R^" << c.ambient_dim << ", "
              << c.samples << " samples)  max " << c.max_residual << "  tol " << c.tolerance << "\n";
  }
  write_json(json_path, symbolic_report_to_json(rep));
  if (auto f = rep.first_failure()) {
    std::cerr << "failed at " << f->stage << ": " << f->name << "\n";
    return kExitCertification;
  }
  return 0;
}

int cmd_knot(const std::string& what, const KnotSource& src) {
  if (what == "family") {
    if (src.k < 1) throw InvalidInput("family needs --k >= 1");
    for (int k = 1; k <= src.k; ++k) {
      const auto t = torus_knot_family(k);
      std::cout << "T_" << 2 * k + 1 << ": " << t.resolved.diagram.crossing_count()
                << " chords, tb=" << thurston_bennequin(t.resolved.diagram)
                << ", r=" << rotation_number(t.resolved.diagram) << ", gradings";
      for (std::size_t c = 0; c < t.resolved.gradings.size(); ++c) {
        std::cout << " " << t.resolved.diagram.crossings()[c].name << ":" << t.resolved.gradings[c];
      }
      std::cout << "\n";
    }
    return 0;
  }
  const auto [diag, resolved] = src.load();
  if (what == "tb") std::cout << thurston_bennequin(diag) << "\n";
  else if (what == "rot") std::cout << rotation_number(diag) << "\n";
  else if (what == "diagram") std::cout << format_diagram(diag);
  else throw InvalidInput("unknown knot query '" + what + "'");
  return 0;
}

int cmd_dga(const KnotSource& src, const std::string& dga_in, const std::string& json_path, int max_mult) {
  FreeDGA dga;
  if (!dga_in.empty()) {
    if (src.given() != 0) throw InvalidInput("--dga-in excludes the other knot sources");
    dga = load_dga(dga_in);
  } else {
    const auto [diag, resolved] = src.load();
    DiskSearchOptions opt;
    opt.max_face_multiplicity = max_mult;
    dga = resolved ? build_dga(*resolved, opt) : build_dga(diag, opt);
  }
  std::cout << "generators:";
  for (const auto& g : dga.generators()) std::cout << " " << g.name << "(" << g.grading << ")";
  if (dga.grading_modulus()) std::cout << "  [gradings mod " << dga.grading_modulus() << "]";
  std::cout << "\n";
  for (std::size_t i = 0; i < dga.size(); ++i) {
    std::cout << "  d " << dga.generator(i).name << " = " << dga.format_differential(i) << "\n";
  }
  const auto augs = enumerate_augmentations(dga, true);
  std::cout << "graded augmentations: " << augs.size() << "\n";
  ojson j;
  j["dga"] = dga_to_json(dga);
  j["augmentations"] = ojson::array();
  for (const auto& eps : augs) {
    ojson a;
    a["values"] = augmentation_to_json(dga, eps);
    a["formal_betti_sum"] = betti_sum(dga, eps);
    a["linearized_cohomology"] = profile_to_json(cohomology_dims(linearized_complex(dga, eps)));
    std::cout << "  formal Betti sum " << a["formal_betti_sum"].get<int>() << ", LCH "
              << cohomology_dims(linearized_complex(dga, eps)).to_string();
    if (dga.grading_modulus() == 0) {
      const auto p = seidel_profile(dga, eps, 1);
      a["seidel_profile"] = profile_to_json(p);
      std::cout << ", Seidel profile " << p.to_string();
    }
    std::cout << "\n";
    j["augmentations"].push_back(std::move(a));
  }
  write_json(json_path, j);
  return 0;
}

int cmd_spin(int m, const std::string& iterate, const std::string& in, const std::string& out) {
  const ParamMap map = load_param_map(in);
  std::vector<int> spins = iterate.empty() ? std::vector<int>{m} : parse_int_list(iterate);
  const ParamMap spun = iterated_spin(map, spins);
  const std::string text = format_param_map(spun);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw InvalidInput("cannot write " + out);
    f << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Front spinning of Legendrians, Chekanov-Eliashberg DGAs and the torus-knot pipeline"};
  app.require_subcommand(1);

  int j = 1, k = 2;
  std::string spins = "1", json_path;
  bool symbolic = false;
  std::optional<double> tol;
  auto positive = CLI::PositiveNumber;
  auto* pair = app.add_subcommand("pair", "certify that spun T_{2j+1}, T_{2k+1} are distinguished");
  pair->add_option("--j", j, "negative end T_{2j+1}")->required();
  pair->add_option("--k", k, "positive end T_{2k+1}")->required();
  pair->add_option("--spins", spins, "comma-separated sphere dimensions");
  pair->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
  pair->add_flag("--symbolic", symbolic, "also run the symbolic residual suite");
  pair->add_option("--tol", tol, "residual tolerance (overrides SPINUP_TOL)")->check(positive);

  std::size_t samples = 10000;
  bool inject = false;
  auto* vs = app.add_subcommand("verify-symbolic", "residual checks of the spinning construction");
  vs->add_option("--samples", samples, "samples per check");
  vs->add_flag("--inject-sign-bug", inject, "negate y on the unknot first");
  vs->add_option("--json", json_path, "write the JSON report here");
  vs->add_option("--tol", tol, "residual tolerance (overrides SPINUP_TOL)")->check(positive);

  std::string knot_what;
  KnotSource knot_src;
  auto* knot = app.add_subcommand("knot", "classical invariants of a Legendrian knot");
  knot->add_option("what", knot_what, "tb | rot | family | diagram")->required();
  knot_src.attach(knot);

  KnotSource dga_src;
  std::string dga_in;
  int max_mult = 1;
  auto* dga = app.add_subcommand("dga", "Chekanov-Eliashberg DGA, augmentations and linearized homology");
  dga_src.attach(dga);
  dga->add_option("--dga-in", dga_in, "read a DGA from JSON instead of a diagram");
  dga->add_option("--max-mult", max_mult, "largest face multiplicity of a disk");
  dga->add_option("--json", json_path, "write DGA and augmentation data here");

  int m = 1;
  std::string iterate, in_path, out_path;
  auto* sp = app.add_subcommand("spin", "front S^m-spin a parametrized map file");
  sp->add_option("--m", m, "sphere dimension");
  sp->add_option("--iterate", iterate, "comma-separated sphere dimensions, applied in order");
  sp->add_option("--in", in_path, "input map file")->required();
  sp->add_option("--out", out_path, "output map file (default stdout)");

  auto* calc = app.add_subcommand("calc", "closed-form invariant arithmetic");
  calc->require_subcommand(1);
  int tb = 0, tb_minus = 0, chi = 0, n = 1;
  std::string base;
  auto* c_tb = calc->add_subcommand("spun-tb", "tb after S^m-spinning");
  c_tb->add_option("--tb", tb)->required();
  c_tb->add_option("--m", m)->required();
  auto* c_genus = calc->add_subcommand("genus", "genus of an exact cobordism between knots");
  c_genus->add_option("--tb-plus", tb)->required();
  c_genus->add_option("--tb-minus", tb_minus)->required();
  auto* c_prof = calc->add_subcommand("profile", "homology profile after spinning");
  c_prof->add_option("--base", base, "e.g. 0:1,1:3")->required();
  c_prof->add_option("--spins", spins)->required();
  auto* c_fill = calc->add_subcommand("tb-from-filling", "tb of a Legendrian from the Euler characteristic of a filling");
  c_fill->add_option("--chi", chi)->required();
  c_fill->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*pair) return cmd_pair(j, k, spins, json_path, symbolic, tol);
    if (*vs) return cmd_verify_symbolic(samples, inject, json_path, tol);
    if (*knot) return cmd_knot(knot_what, knot_src);
    if (*dga) return cmd_dga(dga_src, dga_in, json_path, max_mult);
    if (*sp) return cmd_spin(m, iterate, in_path, out_path);
    if (*c_tb) std::cout << spun_tb(tb, m) << "\n";
    if (*c_genus) {
      const auto rec = chantraine_genus(tb, tb_minus);
      std::cout << "genus " << rec.genus << ", chi " << rec.chi << ", profile " << rec.profile.to_string() << "\n";
    }
    if (*c_prof) std::cout << spun_profile(parse_profile(base), parse_int_list(spins)).to_string() << "\n";
    if (*c_fill) std::cout << tb_from_filling(chi, n) << "\n";
    return 0;
  } catch (const CertificationFailure& e) {
    std::cerr << "certification failed at " << e.stage() << ": " << e.what() << "\n";
    return kExitCertification;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency check failed: " << e.what() << "\n";
    return kExitCertification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
