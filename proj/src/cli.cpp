#include "rcl/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rcl/json_io.hpp"
#include "rcl/param_map.hpp"
#include "rcl/version.hpp"

namespace rcl {
namespace {

struct Globals {
  int degree = kDefaultDegree;
  double tol = 1e-9;
  int samples = kDefaultBoundarySamples;
  std::uint64_t seed = 0;

  // Checks one level up the construction (second coupling, majorants,
  // round trips) run at a looser tolerance than the direct ones.
  double coupling_tol() const { return 10.0 * tol; }
};

Json new_report(const std::string& command) {
  Json rep;
  rep["tool"] = kToolName;
  rep["version"] = kToolVersion;
  rep["command"] = command;
  return rep;
}

void emit(const Json& rep, std::ostream& out) { out << rep.dump(2) << "\n"; }

DataSet load_dataset(const std::string& path) { return dataset_from_json(load_json_file(path)); }
TaylorFn load_taylor(const std::string& path) { return taylor_from_json(load_json_file(path)); }
GammaOp load_gamma(const std::string& path) { return gamma_from_json(load_json_file(path)); }

Json validation_json(const ValidationReport& r) {
  Json j;
  j["intertwining_residual"] = r.intertwining_residual;
  j["equality_margin"] = r.equality_margin;
  j["a_margin"] = r.a_margin;
  j["tprime_margin"] = r.tprime_margin;
  j["pass"] = r.pass;
  return j;
}

Json omega_json(const OmegaData& od) {
  Json j;
  j["t"] = od.t();
  j["a"] = od.a();
  j["f"] = od.f();
  j["g"] = od.g();
  j["defect_rank"] = od.s();
  j["isometric"] = od.isometric;
  return j;
}

Json big_omega_json(const BigOmegaData& bo) {
  Json j;
  j["dgamma_rank"] = bo.dg();
  j["f_gamma"] = bo.fg();
  j["g_gamma"] = bo.gg();
  j["defect_rank"] = bo.sg();
  j["isometric"] = bo.isometric;
  j["intertwine_residual"] = bo.intertwine_residual;
  return j;
}

Json solution_json(const SolutionReport& r) {
  Json j;
  j["margin"] = r.margin;
  j["residuals"] = r.residuals;
  j["max_residual"] = r.max_residual;
  j["pass"] = r.pass;
  return j;
}

Json cert_json(const SchurCertificate& c, double tol) {
  Json j;
  j["section_margin"] = c.section_margin;
  j["boundary_margin"] = c.boundary_margin;
  j["pass"] = c.pass(tol);
  return j;
}

Json pair_report_json(const PairReport& r, double tol) {
  Json j;
  j["schur"] = cert_json(r.cert, tol);
  j["restriction_residual"] = r.restriction_residual;
  j["sampled_residual"] = r.sampled_residual;
  j["pass"] = r.pass;
  return j;
}

Json s_omega_json(const SOmegaReport& r, double tol) {
  Json j;
  j["schur"] = cert_json(r.cert, tol);
  j["restriction_residual"] = r.restriction_residual;
  j["pass"] = r.pass;
  return j;
}

int finish(Json& rep, bool pass, std::ostream& out) {
  rep["pass"] = pass;
  emit(rep, out);
  return pass ? 0 : 1;
}

int cmd_gen(const Globals& g, Dims dims, Preset preset, const std::string& preset_name,
            const std::string& out_path, std::ostream& out) {
  const DataSet ds = random_dataset(g.seed, dims, preset);
  const ValidationReport vr = validate(ds, 1e-10);
  Json rep = new_report("gen");
  rep["seed"] = g.seed;
  rep["preset"] = preset_name;
  rep["dims"] = Json{{"h0", dims.h0}, {"h", dims.h}, {"hprime", dims.hprime}};
  rep["validation"] = validation_json(vr);
  const Json dsj = dataset_to_json(ds);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw Error("gen: cannot open " + out_path + " for writing");
    f << dsj.dump(2) << "\n";
    rep["file"] = out_path;
  } else {
    rep["dataset"] = dsj;
  }
  return finish(rep, vr.pass, out);
}

int cmd_validate(const Globals& g, const std::string& input, std::ostream& out) {
  const ValidationReport vr = validate(load_dataset(input), g.tol);
  Json rep = new_report("validate");
  rep["input"] = input;
  rep.update(validation_json(vr));
  emit(rep, out);
  return vr.pass ? 0 : 1;
}

int cmd_omega(const std::string& input, std::ostream& out) {
  const OmegaData od = build_omega(load_dataset(input));
  Json rep = new_report("omega");
  rep["input"] = input;
  rep.update(omega_json(od));
  return finish(rep, true, out);
}

int cmd_solve(const Globals& g, const std::string& input, const std::string& h_path,
              std::ostream& out) {
  const DataSet ds = load_dataset(input);
  const OmegaData od = build_omega(ds);
  const TaylorFn h = h_path.empty() ? TaylorFn::zero(od.s(), od.g()) : load_taylor(h_path);
  const SchurPair p = pair_from_parameter(od, h, g.degree, g.tol);
  const GammaOp gam = gamma_from_pair(p, g.degree);
  const SolutionReport sr = verify_solution(ds, gam, g.tol);
  Json rep = new_report("solve");
  rep["input"] = input;
  rep["omega"] = omega_json(od);
  rep["pair"] = pair_to_json(p);
  rep["gamma"] = gamma_to_json(gam);
  rep["solution"] = solution_json(sr);
  return finish(rep, sr.pass, out);
}

int cmd_verify(const Globals& g, const std::string& input, const std::string& gamma_path,
               std::ostream& out) {
  const DataSet ds = load_dataset(input);
  const SolutionReport sr = verify_solution(ds, load_gamma(gamma_path), g.tol);
  Json rep = new_report("verify");
  rep["input"] = input;
  rep["gamma_file"] = gamma_path;
  rep["solution"] = solution_json(sr);
  return finish(rep, sr.pass, out);
}

int cmd_unique(const Globals& g, const std::string& input, std::ostream& out) {
  const Uniqueness u = uniqueness_check(load_dataset(input), g.tol);
  Json rep = new_report("unique");
  rep["input"] = input;
  rep["verdict"] = u == Uniqueness::unique        ? "unique"
                   : u == Uniqueness::non_unique  ? "non_unique"
                                                  : "not_applicable";
  return finish(rep, true, out);
}

// Shared by jmap and roundtrip: parameter selection, the pair attached to
// Gamma, verification against omega, and the symbol round trip.
struct JmapResult {
  TaylorFn c;
  SOmegaReport so;
  double bias = 0.0;
  SchurPair pair;
  PairReport pair_check;
  int compare_degree = 0;
  double theta_residual = 0.0;
};

JmapResult run_jmap(const Globals& g, const OmegaData& od, const GammaOp& gam,
                    const BigOmegaData& bo, const std::string& c_path,
                    const std::string& c1_path) {
  JmapResult r;
  if (!c_path.empty())
    r.c = load_taylor(c_path);
  else if (!c1_path.empty()) {
    const TaylorFn c1 = load_taylor(c1_path);
    r.c = parameter_to_constrained(bo, c1, c1.degree(), g.coupling_tol());
  } else
    r.c = canonical_parameter(bo);
  r.so = s_omega_margin(r.c, bo, g.coupling_tol());
  r.pair = j_gamma(gam, r.c, g.degree, &bo, kRankTol, &r.bias);
  r.pair.omega = od;
  r.pair_check = verify_pair(r.pair, g.degree + 1, g.samples, g.coupling_tol());
  const GammaOp back = gamma_from_pair(r.pair, g.degree);
  r.compare_degree = std::max(0, g.degree - 4);
  r.theta_residual = max_coeff_dist(gam.theta, back.theta, r.compare_degree);
  return r;
}

void jmap_report(Json& rep, const Globals& g, const BigOmegaData& bo, const JmapResult& r) {
  rep["big_omega"] = big_omega_json(bo);
  rep["c_degree"] = r.c.degree();
  rep["s_omega"] = s_omega_json(r.so, g.coupling_tol());
  rep["bias_deviation"] = r.bias;
  rep["pair"] = pair_to_json(r.pair);
  rep["pair_check"] = pair_report_json(r.pair_check, g.coupling_tol());
  rep["compare_degree"] = r.compare_degree;
  rep["theta_residual"] = r.theta_residual;
}

int cmd_jmap(const Globals& g, const std::string& input, const std::string& gamma_path,
             const std::string& c_path, const std::string& c1_path, std::ostream& out) {
  const DataSet ds = load_dataset(input);
  const GammaOp gam = load_gamma(gamma_path);
  const OmegaData od = build_omega(ds);
  const BigOmegaData bo = build_big_omega(ds, gam, kRankTol, g.coupling_tol());
  const JmapResult r = run_jmap(g, od, gam, bo, c_path, c1_path);
  Json rep = new_report("jmap");
  rep["input"] = input;
  rep["gamma_file"] = gamma_path;
  jmap_report(rep, g, bo, r);
  const bool pass = r.so.pass && r.pair_check.pass && r.theta_residual <= g.coupling_tol();
  return finish(rep, pass, out);
}

int cmd_majorant(const Globals& g, const std::string& gamma_path, const std::string& c_path,
                 std::ostream& out) {
  const GammaOp gam = load_gamma(gamma_path);
  const SubspaceBasis dgb = orthonormal_range(gamma_defect(gam), kRankTol);
  const TaylorFn c = c_path.empty() ? TaylorFn::zero(dgb.dim(), dgb.dim()) : load_taylor(c_path);
  const double ctol = g.coupling_tol();
  const TaylorFn v = v_from_theta(gam.theta, g.degree);
  const TaylorFn w = w_from_contraction_parameter(gam, c, g.degree, kRankTol, ctol);
  const double gap_v = majorant_gap(gam.theta, v, g.samples);
  const double gap_w = majorant_gap(gam.theta, w, g.samples);
  const double pr_v = positive_real_margin(v, g.degree + 1);
  const double pr_w = positive_real_margin(w, g.degree + 1);
  const double pr_delta = positive_real_margin(sub(w, v), g.degree + 1);
  const TaylorFn k = factor_delta(gam, w, kRankTol, ctol);
  const double k_residual = max_coeff_dist(k, cayley(c, g.degree), g.degree);

  Json rep = new_report("majorant");
  rep["gamma_file"] = gamma_path;
  rep["dgamma_rank"] = dgb.dim();
  rep["c_degree"] = c.degree();
  rep["v"] = taylor_to_json(v);
  rep["w"] = taylor_to_json(w);
  rep["gap_v"] = gap_v;
  rep["gap_w"] = gap_w;
  rep["positive_real_margin_v"] = pr_v;
  rep["positive_real_margin_w"] = pr_w;
  rep["positive_real_margin_delta"] = pr_delta;
  rep["factor_residual"] = k_residual;
  const bool pass = gap_v >= -ctol && gap_w >= -ctol && pr_v >= -ctol && pr_w >= -ctol &&
                    pr_delta >= -ctol && k_residual <= ctol;
  return finish(rep, pass, out);
}

int cmd_roundtrip(const Globals& g, const std::string& input, const std::string& h_path,
                  const std::string& c1_path, std::ostream& out) {
  const DataSet ds = load_dataset(input);
  const OmegaData od = build_omega(ds);
  const TaylorFn h = h_path.empty() ? TaylorFn::zero(od.s(), od.g()) : load_taylor(h_path);
  const SchurPair p = pair_from_parameter(od, h, g.degree, g.tol);
  const GammaOp gam = gamma_from_pair(p, g.degree);
  const SolutionReport sr = verify_solution(ds, gam, g.tol);
  const BigOmegaData bo = build_big_omega(ds, gam, kRankTol, g.coupling_tol());
  const JmapResult r = run_jmap(g, od, gam, bo, "", c1_path);

  Json rep = new_report("roundtrip");
  rep["input"] = input;
  rep["h_degree"] = h.degree();
  rep["omega"] = omega_json(od);
  rep["solution"] = solution_json(sr);
  jmap_report(rep, g, bo, r);
  const bool pass =
      sr.pass && r.so.pass && r.pair_check.pass && r.theta_residual <= g.coupling_tol();
  return finish(rep, pass, out);
}

// Failed verification gets a report plus exit 1; everything else about the
// input was malformed and exits 2.
int fail_code(const Error& e) {
  const bool verification =
      dynamic_cast<const ValidationFailed*>(&e) != nullptr ||
      dynamic_cast<const SolutionInvalid*>(&e) != nullptr ||
      dynamic_cast<const ParameterNotSchur*>(&e) != nullptr ||
      dynamic_cast<const ParameterNotInSOmega*>(&e) != nullptr ||
      dynamic_cast<const ResidualTooLarge*>(&e) != nullptr ||
      dynamic_cast<const NotPositiveReal*>(&e) != nullptr ||
      dynamic_cast<const IndefiniteMatrix*>(&e) != nullptr;
  return verification ? 1 : 2;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"relaxed commutant lifting toolkit"};
  app.fallthrough(true);
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

  Globals g;
  app.add_option("--degree", g.degree, "Taylor truncation degree")
      ->capture_default_str()
      ->check(CLI::Range(0, 4096));
  app.add_option("--tol", g.tol, "base tolerance; coupling-level checks use 10x")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--samples", g.samples, "boundary samples per circle")
      ->capture_default_str()
      ->check(CLI::Range(8, 1 << 16));
  app.add_option("--seed", g.seed, "generator seed")->capture_default_str();

  std::string input, gamma_path, h_path, c_path, c1_path, out_path;
  Dims dims;
  std::string preset_name = "generic";
  const std::vector<std::string> preset_keys{"generic", "exact_equality", "treil_volberg",
                                             "classical"};
  auto preset_of = [](const std::string& name) {
    if (name == "exact_equality") return Preset::exact_equality;
    if (name == "treil_volberg") return Preset::treil_volberg;
    if (name == "classical") return Preset::classical;
    return Preset::generic;
  };

  int code = 0;
  std::string active = "rcl";

  auto* gen = app.add_subcommand("gen", "draw a seeded random data set");
  gen->add_option("--preset", preset_name, "instance family")
      ->capture_default_str()
      ->check(CLI::IsMember(preset_keys));
  std::vector<int> dim_list;
  gen->add_option("--dims", dim_list, "dims of H0, H, H' (default 1 2 1)")
      ->expected(3)
      ->check(CLI::Range(1, 64));
  gen->add_option("-o,--out", out_path, "write the data set here instead of inlining it");
  gen->callback([&] {
    active = "gen";
    if (dim_list.size() == 3) dims = Dims{dim_list[0], dim_list[1], dim_list[2]};
    code = cmd_gen(g, dims, preset_of(preset_name), preset_name, out_path, out);
  });

  auto* validate_cmd = app.add_subcommand("validate", "check the data set constraints");
  validate_cmd->add_option("input", input, "data set JSON file")->required();
  validate_cmd->callback([&] {
    active = "validate";
    code = cmd_validate(g, input, out);
  });

  auto* omega_cmd = app.add_subcommand("omega", "coupling contraction summary");
  omega_cmd->add_option("input", input, "data set JSON file")->required();
  omega_cmd->callback([&] {
    active = "omega";
    code = cmd_omega(input, out);
  });

  auto* solve = app.add_subcommand("solve", "solution from a Schur parameter (default 0)");
  solve->add_option("input", input, "data set JSON file")->required();
  solve->add_option("--param", h_path, "Schur parameter file, defect coords x G coords");
  solve->callback([&] {
    active = "solve";
    code = cmd_solve(g, input, h_path, out);
  });

  auto* verify = app.add_subcommand("verify", "check a symbol against a data set");
  verify->add_option("input", input, "data set JSON file")->required();
  verify->add_option("--gamma", gamma_path, "symbol file {\"theta\": ...}")->required();
  verify->callback([&] {
    active = "verify";
    code = cmd_verify(g, input, gamma_path, out);
  });

  auto* jmap = app.add_subcommand("jmap", "Schur pair attached to a symbol and a parameter");
  jmap->add_option("input", input, "data set JSON file")->required();
  jmap->add_option("--gamma", gamma_path, "symbol file")->required();
  auto* c_opt = jmap->add_option("--c", c_path, "constrained parameter, Gamma-defect coords");
  auto* c1_opt = jmap->add_option("--c1", c1_path, "free parameter, G_Gamma -> Omega*-defect");
  c_opt->excludes(c1_opt);
  jmap->callback([&] {
    active = "jmap";
    code = cmd_jmap(g, input, gamma_path, c_path, c1_path, out);
  });

  auto* majorant = app.add_subcommand("majorant", "harmonic majorants of a symbol");
  majorant->add_option("--gamma", gamma_path, "symbol file")->required();
  majorant->add_option("--c", c_path, "Schur parameter on Gamma-defect coords (default 0)");
  majorant->callback([&] {
    active = "majorant";
    code = cmd_majorant(g, gamma_path, c_path, out);
  });

  auto* unique = app.add_subcommand("unique", "uniqueness verdict for isometric R and Q");
  unique->add_option("input", input, "data set JSON file")->required();
  unique->callback([&] {
    active = "unique";
    code = cmd_unique(g, input, out);
  });

  auto* roundtrip = app.add_subcommand("roundtrip", "parameter -> pair -> symbol -> pair cycle");
  roundtrip->add_option("input", input, "data set JSON file")->required();
  roundtrip->add_option("--param", h_path, "Schur parameter for the first leg (default 0)");
  roundtrip->add_option("--c1", c1_path, "free parameter for the return leg (default canonical)");
  roundtrip->callback([&] {
    active = "roundtrip";
    code = cmd_roundtrip(g, input, h_path, c1_path, out);
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("rcl");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const CLI::App* scope = &app;
    while (!scope->get_subcommands().empty()) scope = scope->get_subcommands().front();
    out << scope->help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolName << " " << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (fail_code(e) == 1) {
      Json rep = new_report(active);
      rep["error"] = e.what();
      rep["pass"] = false;
      emit(rep, out);
      return 1;
    }
    err << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  return code;
}

}  // namespace rcl
