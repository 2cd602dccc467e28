#ifndef HEUNTRA_CLI_HPP
#define HEUNTRA_CLI_HPP

// Command-line front end. Exit codes: 0 success, 1 input or parse error,
// 2 infeasible parameters, 3 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "heuntra/io.hpp"
#include "heuntra/params.hpp"
#include "heuntra/polynomials.hpp"
#include "heuntra/solver.hpp"
#include "heuntra/tridiag.hpp"
#include "heuntra/verify.hpp"

namespace heuntra {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitConstraint = 2, kExitVerify = 3 };

struct RunConfig {
  std::string command;
  std::string params_file;
  std::string kase;
  long k = 0;
  std::optional<double> z;
  long N = 0;  // 0 selects the command default
  std::string grid = "100,0.05";
  std::string out;
  std::string format = "json";
  std::string solve_for;
  std::string residual_out;
  double perturb_g = 0.0;
  // eval
  std::string poly = "jacobi";
  double x = 0.5;
  double mu = 0.0, nu = 0.0;
  std::string wilson = "0,0,0,0";
  double z2 = 0.0;
};

namespace detail {

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw InputError("cannot write '" + cfg.out + "'");
  f << text;
}

inline ParamsDocument config_params(const RunConfig& cfg) {
  if (cfg.params_file.empty()) throw InputError("--params is required");
  ParamsDocument doc = load_params(cfg.params_file);
  if (!cfg.kase.empty()) {
    try {
      doc.kase = parse_case(cfg.kase);
    } catch (const Error& e) {
      throw InputError(e.what());
    }
  }
  if (!doc.kase) throw InputError("no solution case given (--case or \"case\" key)");
  return doc;
}

inline void require_format(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "csv") throw InputError("--format must be json or csv");
}

inline std::vector<double> parse_list(const std::string& s, std::size_t count) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw InputError("bad number '" + item + "' in list '" + s + "'");
    }
  }
  if (v.size() != count) throw InputError("expected " + std::to_string(count) + " comma-separated numbers");
  return v;
}

inline GridSpec config_grid(const RunConfig& cfg) {
  try {
    return parse_grid(cfg.grid);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

}  // namespace detail

inline int cmd_resolve(const RunConfig& cfg, std::ostream& out) {
  ParamsDocument doc = detail::config_params(cfg);
  HeunParams p = doc.params;
  ojson solved;
  if (cfg.solve_for == "E") {
    p.E = solve_for_E(p);
    solved["E"] = p.E;
  } else if (cfg.solve_for == "C") {
    p.C = solve_for_C(p, *doc.kase);
    solved["C"] = p.C;
  } else if (!cfg.solve_for.empty()) {
    throw InputError("--solve-for must be E or C");
  }
  const BasisParams bp = resolve(p, *doc.kase);
  ojson j = basis_json(p, bp);
  if (!solved.empty()) j["solved"] = solved;
  detail::emit(cfg, to_json_text(j), out);
  return kExitOk;
}

inline int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  detail::require_format(cfg);
  const ParamsDocument doc = detail::config_params(cfg);
  const long N = cfg.N > 0 ? cfg.N : 400;
  if (N < 8) throw InputError("--N must be at least 8 for a spectrum");
  SpectrumOptions opt;
  opt.sizes = {N / 4, N / 2, N};
  const HeunParams& p = doc.params;
  ojson family;
  ojson formula;
  TridiagonalSystem sys;
  switch (*doc.kase) {
    case SolutionCase::Special: {
      const BasisParams bp = resolve(p, SolutionCase::Special);
      sys = build_case_a_spectral(p, bp, static_cast<std::size_t>(N));
      family = ojson{{"family", sys.label == "case-a-Q" ? "Q" : "G"}, {"mu", bp.mu}, {"nu", bp.nu},
                     {"sigma_sq", quarter_abc_sq(p) - p.D}, {"z", special_z(p)}};
      break;
    }
    case SolutionCase::Generalized: {
      const BasisParams bp = resolve(p, SolutionCase::Generalized);
      sys = build_case_b(p, bp, static_cast<std::size_t>(N));
      const PairedWilsonParams pw = generalized_wilson_params(p, bp);
      family = ojson{{"family", "deformed Wilson"}, {"lambda", p.d},      {"sigma", pw.sigma},
                     {"tau_sq", pw.tau_sq},        {"gamma", pw.gamma}, {"z", generalized_z(p, bp)}};
      break;
    }
    case SolutionCase::RestrictedC:
    case SolutionCase::RestrictedD: {
      const HeunParams q = *doc.kase == SolutionCase::RestrictedC ? p : map_c_to_d(p);
      const BasisParams bp = resolve(q, SolutionCase::RestrictedC);
      const PairedWilsonParams pw = restricted_wilson_params(q, bp);
      const double tau = std::sqrt(pw.tau_sq);
      sys = wilson_system(WilsonParams::from_sigma_tau(pw.sigma, tau, pw.gamma), static_cast<std::size_t>(N));
      family = ojson{{"family", "Wilson"}, {"sigma", pw.sigma}, {"tau", tau}, {"gamma", pw.gamma}};
      try {
        const WilsonSpectrum ws = wilson_spectrum(pw.sigma, tau);
        formula["N"] = ws.N;
        formula["points"] = ws.points;
        ojson weights = ojson::array();
        for (long k = 0; k <= ws.N; ++k) {
          try {
            weights.push_back(wilson_discrete_weight(k, pw.sigma, tau, pw.gamma));
          } catch (const Error&) {
            weights.push_back(nullptr);
          }
        }
        formula["weights"] = weights;
      } catch (const RegimeError& e) {
        formula["note"] = e.what();
      }
      break;
    }
  }
  const SpectrumReport rep = jacobi_matrix_spectrum(sys, opt);
  if (cfg.format == "csv") {
    std::vector<std::vector<double>> rows;
    for (const auto& t : rep.truncations) {
      for (std::size_t i = 0; i < t.values.size(); ++i) {
        bool conv = false;
        for (const double v : rep.discrete_points) conv = conv || std::fabs(v - t.values[i]) < rep.tolerance;
        for (const double v : rep.embedded_points) conv = conv || std::fabs(v - t.values[i]) < rep.tolerance;
        rows.push_back({static_cast<double>(t.N), static_cast<double>(i), t.values[i], conv ? 1.0 : 0.0});
      }
    }
    std::ostringstream os;
    write_csv(os, {"N", "index", "eigenvalue", "converged"}, rows);
    detail::emit(cfg, os.str(), out);
    return kExitOk;
  }
  ojson j;
  j["case"] = case_tag(*doc.kase);
  j["family"] = family;
  j["spectrum"] = spectrum_json(rep);
  if (!formula.empty()) j["formula"] = formula;
  detail::emit(cfg, to_json_text(j), out);
  return kExitOk;
}

inline int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  detail::require_format(cfg);
  const ParamsDocument doc = detail::config_params(cfg);
  const GridSpec grid = detail::config_grid(cfg);
  SeriesSolution sol;
  switch (*doc.kase) {
    case SolutionCase::Special: sol = solve_special(doc.params, cfg.z, cfg.N > 0 ? cfg.N : 20); break;
    case SolutionCase::Generalized: sol = solve_generalized(doc.params, cfg.z, cfg.N > 0 ? cfg.N : 20); break;
    default: sol = solve_restricted(doc.params, cfg.k, *doc.kase); break;
  }
  const ResidualReport res = heun_residual(sol.params, sol, grid);
  if (!cfg.residual_out.empty()) {
    std::ofstream f(cfg.residual_out, std::ios::binary);
    if (!f) throw InputError("cannot write '" + cfg.residual_out + "'");
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < res.grid.size(); ++i) rows.push_back({res.grid[i], res.residual[i]});
    write_csv(f, {"x", "residual"}, rows);
  }
  if (cfg.format == "csv") {
    std::vector<std::vector<double>> rows;
    for (const double x : res.grid) rows.push_back({x, series_eval(sol, x)});
    std::ostringstream os;
    write_csv(os, {"x", "y"}, rows);
    detail::emit(cfg, os.str(), out);
    return kExitOk;
  }
  ojson j;
  j["solution"] = solution_json(sol);
  j["residual"] = residual_json(res, grid);
  detail::emit(cfg, to_json_text(j), out);
  return kExitOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  detail::require_format(cfg);
  VerifyOptions opt;
  opt.g_scale = 1.0 + cfg.perturb_g;
  std::vector<CheckResult> checks = run_verification(opt);
  if (!cfg.params_file.empty()) {
    const ParamsDocument doc = detail::config_params(cfg);
    if (is_restricted(*doc.kase)) {
      const SeriesSolution s = solve_restricted(doc.params, cfg.k, *doc.kase);
      const ResidualReport r = heun_residual(s.params, s, detail::config_grid(cfg));
      checks.push_back({"input family residual k=" + std::to_string(cfg.k), r.norm < 1e-6, r.norm, 1e-6, ""});
    }
  }
  const bool ok = all_passed(checks);
  for (const auto& c : checks) {
    if (!c.passed) err << "check failed: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  }
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "name,passed,value,tolerance\n";
    for (const auto& c : checks) {
      os << '"' << c.name << "\"," << (c.passed ? 1 : 0) << "," << format_double(c.value) << ","
         << format_double(c.tolerance) << "\n";
    }
    detail::emit(cfg, os.str(), out);
  } else {
    ojson j;
    j["passed"] = ok;
    ojson list = ojson::array();
    for (const auto& c : checks) {
      list.push_back(ojson{{"name", c.name}, {"passed", c.passed}, {"value", c.value}, {"tolerance", c.tolerance},
                           {"detail", c.detail}});
    }
    j["checks"] = list;
    detail::emit(cfg, to_json_text(j), out);
  }
  return ok ? kExitOk : kExitVerify;
}

inline int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  ojson j;
  j["poly"] = cfg.poly;
  j["n"] = cfg.N;
  if (cfg.poly == "jacobi") {
    const JacobiIndex idx{cfg.mu, cfg.nu};
    j["mu"] = cfg.mu;
    j["nu"] = cfg.nu;
    j["x"] = cfg.x;
    j["value"] = jacobi_eval(cfg.N, idx, cfg.x);
    j["normalized"] = jacobi_norm_constant(cfg.N, idx) * jacobi_eval(cfg.N, idx, cfg.x);
  } else if (cfg.poly == "wilson") {
    const std::vector<double> w = detail::parse_list(cfg.wilson, 4);
    j["parameters"] = w;
    j["z2"] = cfg.z2;
    j["value"] = wilson_eval(cfg.N, cfg.z2, WilsonParams{w[0], w[1], w[2], w[3]});
  } else {
    throw InputError("--poly must be jacobi or wilson");
  }
  detail::emit(cfg, to_json_text(j), out);
  return kExitOk;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "resolve") return cmd_resolve(cfg, out);
    if (cfg.command == "spectrum") return cmd_spectrum(cfg, out);
    if (cfg.command == "solve") return cmd_solve(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "eval") return cmd_eval(cfg, out);
    err << "error: unknown command '" << cfg.command << "'\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConstraint;
  }
}

/// Parses the command line and runs one command.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Tridiagonal representation solver for a nine-parameter Heun-type equation"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<double> z;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--params", cfg.params_file, "JSON document with keys a,b,c,d,A,B,C,D,E and optional case");
    sub->add_option("--case", cfg.kase, "solution case: a, b, c or d");
    sub->add_option("--out", cfg.out, "output file (default: stdout)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* resolve_cmd = app.add_subcommand("resolve", "basis parameters of a case as JSON");
  common(resolve_cmd);
  resolve_cmd->add_option("--solve-for", cfg.solve_for, "set E or C so that its row holds")
      ->check(CLI::IsMember({"E", "C"}));

  CLI::App* spectrum_cmd = app.add_subcommand(
      "spectrum", "truncated Jacobi-matrix spectrum; CSV columns: N,index,eigenvalue,converged");
  common(spectrum_cmd);
  spectrum_cmd->add_option("--N", cfg.N, "largest truncation size (sizes N/4, N/2, N; default 400)");

  CLI::App* solve_cmd =
      app.add_subcommand("solve", "assemble a series solution; CSV columns: x,y on the residual grid");
  common(solve_cmd);
  solve_cmd->add_option("--k", cfg.k, "spectrum index of a restricted solution");
  solve_cmd->add_option("--z", z, "spectral point of a special or generalized solution");
  solve_cmd->add_option("--N", cfg.N, "truncation order of a special or generalized solution (default 20)");
  solve_cmd->add_option("--grid", cfg.grid, "residual grid as <points>,<delta>");
  solve_cmd->add_option("--residual-out", cfg.residual_out, "write the residual as CSV columns x,residual");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the invariant suite; CSV columns: name,passed,value,tolerance");
  common(verify_cmd);
  verify_cmd->add_option("--k", cfg.k, "spectrum index for an input restricted family");
  verify_cmd->add_option("--grid", cfg.grid, "residual grid as <points>,<delta>");
  verify_cmd->add_option("--perturb-G", cfg.perturb_g, "relative perturbation of the off-diagonals (test hook)");

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a Jacobi or Wilson polynomial as JSON");
  eval_cmd->add_option("--out", cfg.out, "output file (default: stdout)");
  eval_cmd->add_option("--poly", cfg.poly, "jacobi or wilson")->check(CLI::IsMember({"jacobi", "wilson"}));
  eval_cmd->add_option("--N", cfg.N, "degree")->required();
  eval_cmd->add_option("--x", cfg.x, "Jacobi argument in [0,1]");
  eval_cmd->add_option("--mu", cfg.mu, "Jacobi index mu");
  eval_cmd->add_option("--nu", cfg.nu, "Jacobi index nu");
  eval_cmd->add_option("--wilson", cfg.wilson, "Wilson parameters a,b,c,d");
  eval_cmd->add_option("--z2", cfg.z2, "Wilson argument z^2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }
  cfg.z = z;
  for (CLI::App* sub : {resolve_cmd, spectrum_cmd, solve_cmd, verify_cmd, eval_cmd}) {
    if (sub->parsed()) cfg.command = sub->get_name();
  }
  return dispatch(cfg, out, err);
}

}  // namespace heuntra

#endif  // HEUNTRA_CLI_HPP
