#ifndef HEUNTRA_VERIFY_HPP
#define HEUNTRA_VERIFY_HPP

// The invariant suite behind the verify command: identities, tridiagonality,
// recursion equivalences, Wilson consistency, spectra and residuals.

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "heuntra/equivalence.hpp"
#include "heuntra/jacobi.hpp"
#include "heuntra/params.hpp"
#include "heuntra/polynomials.hpp"
#include "heuntra/solver.hpp"
#include "heuntra/tridiag.hpp"

namespace heuntra {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  double g_scale = 1.0;  // multiplies the Heun off-diagonals in the equivalence checks
  bool spectra = true;
};

/// Parameter sets conforming to each case, shared by the suite and the tests.
namespace families {

inline HeunParams special() {
  HeunParams p{0.3, 2.5, 0.4, 0.3, -0.1, 0.05, 0.0, 0.2, 0.1};
  p.C = solve_for_C(p, SolutionCase::Special);
  return p;
}

inline HeunParams generalized() {
  HeunParams p{0.3, 2.5, 0.4, 0.3, -0.1, 0.05, 0.0, 0.2, 0.1};
  p.C = solve_for_C(p, SolutionCase::Generalized);
  return p;
}

inline HeunParams restricted() {
  HeunParams p{0.3, 2.5, 0.4, 0.3, -0.1, 0.05, 0.0, 0.0, 0.0};
  p.C = solve_for_C(p, SolutionCase::RestrictedC);
  p.E = solve_for_E(p);
  return p;
}

/// a = 1, b = 1, c = 0, A = C = D = 0: sigma = tau = 1/2.
inline HeunParams unit_pole(double d = 0.5) { return {1.0, 1.0, 0.0, d, 0.0, 0.0, 0.0, 0.0, 0.0}; }

/// a = 1, b = -6, c = 0, A = C = D = 0: sigma = 1/2, tau = 3, three bound states.
inline HeunParams three_level(double d = 0.5) { return {1.0, -6.0, 0.0, d, 0.0, 0.0, 0.0, 0.0, 0.0}; }

/// Generalized family with mu = nu = 0, gamma = 1/2, tau^2 = 1 - D and lambda = d.
inline HeunParams deformed(double lambda, double D) { return {1.0, 1.0, 1.0, lambda, 0.0, 0.0, 0.0, D, 0.0}; }

}  // namespace families

namespace detail {

inline std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

inline CheckResult bounded(std::string name, double value, double tol, std::string detail = "") {
  return {std::move(name), value < tol, value, tol, std::move(detail)};
}

}  // namespace detail

inline std::vector<CheckResult> run_verification(const VerifyOptions& opt = {}) {
  std::vector<CheckResult> out;
  auto guard = [&](const std::string& name, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      out.push_back({name, false, 0.0, 0.0, std::string("threw: ") + e.what()});
    }
  };

  guard("jacobi orthonormality", [&] {
    const std::vector<JacobiIndex> idx{{0.0, 0.0}, {0.5, -0.5}, {1.5, 0.25}, {-0.3, 2.7}, {3.0, 1.0}};
    double worst = 0.0;
    for (const auto& j : idx) {
      for (long n = 0; n <= 15; ++n) {
        for (long m = 0; m <= 15; ++m) {
          const double v = orthogonality_check(n, m, j, 20).value;
          worst = std::max(worst, std::fabs(v - (n == m ? 1.0 : 0.0)));
        }
      }
    }
    out.push_back(detail::bounded("jacobi orthonormality", worst, 1e-10));
  });

  guard("jacobi differential equation", [&] {
    double worst = 0.0;
    for (long n = 0; n <= 12; ++n) {
      for (double x : {0.1, 0.37, 0.5, 0.81}) {
        const JacobiIndex j{1.5, 0.25};
        const double scale = 1.0 + std::fabs(n * (n + 2.75) * jacobi_eval(n, j, x));
        worst = std::max(worst, std::fabs(jacobi_ode_residual(n, j, x)) / scale);
      }
    }
    out.push_back(detail::bounded("jacobi differential equation", worst, 1e-7));
  });

  guard("partial-fraction and F_n identities", [&] {
    std::vector<double> xs;
    for (int i = 0; i < 20; ++i) xs.push_back(0.025 + 0.05 * i);
    const IdentityReport r = check_identities(50, xs, 0.3113, {{0.0, 0.0}, {1.5, 0.25}, {-0.3, 2.7}});
    const double worst = std::max({r.max_fraction_identities, r.max_plus_identity, r.max_minus_identity});
    out.push_back(detail::bounded("partial-fraction and F_n identities", worst, 1e-13));
  });

  const struct {
    const char* name;
    HeunParams p;
    SolutionCase k;
  } fits[] = {{"tridiagonality (a)", families::special(), SolutionCase::Special},
              {"tridiagonality (b)", families::generalized(), SolutionCase::Generalized},
              {"tridiagonality (c)", families::restricted(), SolutionCase::RestrictedC},
              {"tridiagonality (d)", families::restricted(), SolutionCase::RestrictedD}};
  for (const auto& f : fits) {
    guard(f.name, [&] {
      const BasisParams bp = resolve(f.p, f.k);
      double coeff = 0.0, span = 0.0;
      for (long n = 0; n <= 6; ++n) {
        const TridiagonalityFit fit = tridiagonality_fit(f.p, bp, n);
        coeff = std::max(coeff, fit.max_rel_coeff_diff);
        span = std::max(span, fit.span_residual);
      }
      out.push_back(detail::bounded(f.name, std::max(coeff, span), 1e-8,
                                    "coefficients " + detail::num(coeff) + ", span " + detail::num(span)));
    });
  }

  auto equivalence = [&](const EquivalenceReport& r) {
    std::string d;
    for (const auto& s : r.discrepancies) d += (d.empty() ? "" : "; ") + s;
    out.push_back({r.name, r.passed, std::max(r.max_rel_diag, r.max_rel_off), r.tolerance, d});
  };
  guard("restricted (c) vs Wilson", [&] { equivalence(restricted_vs_wilson(families::restricted(), 10, opt.g_scale)); });
  guard("generalized (b) vs deformed Wilson",
        [&] { equivalence(generalized_vs_modified_wilson(families::generalized(), 10, opt.g_scale)); });
  guard("special (a) vs Q", [&] { equivalence(special_vs_q(families::special(), 10, opt.g_scale)); });
  guard("restricted (d) vs exchanged (c)",
        [&] { equivalence(restricted_d_vs_mapped_c(families::restricted(), 10, opt.g_scale)); });

  guard("wilson hypergeometric vs recursion", [&] {
    std::mt19937 gen(20240611u);
    std::uniform_real_distribution<double> par(0.2, 2.0), arg(-0.04, 3.0);
    double worst = 0.0;
    for (int draw = 0; draw < 24; ++draw) {
      const WilsonParams w{par(gen), par(gen), par(gen), par(gen)};
      const double z2 = arg(gen);
      std::vector<double> val;
      for (long n = 0; n <= 11; ++n) val.push_back(wilson_eval(n, z2, w));
      double scale = 0.0;
      for (double v : val) scale = std::max(scale, std::fabs(v));
      for (long n = 0; n <= 10; ++n) {
        const RecursionRow r = wilson_recursion_row(n, w);
        const double lhs = z2 * val[n];
        const double rhs = r.diag * val[n] + (n > 0 ? r.sub * val[n - 1] : 0.0) + r.sup * val[n + 1];
        const double mag = std::max({std::fabs(lhs), std::fabs(r.diag * val[n]), std::fabs(r.sup * val[n + 1]), 1e-300});
        worst = std::max(worst, std::fabs(lhs - rhs) / mag);
      }
    }
    out.push_back(detail::bounded("wilson hypergeometric vs recursion", worst, 1e-9));
  });

  guard("wilson discrete spectrum", [&] {
    const WilsonSpectrum s = wilson_spectrum(0.5, 2.0);
    const TridiagonalSystem sys = wilson_system(WilsonParams::from_sigma_tau(0.5, 2.0, 0.5), 200);
    SpectrumOptions o;
    o.sizes = {100, 200};
    const SpectrumReport rep = jacobi_matrix_spectrum(sys, o);
    double worst = s.points.size() == 2 && s.points[0] == -2.25 && s.points[1] == -0.25 ? 0.0 : 1.0;
    if (rep.discrete_points.size() != s.points.size()) worst = 1.0;
    for (std::size_t i = 0; i < rep.discrete_points.size() && i < s.points.size(); ++i) {
      worst = std::max(worst, std::fabs(rep.discrete_points[i] - s.points[i]));
    }
    out.push_back(detail::bounded("wilson discrete spectrum", worst, 1e-6));
  });

  if (opt.spectra) {
    const struct {
      double lambda, D;
      const std::string& label;
    } cells[] = {{0.5, -3.0, kPureContinuous},    {0.5, 2.0, kPureContinuous},     {-0.5, -3.0, kMixedPositive},
                 {1.5, -3.0, kMixedNegative},     {-0.5, 2.0, kContinuousPositive}, {1.5, 2.0, kContinuousNegative}};
    for (const auto& c : cells) {
      const std::string name = "deformed Wilson spectrum lambda=" + detail::num(c.lambda) + " tau^2=" +
                               detail::num(1.0 - c.D);
      guard(name, [&] {
        const HeunParams p = families::deformed(c.lambda, c.D);
        const TridiagonalSystem sys = build_case_b(p, resolve(p, SolutionCase::Generalized), 400);
        const SpectrumReport rep = jacobi_matrix_spectrum(sys);
        out.push_back({name, rep.classification == c.label, 0.0, 0.0, rep.classification});
      });
    }
  }

  guard("gauss-jacobi moments", [&] {
    const JacobiIndex j{1.5, 0.25};
    const TridiagonalSystem sys = jacobi_cos_system(j.mu, j.nu, 12);
    const std::vector<MeasurePoint> m = golub_welsch_measure(sys, 12);
    double worst = 0.0;
    for (int k = 0; k <= 10; ++k) {
      CompensatedSum s;
      for (const auto& q : m) s += q.weight * std::pow(0.5 * (q.node + 1.0), k);
      const double exact = std::exp(log_beta(j.nu + 1.0 + k, j.mu + 1.0) - log_beta(j.nu + 1.0, j.mu + 1.0));
      worst = std::max(worst, std::fabs(s.value() - exact));
    }
    out.push_back(detail::bounded("gauss-jacobi moments", worst, 1e-10));
  });

  for (long k = 0; k <= 2; ++k) {
    const std::string name = "restricted residual k=" + std::to_string(k);
    guard(name, [&] {
      const SeriesSolution s = solve_restricted(families::three_level(), k);
      const ResidualReport r = heun_residual(s.params, s);
      out.push_back(detail::bounded(name, r.norm, 1e-6));
    });
  }

  guard("random coefficients are rejected", [&] {
    const SeriesSolution s = solve_restricted(families::three_level(), 2);
    const ResidualReport r = heun_residual(s.params, randomized_coefficients(s, 12345u, 3));
    out.push_back({"random coefficients are rejected", r.norm > 1e-2, r.norm, 1e-2, "norm must exceed the bound"});
  });
  return out;
}

inline bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace heuntra

#endif  // HEUNTRA_VERIFY_HPP
