#ifndef HEUNTRA_SOLVER_HPP
#define HEUNTRA_SOLVER_HPP

// Basis functions, the operator action on them, truncated series solutions
// and their direct residual in the differential equation.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "heuntra/error.hpp"
#include "heuntra/jacobi.hpp"
#include "heuntra/params.hpp"
#include "heuntra/polynomials.hpp"
#include "heuntra/recursion_coeffs.hpp"
#include "heuntra/system.hpp"
#include "heuntra/tridiag.hpp"

namespace heuntra {

/// phi_n(x) = c_n x^alpha (1-x)^beta |x-d|^gamma P_n^{(mu,nu)}(x).
struct BasisFunction {
  BasisParams basis;
  long n = 0;
  double d = 0.5;
};

struct BasisJet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

namespace detail {

inline void require_basis_point(const BasisParams& bp, double d, double x) {
  if (!(x > 0.0 && x < 1.0)) throw SingularPoint("basis evaluated outside 0 < x < 1");
  if (x == d) throw SingularPoint("basis evaluated at x = d");
  (void)bp;
}

inline double basis_prefactor(const BasisParams& bp, double d, double x) {
  return std::pow(x, bp.alpha) * std::pow(1.0 - x, bp.beta) * std::pow(std::fabs(x - d), bp.gamma);
}

}  // namespace detail

inline double basis_eval(const BasisFunction& bf, double x) {
  detail::require_basis_point(bf.basis, bf.d, x);
  const JacobiIndex idx{bf.basis.mu, bf.basis.nu};
  return jacobi_norm_constant(bf.n, idx) * detail::basis_prefactor(bf.basis, bf.d, x) * jacobi_eval(bf.n, idx, x);
}

/// Value and analytic first two derivatives through the logarithmic derivative
/// L = alpha/x - beta/(1-x) + gamma/(x-d) of the prefactor.
inline BasisJet basis_jet(const BasisFunction& bf, double x, DerivativeMode mode = DerivativeMode::Analytic) {
  detail::require_basis_point(bf.basis, bf.d, x);
  const BasisParams& bp = bf.basis;
  const JacobiIndex idx{bp.mu, bp.nu};
  const JacobiJet p = jacobi_jet(bf.n, idx, x);
  const double p2 = mode == DerivativeMode::Analytic ? p.d2 : jacobi_second_derivative_richardson(bf.n, idx, x);
  const double u = x - bf.d;
  const double L = bp.alpha / x - bp.beta / (1.0 - x) + bp.gamma / u;
  const double dL = -bp.alpha / (x * x) - bp.beta / ((1.0 - x) * (1.0 - x)) - bp.gamma / (u * u);
  const double scale = jacobi_norm_constant(bf.n, idx) * detail::basis_prefactor(bp, bf.d, x);
  return {scale * p.value, scale * (p.d1 + L * p.value), scale * (p2 + 2.0 * L * p.d1 + (L * L + dL) * p.value)};
}

namespace detail {

// J y = x(x-1)(x-d) y'' + [a(x-1)(x-d) + b x(x-d) + c x(x-1)] y'
//       + [A/x + B/(x-1) + C/(x-d) + xD - E] y.
inline double apply_operator(const HeunParams& p, double x, double y, double y1, double y2) {
  const double w = x * (x - 1.0) * (x - p.d);
  const double drift = p.a * (x - 1.0) * (x - p.d) + p.b * x * (x - p.d) + p.c * x * (x - 1.0);
  const double pot = p.A / x + p.B / (x - 1.0) + p.C / (x - p.d) + x * p.D - p.E;
  return w * y2 + drift * y1 + pot * y;
}

}  // namespace detail

/// (J phi_n)(x) with J = x(x-1)(x-d) times the differential operator.
inline double operator_apply(const HeunParams& p, const BasisFunction& bf, double x,
                             DerivativeMode mode = DerivativeMode::Analytic) {
  const BasisJet j = basis_jet(bf, x, mode);
  return detail::apply_operator(p, x, j.value, j.d1, j.d2);
}

/// Multiplier applied to J phi_n before the three-term identity holds:
/// 1 for (a) and (b), (x-1)/(x-d) for (c), x/(x-d) for (d).
inline double case_multiplier(SolutionCase k, double d, double x) {
  switch (k) {
    case SolutionCase::RestrictedC: return (x - 1.0) / (x - d);
    case SolutionCase::RestrictedD: return x / (x - d);
    default: return 1.0;
  }
}

/// The printed three-term coefficients of the operator action for each case.
inline RecursionRow printed_operator_row(const HeunParams& p, const BasisParams& bp, long n) {
  const double mu = bp.mu, nu = bp.nu;
  const double k = static_cast<double>(n);
  const double q = quarter_abc_sq(p);
  const double F = coeff_F(n, mu, nu);
  const double G = coeff_G(n, mu, nu);
  const double Gm = coeff_G(n - 1, mu, nu);
  const double ha = k + 0.5 * (mu + nu + 1.0);
  auto hb = [&](double m) { return (m + 0.5 * (mu + nu) + 1.0) * (m + 0.5 * (mu + nu) + 1.0) - q; };
  const double R = compute_R(p);
  RecursionRow row;
  switch (bp.kase) {
    case SolutionCase::Special: {
      const double delta = ha * ha - q + p.D;
      row.diag = R - energy_row_rhs(p) - p.d * (ha * ha - q) + 0.5 * (F + 1.0) * delta;
      row.sub = Gm * delta;
      row.sup = G * delta;
      break;
    }
    case SolutionCase::Generalized: {
      row.diag = -ratio_n_mu(n, mu, nu) + 0.5 * (F + 1.0) * (hb(k) + p.D) -
                 p.d * (ha * ha - q + 0.5 * p.c * (p.a + p.b) - 0.25) - 0.5 * (nu + 1.0) + 0.5 * p.a * p.c + R;
      row.sub = Gm * (hb(k - 1.0) + p.D);
      row.sup = G * (hb(k) + p.D);
      break;
    }
    case SolutionCase::RestrictedC:
      row.diag = ratio_n_mu(n, nu, mu) + 0.5 * (F - 1.0) * hb(k);
      row.sub = Gm * hb(k - 1.0);
      row.sup = G * hb(k);
      break;
    case SolutionCase::RestrictedD:
      row.diag = -ratio_n_mu(n, mu, nu) + 0.5 * (F + 1.0) * hb(k);
      row.sub = Gm * hb(k - 1.0);
      row.sup = G * hb(k);
      break;
  }
  return row;
}

/// Chebyshev points on [lo, hi].
inline std::vector<double> chebyshev_points(double lo, double hi, long count) {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(std::max(count, 0L)));
  for (long i = 0; i < count; ++i) {
    const double t = std::cos(M_PI * (static_cast<double>(count - 1 - i) + 0.5) / static_cast<double>(count));
    xs.push_back(0.5 * (lo + hi) + 0.5 * (hi - lo) * t);
  }
  return xs;
}

struct TridiagonalityFit {
  long n = 0;
  RecursionRow fitted;
  RecursionRow printed;
  double max_rel_coeff_diff = 0.0;  // fitted against printed
  double span_residual = 0.0;       // scaled out-of-span residual on fit and extra points
  std::vector<double> grid;
};

namespace detail {

// Least squares by modified Gram-Schmidt: columns are sampled basis functions.
inline std::vector<double> mgs_least_squares(std::vector<std::vector<double>> cols, std::vector<double> rhs) {
  const std::size_t k = cols.size();
  const std::size_t m = rhs.size();
  std::vector<std::vector<double>> r(k, std::vector<double>(k, 0.0));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      double dot = 0.0;
      for (std::size_t t = 0; t < m; ++t) dot += cols[i][t] * cols[j][t];
      r[i][j] = dot;
      for (std::size_t t = 0; t < m; ++t) cols[j][t] -= dot * cols[i][t];
    }
    double norm = 0.0;
    for (std::size_t t = 0; t < m; ++t) norm += cols[j][t] * cols[j][t];
    norm = std::sqrt(norm);
    if (norm == 0.0) throw DegenerateIndex("rank-deficient basis sample");
    r[j][j] = norm;
    for (std::size_t t = 0; t < m; ++t) cols[j][t] /= norm;
  }
  std::vector<double> qtb(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    double dot = 0.0;
    for (std::size_t t = 0; t < m; ++t) dot += cols[j][t] * rhs[t];
    qtb[j] = dot;
    for (std::size_t t = 0; t < m; ++t) rhs[t] -= dot * cols[j][t];
  }
  std::vector<double> coef(k, 0.0);
  for (std::size_t jj = k; jj-- > 0;) {
    double s = qtb[jj];
    for (std::size_t i = jj + 1; i < k; ++i) s -= r[jj][i] * coef[i];
    coef[jj] = s / r[jj][jj];
  }
  return coef;
}

// The part of (delta, 1-delta) on one side of d, the longer one.
inline std::pair<double, double> fit_interval(double d, double delta) {
  double lo = delta, hi = 1.0 - delta;
  if (d > lo && d < hi) {
    if (d - lo >= hi - d) hi = d - delta;
    else lo = d + delta;
  }
  return {lo, hi};
}

}  // namespace detail

/// Fits multiplier * J phi_n by phi_{n-1}, phi_n, phi_{n+1} on points of one
/// subinterval and compares the scalars with the printed coefficients.
inline TridiagonalityFit tridiagonality_fit(const HeunParams& p, const BasisParams& bp, long n, long points = 30,
                                            double delta = 0.05) {
  if (n < 0) throw DegenerateIndex("negative basis degree");
  const auto [lo, hi] = detail::fit_interval(p.d, delta);
  TridiagonalityFit out;
  out.n = n;
  out.grid = chebyshev_points(lo, hi, points);
  const std::vector<double> extra = chebyshev_points(lo, hi, 7);

  std::vector<long> degrees;
  if (n > 0) degrees.push_back(n - 1);
  degrees.push_back(n);
  degrees.push_back(n + 1);
  auto target_at = [&](double x) {
    return case_multiplier(bp.kase, p.d, x) * operator_apply(p, BasisFunction{bp, n, p.d}, x);
  };
  std::vector<std::vector<double>> cols(degrees.size());
  std::vector<double> rhs;
  for (double x : out.grid) {
    for (std::size_t j = 0; j < degrees.size(); ++j) cols[j].push_back(basis_eval(BasisFunction{bp, degrees[j], p.d}, x));
    rhs.push_back(target_at(x));
  }
  const std::vector<double> coef = detail::mgs_least_squares(cols, rhs);
  std::size_t j = 0;
  if (n > 0) out.fitted.sub = coef[j++];
  out.fitted.diag = coef[j++];
  out.fitted.sup = coef[j];

  double scale = 0.0, worst = 0.0;
  auto probe = [&](double x) {
    const double t = target_at(x);
    double fit = out.fitted.diag * basis_eval(BasisFunction{bp, n, p.d}, x) +
                 out.fitted.sup * basis_eval(BasisFunction{bp, n + 1, p.d}, x);
    if (n > 0) fit += out.fitted.sub * basis_eval(BasisFunction{bp, n - 1, p.d}, x);
    scale = std::max(scale, std::fabs(t));
    worst = std::max(worst, std::fabs(t - fit));
  };
  for (double x : out.grid) probe(x);
  for (double x : extra) probe(x);
  out.span_residual = scale > 0.0 ? worst / scale : worst;

  out.printed = printed_operator_row(p, bp, n);
  const double rowscale = std::max({std::fabs(out.printed.diag), std::fabs(out.printed.sub), std::fabs(out.printed.sup)});
  auto rel = [&](double f, double q) { return std::fabs(f - q) / std::max(std::fabs(q), 1e-3 * rowscale + 1e-300); };
  out.max_rel_coeff_diff = std::max(rel(out.fitted.diag, out.printed.diag), rel(out.fitted.sup, out.printed.sup));
  if (n > 0) out.max_rel_coeff_diff = std::max(out.max_rel_coeff_diff, rel(out.fitted.sub, out.printed.sub));
  return out;
}

enum class SolutionClass { Restricted, Generalized, Special };
enum class Normalization { UnitF0, MeasureWeighted };

inline std::string class_name(SolutionClass c) {
  switch (c) {
    case SolutionClass::Restricted: return "restricted";
    case SolutionClass::Generalized: return "generalized";
    case SolutionClass::Special: return "special";
  }
  return "?";
}

inline std::string normalization_name(Normalization n) {
  return n == Normalization::UnitF0 ? "unit-f0" : "measure-weighted";
}

struct SeriesSolution {
  HeunParams params;  // the parameters the series solves, quantized values applied
  BasisParams basis;
  std::vector<double> coeffs;       // f_n multiplying phi_n, scale included
  std::vector<double> polynomials;  // the recursion sequence at the spectral point
  double scale = 1.0;               // q(k) under measure weighting
  SolutionClass klass = SolutionClass::Restricted;
  Normalization normalization = Normalization::UnitF0;
  bool formal = false;
  std::optional<long> k;
  std::optional<double> z;
  std::string quantized_name;  // "B" for case (c), "A" for case (d)
  double quantized_value = std::numeric_limits<double>::quiet_NaN();
  double energy = std::numeric_limits<double>::quiet_NaN();          // E used in params
  double printed_energy = std::numeric_limits<double>::quiet_NaN();  // closed-form eigenvalue
  std::vector<std::string> notes;

  long order() const { return static_cast<long>(coeffs.size()) - 1; }
};

/// y(x) = sum f_n phi_n(x).
inline double series_eval(const SeriesSolution& sol, double x) {
  CompensatedSum s;
  for (std::size_t n = 0; n < sol.coeffs.size(); ++n) {
    if (sol.coeffs[n] == 0.0) continue;
    s += sol.coeffs[n] * basis_eval(BasisFunction{sol.basis, static_cast<long>(n), sol.params.d}, x);
  }
  return s.value();
}

/// Restricted solution number k. Case (c) quantizes B, case (d) quantizes A
/// through the exchange map; E is set by the energy row.
inline SeriesSolution solve_restricted(const HeunParams& params, long k,
                                       SolutionCase kase = SolutionCase::RestrictedC) {
  if (k < 0) throw DegenerateIndex("negative spectrum index");
  if (kase == SolutionCase::RestrictedD) {
    SeriesSolution sc = solve_restricted(map_c_to_d(params), k, SolutionCase::RestrictedC);
    SeriesSolution out = sc;
    out.params = map_c_to_d(sc.params);
    out.basis = resolve(out.params, SolutionCase::RestrictedD);
    for (std::size_t n = 0; n < out.coeffs.size(); ++n) {
      if (n % 2 == 1) {
        out.coeffs[n] = -out.coeffs[n];
        out.polynomials[n] = -out.polynomials[n];
      }
    }
    out.quantized_name = "A";
    out.quantized_value = out.params.A;
    out.energy = out.params.E;
    out.printed_energy = sc.printed_energy - 2.0 * sc.params.A / sc.params.d + 2.0 * sc.params.B / (1.0 - sc.params.d) +
                         0.5 * sc.params.c * (sc.params.b - sc.params.a);
    out.notes.push_back("obtained from case (c) of the exchanged parameters with f_n -> (-1)^n f_n");
    return out;
  }

  const HeunParams& p = params;
  p.validate();
  detail::require_le(4.0 * p.A / p.d, (1.0 - p.a) * (1.0 - p.a), kRowA);
  detail::require_eq(1.0, c_row_value(p), kRowCEq);
  detail::require_eq(p.D, 0.0, kRowD);

  std::vector<std::string> notes;
  const double nu = detail::index_from_square((1.0 - p.a) * (1.0 - p.a) - 4.0 * p.A / p.d, 0.0, "nu", notes);
  const double sigma = 0.5 * (nu + 1.0);
  const double tau = 0.5 * std::fabs(p.a + p.b + p.c - 1.0);
  const WilsonSpectrum levels = wilson_spectrum(sigma, tau);
  if (k > levels.N) {
    throw RegimeError("spectrum index k = " + std::to_string(k) + " exceeds N = " + std::to_string(levels.N) +
                      " (sigma = " + detail::fmt(sigma) + ", tau = " + detail::fmt(tau) + ")");
  }
  const double gw = tau - sigma - static_cast<double>(k);
  const double mu = 2.0 * gw - 1.0;
  if (!(mu > -1.0)) {
    throw BranchInfeasible("k = " + std::to_string(k) + " needs mu = 2(tau - sigma - k) - 1 = " + detail::fmt(mu) +
                           " > -1");
  }

  SeriesSolution out;
  out.klass = SolutionClass::Restricted;
  out.k = k;
  out.z = -gw * gw;
  out.notes = notes;
  HeunParams q = p;
  q.B = 0.25 * (1.0 - p.d) * ((1.0 - p.b) * (1.0 - p.b) - (mu + 1.0) * (mu + 1.0));
  q.E = solve_for_E(q);
  out.params = q;
  out.quantized_name = "B";
  out.quantized_value = q.B;
  out.energy = q.E;
  const double root = 2.0 * static_cast<double>(k) + 1.0 - std::fabs(p.a + p.b + p.c - 1.0) + nu;
  out.printed_energy = 0.25 * (4.0 * p.A / p.d - 0.5 * p.c * (p.d * (p.a + p.b + p.c - 2.0) + 1.0 - p.a - 0.5 * p.c) -
                               (1.0 - p.b) * (1.0 - p.b) + root * root);
  if (std::fabs(out.printed_energy - out.energy) > 1e-10 * (1.0 + std::fabs(out.energy))) {
    out.notes.push_back("closed-form eigenvalue " + detail::fmt(out.printed_energy) + " differs from the energy row " +
                        detail::fmt(out.energy));
  }
  out.basis = resolve(q, SolutionCase::RestrictedC);
  if (std::fabs(out.basis.mu - mu) > 1e-9 * (1.0 + std::fabs(mu))) {
    out.notes.push_back("resolved mu " + detail::fmt(out.basis.mu) + " differs from 2(tau-sigma-k)-1");
  }

  // Where the row factor changes sign the Heun off-diagonal and the Wilson
  // one differ in sign, so f_n = eps_n W_n with eps_n = +-1.
  const WilsonParams wp = WilsonParams::from_sigma_tau(sigma, tau, gw);
  const TridiagonalSystem sys = build_case_c(q, out.basis, static_cast<std::size_t>(levels.N) + 1);
  const PairedWilsonParams pw{sigma, tau * tau, gw};
  double eps = 1.0;
  bool flipped = false;
  for (long n = 0; n <= levels.N; ++n) {
    if (n > 0) {
      const double t = sys.off[static_cast<std::size_t>(n - 1)];
      const double w = -paired_wilson_row(n - 1, pw, 0.0, false).sup;
      if (t * w < 0.0) {
        eps = -eps;
        flipped = true;
      }
    }
    out.polynomials.push_back(eps * wilson_eval(n, *out.z, wp));
  }
  if (flipped) out.notes.push_back("f_n = eps_n W_n: sign gauge from negative row factors");
  try {
    out.scale = std::sqrt(wilson_discrete_weight(k, sigma, tau, gw));
    out.normalization = Normalization::MeasureWeighted;
  } catch (const Error& e) {
    out.scale = 1.0;
    out.normalization = Normalization::UnitF0;
    out.notes.push_back(std::string("discrete weight unavailable, unit f_0 kept: ") + e.what());
  }
  for (double w : out.polynomials) out.coeffs.push_back(out.scale * w);
  return out;
}

/// Special solution at spectral point z (when given, E is chosen to place the
/// solution there), N + 1 terms, unit f_0.
inline SeriesSolution solve_special(const HeunParams& params, std::optional<double> z, long N) {
  if (N < 0) throw DegenerateIndex("negative truncation order");
  HeunParams p = params;
  if (z) p.E = energy_for_special_z(p, *z);
  SeriesSolution out;
  out.klass = SolutionClass::Special;
  out.formal = true;
  out.params = p;
  out.energy = p.E;
  out.basis = resolve(p, SolutionCase::Special);
  if (special_omega(p.d) > 0.0) out.z = special_z(p);
  const TridiagonalSystem sys = build_case_a(p, out.basis, static_cast<std::size_t>(N) + 1);
  out.polynomials = generate_sequence(sys, sys.spectral_value, N);
  const double d0 = delta_special(0, p, out.basis);
  for (long n = 0; n <= N; ++n) {
    out.coeffs.push_back(out.polynomials[static_cast<std::size_t>(n)] * d0 / delta_special(n, p, out.basis));
  }
  out.notes.push_back("formal: truncation convergence is not certified");
  return out;
}

/// Generalized solution at spectral point z, N + 1 terms, unit f_0.
inline SeriesSolution solve_generalized(const HeunParams& params, std::optional<double> z, long N) {
  if (N < 0) throw DegenerateIndex("negative truncation order");
  HeunParams p = params;
  const BasisParams probe = resolve(p, SolutionCase::Generalized);
  if (z) p.E = energy_for_generalized_z(p, probe, *z);
  SeriesSolution out;
  out.klass = SolutionClass::Generalized;
  out.formal = true;
  out.params = p;
  out.energy = p.E;
  out.basis = resolve(p, SolutionCase::Generalized);
  out.z = generalized_z(p, out.basis);
  const TridiagonalSystem sys = build_case_b(p, out.basis, static_cast<std::size_t>(N) + 1);
  out.polynomials = generate_sequence(sys, sys.spectral_value, N);
  out.coeffs = out.polynomials;
  out.notes.push_back("formal: truncation convergence is not certified");
  return out;
}

struct GridSpec {
  long points = 100;
  double delta = 0.05;
};

inline GridSpec parse_grid(const std::string& s) {
  const auto comma = s.find(',');
  GridSpec g;
  try {
    if (comma == std::string::npos) {
      g.points = std::stol(s);
    } else {
      g.points = std::stol(s.substr(0, comma));
      g.delta = std::stod(s.substr(comma + 1));
    }
  } catch (const std::exception&) {
    throw Error("grid must read <n>,<delta>, got '" + s + "'");
  }
  if (g.points < 1 || !(g.delta > 0.0 && g.delta < 0.5)) throw Error("grid needs n >= 1 and 0 < delta < 0.5");
  return g;
}

struct ResidualReport {
  std::vector<double> grid;
  std::vector<double> residual;
  double norm = 0.0;           // max |residual|
  double relative_norm = 0.0;  // norm over the largest term magnitude
  std::string excluded_neighborhoods;
};

/// Residual of the differential equation for a truncated series on Chebyshev
/// points of [delta, 1-delta] with a delta-neighbourhood of d removed.
inline ResidualReport heun_residual(const HeunParams& p, const SeriesSolution& sol, const GridSpec& g = {},
                                    DerivativeMode mode = DerivativeMode::Analytic) {
  ResidualReport rep;
  std::ostringstream ex;
  ex.precision(17);
  ex << "|x| < " << g.delta << ", |x-1| < " << g.delta;
  const bool d_inside = p.d > g.delta && p.d < 1.0 - g.delta;
  if (d_inside) {
    if (sol.basis.gamma < 0.0) {
      throw SingularPoint("d = " + detail::fmt(p.d) + " lies inside the grid and gamma < 0");
    }
    ex << ", |x-d| < " << g.delta;
  }
  rep.excluded_neighborhoods = ex.str();
  double largest = 0.0;
  for (double x : chebyshev_points(g.delta, 1.0 - g.delta, g.points)) {
    if (std::fabs(x - p.d) < g.delta) continue;
    double y = 0.0, y1 = 0.0, y2 = 0.0;
    for (std::size_t n = 0; n < sol.coeffs.size(); ++n) {
      const double f = sol.coeffs[n];
      if (f == 0.0) continue;
      const BasisJet j = basis_jet(BasisFunction{sol.basis, static_cast<long>(n), p.d}, x, mode);
      y += f * j.value;
      y1 += f * j.d1;
      y2 += f * j.d2;
    }
    const double w = x * (x - 1.0) * (x - p.d);
    const double r = detail::apply_operator(p, x, y, y1, y2) / w;
    const double drift = p.a / x + p.b / (x - 1.0) + p.c / (x - p.d);
    const double pot = (p.A / x + p.B / (x - 1.0) + p.C / (x - p.d) + x * p.D - p.E) / w;
    largest = std::max({largest, std::fabs(y2), std::fabs(drift * y1), std::fabs(pot * y)});
    rep.grid.push_back(x);
    rep.residual.push_back(r);
    rep.norm = std::max(rep.norm, std::fabs(r));
  }
  rep.relative_norm = largest > 0.0 ? rep.norm / largest : rep.norm;
  return rep;
}

/// A copy of the solution with seeded uniform random coefficients in [-1, 1].
inline SeriesSolution randomized_coefficients(const SeriesSolution& sol, unsigned seed, long terms) {
  SeriesSolution out = sol;
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  out.coeffs.assign(static_cast<std::size_t>(std::max(terms, 1L)), 0.0);
  for (double& c : out.coeffs) c = dist(gen);
  out.notes.push_back("randomized coefficients");
  return out;
}

}  // namespace heuntra

#endif  // HEUNTRA_SOLVER_HPP
