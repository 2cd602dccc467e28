#ifndef HEUNTRA_JACOBI_HPP
#define HEUNTRA_JACOBI_HPP

// Jacobi polynomials on the shifted interval [0,1]: P_n^{(mu,nu)}(x) is
// orthogonal with respect to x^nu (1-x)^mu and P_n(1) = (mu+1)_n / n!.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "heuntra/error.hpp"
#include "heuntra/recursion_coeffs.hpp"
#include "heuntra/special.hpp"
#include "heuntra/symmetric_eigen.hpp"

namespace heuntra {

struct JacobiIndex {
  double mu = 0.0;
  double nu = 0.0;

  void validate() const { require_jacobi_index(mu, nu); }
};

enum class DerivativeMode { Analytic, Richardson };

/// P_0 .. P_nmax at x by upward recursion seeded with the closed forms of
/// degrees 0 and 1, so every recursion denominator has 2n+mu+nu > 0.
inline std::vector<double> jacobi_values(long nmax, const JacobiIndex& idx, double x) {
  idx.validate();
  if (nmax < 0) return {};
  const double mu = idx.mu;
  const double nu = idx.nu;
  std::vector<double> p(static_cast<std::size_t>(nmax) + 1);
  p[0] = 1.0;
  if (nmax == 0) return p;
  p[1] = (mu + 1.0) - (mu + nu + 2.0) * (1.0 - x);
  for (long n = 1; n < nmax; ++n) {
    const double k = static_cast<double>(n);
    const double m = 2.0 * k + mu + nu;
    const double diag = 0.5 * ((nu * nu - mu * mu) / (m * (m + 2.0)) + 1.0);
    const double lower = (k + mu) * (k + nu) / (m * (m + 1.0));
    const double upper = (k + 1.0) * (k + mu + nu + 1.0) / ((m + 1.0) * (m + 2.0));
    p[n + 1] = ((x - diag) * p[n] - lower * p[n - 1]) / upper;
  }
  return p;
}

inline double jacobi_eval(long n, const JacobiIndex& idx, double x) {
  if (n < 0) throw DegenerateIndex("negative Jacobi degree");
  return jacobi_values(n, idx, x)[static_cast<std::size_t>(n)];
}

/// Direct summation of the terminating 2F1 representation; an independent
/// path used to cross-check the recursion. The expansion is taken about the
/// nearer endpoint, P_n^{(mu,nu)}(x) = (-1)^n P_n^{(nu,mu)}(1-x), to limit cancellation.
inline double jacobi_eval_series(long n, const JacobiIndex& idx, double x) {
  idx.validate();
  const bool near_zero = x < 0.5;
  const double mu = near_zero ? idx.nu : idx.mu;
  const double nu = near_zero ? idx.mu : idx.nu;
  const double sign = near_zero && n % 2 == 1 ? -1.0 : 1.0;
  const double lead = std::exp(std::lgamma(n + mu + 1.0) - std::lgamma(n + 1.0) - std::lgamma(mu + 1.0));
  // The alternating terms cancel, so they are carried in extended precision.
  long double sum = 0.0L;
  long double term = 1.0L;
  const long double y = near_zero ? static_cast<long double>(x) : 1.0L - static_cast<long double>(x);
  for (long k = 0; k <= n; ++k) {
    sum += term;
    const long double kk = static_cast<long double>(k);
    term *= (kk - n) * (n + mu + nu + 1.0L + kk) / ((mu + 1.0L + kk) * (kk + 1.0L)) * y;
  }
  return sign * lead * static_cast<double>(sum);
}

namespace detail {

// Coefficients of P_{n-1}, P_n, P_{n+1} in x(1-x) P_n'.
struct DerivativeCombo {
  double lower = 0.0;
  double mid = 0.0;
  double upper = 0.0;
};

inline DerivativeCombo derivative_combo(long n, double mu, double nu) {
  if (n == 0) return {};
  const double k = static_cast<double>(n);
  const double m = 2.0 * k + mu + nu;
  const double lead = k + mu + nu + 1.0;
  return {lead * (k + mu) * (k + nu) / (m * (m + 1.0)),
          lead * (mu - nu) * k / (m * (m + 2.0)),
          -lead * k * (k + 1.0) / ((m + 1.0) * (m + 2.0))};
}

inline double apply_combo(const std::vector<double>& p, long n, double mu, double nu) {
  if (n == 0) return 0.0;
  const DerivativeCombo c = derivative_combo(n, mu, nu);
  const auto i = static_cast<std::size_t>(n);
  return c.lower * p[i - 1] + c.mid * p[i] + c.upper * p[i + 1];
}

}  // namespace detail

/// x(1-x) dP_n/dx as the three-term combination of neighbouring degrees.
inline double jacobi_x_derivative_combo(long n, const JacobiIndex& idx, double x) {
  if (n < 0) throw DegenerateIndex("negative Jacobi degree");
  if (n == 0) return 0.0;
  const auto p = jacobi_values(n + 1, idx, x);
  return detail::apply_combo(p, n, idx.mu, idx.nu);
}

/// Value and first two x-derivatives of P_n.
struct JacobiJet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// Analytic jet for 0 < x < 1. The second derivative comes from applying the
/// derivative combination twice, so it is independent of the Jacobi ODE.
inline JacobiJet jacobi_jet(long n, const JacobiIndex& idx, double x) {
  if (n < 0) throw DegenerateIndex("negative Jacobi degree");
  if (!(x > 0.0 && x < 1.0)) throw SingularPoint("Jacobi derivatives need 0 < x < 1");
  const auto p = jacobi_values(n + 2, idx, x);
  const double w = x * (1.0 - x);
  JacobiJet jet;
  jet.value = p[static_cast<std::size_t>(n)];
  if (n == 0) return jet;
  const double mu = idx.mu;
  const double nu = idx.nu;
  const double wd1 = detail::apply_combo(p, n, mu, nu);
  jet.d1 = wd1 / w;
  const detail::DerivativeCombo c = detail::derivative_combo(n, mu, nu);
  const double lower_d1 = detail::apply_combo(p, n - 1, mu, nu) / w;
  const double upper_d1 = detail::apply_combo(p, n + 1, mu, nu) / w;
  const double rhs = c.lower * lower_d1 + c.mid * jet.d1 + c.upper * upper_d1;
  jet.d2 = (rhs - (1.0 - 2.0 * x) * jet.d1) / w;
  return jet;
}

inline double jacobi_derivative(long n, const JacobiIndex& idx, double x) {
  return jacobi_jet(n, idx, x).d1;
}

/// Richardson-extrapolated central difference of the analytic first derivative.
inline double jacobi_second_derivative_richardson(long n, const JacobiIndex& idx, double x) {
  const double reach = std::min(x, 1.0 - x);
  const double h = 1e-3 * reach;
  auto central = [&](double step) {
    return (jacobi_derivative(n, idx, x + step) - jacobi_derivative(n, idx, x - step)) / (2.0 * step);
  };
  const double coarse = central(h);
  const double fine = central(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

inline double jacobi_second_derivative(long n, const JacobiIndex& idx, double x,
                                       DerivativeMode mode = DerivativeMode::Analytic) {
  if (mode == DerivativeMode::Richardson) return jacobi_second_derivative_richardson(n, idx, x);
  return jacobi_jet(n, idx, x).d2;
}

/// Left side of the Jacobi differential equation; exactly zero in exact arithmetic.
inline double jacobi_ode_residual(long n, const JacobiIndex& idx, double x,
                                  DerivativeMode mode = DerivativeMode::Analytic) {
  const JacobiJet jet = jacobi_jet(n, idx, x);
  const double d2 = mode == DerivativeMode::Analytic ? jet.d2 : jacobi_second_derivative_richardson(n, idx, x);
  const double k = static_cast<double>(n);
  return x * (1.0 - x) * d2 + (idx.nu + 1.0 - x * (idx.mu + idx.nu + 2.0)) * jet.d1 +
         k * (k + idx.mu + idx.nu + 1.0) * jet.value;
}

/// ln c_n with c_n^2 = (2n+mu+nu+1) n! Gamma(n+mu+nu+1) / (Gamma(n+mu+1) Gamma(n+nu+1)).
inline double jacobi_log_norm_constant(long n, const JacobiIndex& idx) {
  idx.validate();
  if (n < 0) throw DegenerateIndex("negative Jacobi degree");
  const double mu = idx.mu;
  const double nu = idx.nu;
  const double k = static_cast<double>(n);
  double log_sq;
  if (n == 0) {
    // (mu+nu+1) Gamma(mu+nu+1) folded into Gamma(mu+nu+2).
    log_sq = std::lgamma(mu + nu + 2.0) - std::lgamma(mu + 1.0) - std::lgamma(nu + 1.0);
  } else {
    log_sq = std::log(2.0 * k + mu + nu + 1.0) + std::lgamma(k + 1.0) + std::lgamma(k + mu + nu + 1.0) -
             std::lgamma(k + mu + 1.0) - std::lgamma(k + nu + 1.0);
  }
  return 0.5 * log_sq;
}

inline double jacobi_norm_constant(long n, const JacobiIndex& idx) {
  return std::exp(jacobi_log_norm_constant(n, idx));
}

/// A quadrature rule on [0,1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Jacobi rule for the weight x^nu (1-x)^mu, built by Golub-Welsch from
/// the normalized recursion coefficients.
inline QuadratureRule gauss_jacobi(long order, const JacobiIndex& idx) {
  idx.validate();
  if (order < 1) throw DegenerateIndex("quadrature order must be positive");
  std::vector<double> diag(static_cast<std::size_t>(order));
  std::vector<double> off(static_cast<std::size_t>(order), 0.0);
  for (long k = 0; k < order; ++k) {
    diag[k] = 0.5 * (coeff_F(k, idx.mu, idx.nu) + 1.0);
    off[k] = coeff_G(k, idx.mu, idx.nu);
  }
  const TridiagonalEigen eig = symmetric_tridiagonal_eigen(diag, off);
  const double mass = std::exp(log_beta(idx.nu + 1.0, idx.mu + 1.0));
  QuadratureRule rule;
  rule.nodes = eig.values;
  rule.weights.reserve(eig.values.size());
  for (double v : eig.first_components) rule.weights.push_back(mass * v * v);
  return rule;
}

struct OrthogonalityResult {
  double value = 0.0;
  bool order_sufficient = true;
  std::string warning;
};

/// Integral of x^nu (1-x)^mu c_n c_m P_n P_m over [0,1] by Gauss-Jacobi quadrature.
inline OrthogonalityResult orthogonality_check(long n, long m, const JacobiIndex& idx, long quad_order) {
  OrthogonalityResult out;
  // An order-q Gauss rule is exact through degree 2q-1.
  if (2 * quad_order - 1 < n + m) {
    out.order_sufficient = false;
    out.warning = "quadrature order " + std::to_string(quad_order) + " too small for degrees " +
                  std::to_string(n) + " and " + std::to_string(m);
  }
  const QuadratureRule rule = gauss_jacobi(quad_order, idx);
  const double cn = jacobi_norm_constant(n, idx);
  const double cm = jacobi_norm_constant(m, idx);
  const long top = std::max(n, m);
  CompensatedSum sum;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const auto p = jacobi_values(top, idx, rule.nodes[i]);
    sum += rule.weights[i] * cn * p[static_cast<std::size_t>(n)] * cm * p[static_cast<std::size_t>(m)];
  }
  out.value = sum.value();
  return out;
}

}  // namespace heuntra

#endif  // HEUNTRA_JACOBI_HPP
