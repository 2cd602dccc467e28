#ifndef HEUNTRA_TRIDIAG_HPP
#define HEUNTRA_TRIDIAG_HPP

// Recursion systems for the four solution cases, truncated Jacobi-matrix
// spectra and Golub-Welsch measures.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "heuntra/error.hpp"
#include "heuntra/params.hpp"
#include "heuntra/polynomials.hpp"
#include "heuntra/recursion_coeffs.hpp"
#include "heuntra/symmetric_eigen.hpp"
#include "heuntra/system.hpp"

namespace heuntra {

/// (n + (mu+nu+1)/2)^2 - (a+b+c-1)^2/4 + D, the special-case row factor.
inline double delta_special(long n, const HeunParams& p, const BasisParams& bp) {
  const double h = static_cast<double>(n) + 0.5 * (bp.mu + bp.nu + 1.0);
  return h * h - quarter_abc_sq(p) + p.D;
}

/// (n + (mu+nu)/2 + 1)^2 - (a+b+c-1)^2/4 + D, the generalized-case row factor.
inline double delta_generalized(long n, const HeunParams& p, const BasisParams& bp) {
  const double h = static_cast<double>(n) + 0.5 * (bp.mu + bp.nu) + 1.0;
  return h * h - quarter_abc_sq(p) + p.D;
}

/// (n + (mu+nu)/2 + 1)^2 - (a+b+c-1)^2/4, the restricted-case row factor.
inline double delta_restricted(long n, const HeunParams& p, const BasisParams& bp) {
  const double h = static_cast<double>(n) + 0.5 * (bp.mu + bp.nu) + 1.0;
  return h * h - quarter_abc_sq(p);
}

/// Special case in its native form: (2d-1) f_n = s_n f_n + 2G_{n-1} f_{n-1} + 2G_n f_{n+1}.
inline TridiagonalSystem build_case_a(const HeunParams& p, const BasisParams& bp, std::size_t rows) {
  check_constraints(p, SolutionCase::Special);
  const double num = 2.0 * (p.d * p.D + compute_R(p)) - p.c * (p.d * (p.a + p.b) - p.a);
  TridiagonalSystem sys;
  sys.label = "case-a";
  sys.variable = "2d-1";
  sys.spectral_value = 2.0 * p.d - 1.0;
  for (std::size_t i = 0; i < rows; ++i) {
    const long n = static_cast<long>(i);
    const double delta = delta_special(n, p, bp);
    if (delta == 0.0) throw ZeroDenominator("special row factor Δ_n", n);
    sys.push(num / delta + coeff_F(n, bp.mu, bp.nu), 2.0 * coeff_G(n, bp.mu, bp.nu));
  }
  return sys;
}

/// Special case as a weighted problem in z = 2K/omega, omega = sqrt|1-(2d-1)^2|:
///   z (omega/Δ_n) f_n = (2d-1-F_n) f_n - 2G_{n-1} f_{n-1} - 2G_n f_{n+1}.
/// For 0 < d < 1 this is the Q family at cos(theta) = 2d-1, otherwise the G family.
inline TridiagonalSystem build_case_a_spectral(const HeunParams& p, const BasisParams& bp, std::size_t rows) {
  check_constraints(p, SolutionCase::Special);
  const double omega = special_omega(p.d);
  if (omega == 0.0) throw RegimeError("special spectral form needs d ≠ 0, 1");
  TridiagonalSystem sys;
  sys.label = (p.d > 0.0 && p.d < 1.0) ? "case-a-Q" : "case-a-G";
  sys.coupling = Coupling::Weighted;
  sys.spectral_value = special_z(p);
  for (std::size_t i = 0; i < rows; ++i) {
    const long n = static_cast<long>(i);
    const double delta = delta_special(n, p, bp);
    if (delta == 0.0) throw ZeroDenominator("special row factor Δ_n", n);
    sys.push(2.0 * p.d - 1.0 - coeff_F(n, bp.mu, bp.nu), -2.0 * coeff_G(n, bp.mu, bp.nu), omega / delta);
  }
  return sys;
}

/// True when 2γ + c = 1, the condition for a symmetric generalized representation.
inline bool generalized_is_symmetric(const HeunParams& p, const BasisParams& bp) {
  return std::fabs(2.0 * bp.gamma + p.c - 1.0) <= 1e-8 * (1.0 + std::fabs(p.c));
}

/// Generalized case: L f_n = s_n f_n + t_{n-1} f_{n-1} + t_n f_{n+1} with the
/// raw left scalar L; the reported variable is z = L - (nu+1)^2/4.
inline TridiagonalSystem build_case_b(const HeunParams& p, const BasisParams& bp, std::size_t rows) {
  check_constraints(p, SolutionCase::Generalized);
  if (!generalized_is_symmetric(p, bp)) {
    throw ConstraintViolation("2γ + c = 1, i.e. (1−c)² + 4C/(d(1−d)) = 0",
                              "the generalized representation is symmetric only for this C");
  }
  TridiagonalSystem sys;
  sys.label = "case-b";
  sys.spectral_value = generalized_L(p, bp);
  sys.shift = generalized_shift(bp);
  for (std::size_t i = 0; i < rows; ++i) {
    const long n = static_cast<long>(i);
    const double k = static_cast<double>(n);
    const double delta = delta_generalized(n, p, bp);
    const double F = coeff_F(n, bp.mu, bp.nu);
    const double s = -ratio_n_mu(n, bp.mu, bp.nu) + p.d * k + 0.5 * (F + 1.0 - 2.0 * p.d) * delta;
    sys.push(s, coeff_G(n, bp.mu, bp.nu) * delta);
  }
  return sys;
}

/// Restricted case (c): 0 = s_n f_n + t_{n-1} f_{n-1} + t_n f_{n+1}.
inline TridiagonalSystem build_case_c(const HeunParams& p, const BasisParams& bp, std::size_t rows) {
  check_constraints(p, SolutionCase::RestrictedC);
  TridiagonalSystem sys;
  sys.label = "case-c";
  sys.spectral_value = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    const long n = static_cast<long>(i);
    const double delta = delta_restricted(n, p, bp);
    const double F = coeff_F(n, bp.mu, bp.nu);
    sys.push(ratio_n_mu(n, bp.nu, bp.mu) + 0.5 * (F - 1.0) * delta, coeff_G(n, bp.mu, bp.nu) * delta);
  }
  return sys;
}

/// Restricted case (d), the mirror image of case (c).
inline TridiagonalSystem build_case_d(const HeunParams& p, const BasisParams& bp, std::size_t rows) {
  check_constraints(p, SolutionCase::RestrictedD);
  TridiagonalSystem sys;
  sys.label = "case-d";
  sys.spectral_value = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    const long n = static_cast<long>(i);
    const double delta = delta_restricted(n, p, bp);
    const double F = coeff_F(n, bp.mu, bp.nu);
    sys.push(ratio_n_mu(n, bp.mu, bp.nu) - 0.5 * (F + 1.0) * delta, -coeff_G(n, bp.mu, bp.nu) * delta);
  }
  return sys;
}

/// Parameters (sigma, tau, gamma) of the Wilson family attached to a restricted
/// case-(c) basis: 2 sigma = nu + 1, 2 gamma = mu + 1, 2 tau = |a+b+c-1|.
inline PairedWilsonParams restricted_wilson_params(const HeunParams& p, const BasisParams& bp) {
  const double tau = 0.5 * std::fabs(p.a + p.b + p.c - 1.0);
  return {0.5 * (bp.nu + 1.0), tau * tau, 0.5 * (bp.mu + 1.0)};
}

/// Parameters of the deformed Wilson family attached to a generalized basis:
/// 2 sigma = mu + 1, 2 gamma = nu + 1, 4 tau^2 = (a+b+c-1)^2 - 4D, lambda = d.
inline PairedWilsonParams generalized_wilson_params(const HeunParams& p, const BasisParams& bp) {
  return {0.5 * (bp.mu + 1.0), quarter_abc_sq(p) - p.D, 0.5 * (bp.nu + 1.0)};
}

struct TruncationEigen {
  long N = 0;
  std::vector<double> values;   // reported variable, ascending
  std::vector<double> weights;  // squared first eigenvector components (symmetric solves only)
  bool symmetric = true;
  std::vector<std::string> warnings;
};

/// Eigenvalues of the N-row truncation. Weighted systems are symmetrized with
/// the inverse square root of a positive weight; an indefinite weight falls
/// back to the general eigenproblem of W^{-1} M and keeps the real eigenvalues.
inline TruncationEigen truncation_eigen(const TridiagonalSystem& sys, long N) {
  if (N < 1) throw DegenerateIndex("truncation size must be positive");
  if (static_cast<std::size_t>(N) > sys.size()) {
    throw DegenerateIndex("system has " + std::to_string(sys.size()) + " rows, truncation needs " +
                          std::to_string(N));
  }
  TruncationEigen out;
  out.N = N;
  const auto n = static_cast<std::size_t>(N);
  bool positive = true;
  for (std::size_t i = 0; i < n; ++i) positive = positive && sys.weight[i] > 0.0;
  if (positive) {
    std::vector<double> diag(n), off(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      diag[i] = sys.diag[i] / sys.weight[i];
      if (i + 1 < n) off[i] = sys.off[i] / std::sqrt(sys.weight[i] * sys.weight[i + 1]);
    }
    const TridiagonalEigen eig = symmetric_tridiagonal_eigen(diag, off);
    out.values.reserve(n);
    for (double v : eig.values) out.values.push_back(v + sys.shift);
    for (double c : eig.first_components) out.weights.push_back(c * c);
    return out;
  }
  out.symmetric = false;
  out.warnings.push_back("indefinite weight: solved the unsymmetrized pencil");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    if (sys.weight[i] == 0.0) throw ZeroDenominator("weight w_n", static_cast<long>(i));
    m(r, r) = sys.diag[i] / sys.weight[i];
    if (i + 1 < n) {
      m(r, r + 1) = sys.off[i] / sys.weight[i];
      m(r + 1, r) = sys.off[i] / sys.weight[i + 1];
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  long complex_count = 0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const auto ev = solver.eigenvalues()(i);
    if (std::fabs(ev.imag()) <= 1e-9 * (1.0 + std::fabs(ev.real()))) {
      out.values.push_back(ev.real() + sys.shift);
    } else {
      ++complex_count;
    }
  }
  std::sort(out.values.begin(), out.values.end());
  if (complex_count > 0) {
    out.warnings.push_back(std::to_string(complex_count) + " ill-conditioned (complex) eigenvalues dropped");
  }
  return out;
}

struct SpectrumOptions {
  std::vector<long> sizes{100, 200, 400};
  double tolerance = 1e-6;
  bool parallel = true;
};

struct SpectrumReport {
  std::vector<long> truncation_sizes;
  std::vector<TruncationEigen> truncations;
  std::vector<double> discrete_points;  // converged and outside the continuous side
  std::vector<double> embedded_points;  // converged but inside the continuous side
  std::string continuous_indicator;     // "both signs", "positive", "negative" or "none"
  std::string classification;
  double tolerance = 1e-6;
  std::string variable = "z";
  std::vector<std::string> warnings;

  /// Flags of the second-largest truncation's eigenvalues.
  std::vector<bool> converged;
};

inline const std::string kPureContinuous = "pure-continuous ℝ";
inline const std::string kContinuousPositive = "continuous z>0";
inline const std::string kContinuousNegative = "continuous z<0";
inline const std::string kMixedPositive = "mixed: continuous z>0, discrete z_k<0";
inline const std::string kMixedNegative = "mixed: continuous z<0, discrete z_k>0";
inline const std::string kPureDiscrete = "pure-discrete";

/// Truncated Jacobi-matrix spectra at several sizes, classified by convergence
/// between the two largest sizes: converged eigenvalues are point candidates,
/// the signs of the rest give the continuous side.
inline SpectrumReport jacobi_matrix_spectrum(const TridiagonalSystem& sys, const SpectrumOptions& opt = {}) {
  if (opt.sizes.empty()) throw DegenerateIndex("no truncation sizes");
  std::vector<long> sizes = opt.sizes;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes.front() < 2) throw DegenerateIndex("truncation sizes must be at least 2");

  SpectrumReport rep;
  rep.truncation_sizes = sizes;
  rep.tolerance = opt.tolerance;
  rep.variable = sys.variable;
  if (opt.parallel && sizes.size() > 1) {
    std::vector<std::future<TruncationEigen>> jobs;
    jobs.reserve(sizes.size());
    for (long N : sizes) jobs.push_back(std::async(std::launch::async, [&sys, N] { return truncation_eigen(sys, N); }));
    for (auto& j : jobs) rep.truncations.push_back(j.get());
  } else {
    for (long N : sizes) rep.truncations.push_back(truncation_eigen(sys, N));
  }
  for (const auto& t : rep.truncations) {
    for (const auto& w : t.warnings) rep.warnings.push_back("N = " + std::to_string(t.N) + ": " + w);
  }

  const TruncationEigen& big = rep.truncations.back();
  const TruncationEigen& ref = rep.truncations.size() > 1 ? rep.truncations[rep.truncations.size() - 2] : big;
  bool pos = false, neg = false;
  std::vector<double> stable;
  rep.converged.assign(ref.values.size(), false);
  for (std::size_t i = 0; i < ref.values.size(); ++i) {
    const double e = ref.values[i];
    auto it = std::lower_bound(big.values.begin(), big.values.end(), e);
    double best = std::numeric_limits<double>::infinity();
    double match = e;
    if (it != big.values.end() && std::fabs(*it - e) < best) {
      best = std::fabs(*it - e);
      match = *it;
    }
    if (it != big.values.begin() && std::fabs(*(it - 1) - e) < best) {
      best = std::fabs(*(it - 1) - e);
      match = *(it - 1);
    }
    if (&ref != &big && best < opt.tolerance) {
      rep.converged[i] = true;
      stable.push_back(match);
    } else {
      if (e > 0.0) pos = true;
      if (e < 0.0) neg = true;
    }
  }

  if (pos && neg) {
    rep.continuous_indicator = "both signs";
    rep.classification = kPureContinuous;
    rep.embedded_points = stable;
  } else if (pos || neg) {
    rep.continuous_indicator = pos ? "positive" : "negative";
    for (double v : stable) {
      const bool outside = pos ? v < 0.0 : v > 0.0;
      (outside ? rep.discrete_points : rep.embedded_points).push_back(v);
    }
    if (pos) rep.classification = rep.discrete_points.empty() ? kContinuousPositive : kMixedPositive;
    else rep.classification = rep.discrete_points.empty() ? kContinuousNegative : kMixedNegative;
  } else {
    rep.continuous_indicator = "none";
    rep.classification = kPureDiscrete;
    rep.discrete_points = stable;
  }
  return rep;
}

struct MeasurePoint {
  double node = 0.0;
  double weight = 0.0;
};

/// Nodes and weights of the N-point Gauss rule of the system's orthogonality
/// measure, normalized to unit mass.
inline std::vector<MeasurePoint> golub_welsch_measure(const TridiagonalSystem& sys, long N) {
  const TruncationEigen t = truncation_eigen(sys, N);
  if (!t.symmetric) throw RegimeError("Golub-Welsch needs a positive weight");
  std::vector<MeasurePoint> out;
  out.reserve(t.values.size());
  for (std::size_t i = 0; i < t.values.size(); ++i) out.push_back({t.values[i], t.weights[i]});
  return out;
}

}  // namespace heuntra

#endif  // HEUNTRA_TRIDIAG_HPP
