#ifndef HEUNTRA_EQUIVALENCE_HPP
#define HEUNTRA_EQUIVALENCE_HPP

// Row-by-row comparison of the Heun recursion systems with the orthogonal
// polynomial families they are claimed to coincide with.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "heuntra/params.hpp"
#include "heuntra/polynomials.hpp"
#include "heuntra/tridiag.hpp"

namespace heuntra {

struct EquivalenceRow {
  long n = 0;
  double lhs_diag = 0.0, rhs_diag = 0.0;
  double lhs_off = 0.0, rhs_off = 0.0;
};

struct EquivalenceReport {
  std::string name;
  std::vector<EquivalenceRow> rows;
  double max_rel_diag = 0.0;
  double max_rel_off = 0.0;
  double expected_offset = 0.0;  // diagonal shift between the two raw systems
  double measured_offset = 0.0;  // mean raw diagonal shift
  double tolerance = 1e-10;
  bool passed = false;
  bool equal_up_to_signs = false;  // off-diagonals agree in magnitude only
  std::vector<std::string> discrepancies;
};

namespace detail {

inline double rel_diff(double lhs, double rhs) {
  return std::fabs(lhs - rhs) / std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
}

// Fills the maxima, the verdict and readable discrepancy lines.
inline void finish_report(EquivalenceReport& rep, const std::vector<double>& raw_shift) {
  double sum = 0.0;
  for (double v : raw_shift) sum += v;
  rep.measured_offset = raw_shift.empty() ? 0.0 : sum / static_cast<double>(raw_shift.size());
  for (const auto& r : rep.rows) {
    const double dd = rel_diff(r.lhs_diag, r.rhs_diag);
    const double od = rel_diff(r.lhs_off, r.rhs_off);
    rep.max_rel_diag = std::max(rep.max_rel_diag, dd);
    rep.max_rel_off = std::max(rep.max_rel_off, od);
    if ((dd > rep.tolerance || od > rep.tolerance) && rep.discrepancies.size() < 8) {
      std::ostringstream os;
      os.precision(17);
      os << "n = " << r.n << ": diag " << r.lhs_diag << " vs " << r.rhs_diag << ", off " << r.lhs_off << " vs "
         << r.rhs_off;
      rep.discrepancies.push_back(os.str());
    }
  }
  if (!raw_shift.empty()) {
    const double lo = *std::min_element(raw_shift.begin(), raw_shift.end());
    const double hi = *std::max_element(raw_shift.begin(), raw_shift.end());
    const double spread = hi - lo;
    if (spread <= rep.tolerance * (1.0 + std::fabs(rep.measured_offset)) &&
        rel_diff(rep.measured_offset, rep.expected_offset) > rep.tolerance) {
      std::ostringstream os;
      os.precision(17);
      os << "systematic diagonal offset " << rep.measured_offset << " (expected " << rep.expected_offset << ")";
      rep.discrepancies.push_back(os.str());
    }
  }
  rep.passed = rep.max_rel_diag <= rep.tolerance && rep.max_rel_off <= rep.tolerance;
  if (!rep.passed && rep.max_rel_diag <= rep.tolerance) {
    double worst = 0.0;
    for (const auto& r : rep.rows) worst = std::max(worst, rel_diff(std::fabs(r.lhs_off), std::fabs(r.rhs_off)));
    if (worst <= rep.tolerance) {
      rep.equal_up_to_signs = true;
      rep.discrepancies.push_back("off-diagonals agree in magnitude; the systems are related by f_n -> eps_n f_n");
    }
  }
}

inline void scale_off(TridiagonalSystem& sys, double g_scale) {
  for (double& t : sys.off) t *= g_scale;
}

}  // namespace detail

/// Restricted case (c) against Wilson polynomials with parameters
/// (sigma - tau, sigma + tau, gamma, gamma): s_n = -(W_diag + gamma^2), t_n = -W_off.
/// g_scale multiplies the Heun off-diagonals (a perturbation hook for tests).
inline EquivalenceReport restricted_vs_wilson(const HeunParams& p, long nmax, double g_scale = 1.0) {
  EquivalenceReport rep;
  rep.name = "restricted (c) vs Wilson";
  const BasisParams bp = resolve(p, SolutionCase::RestrictedC);
  TridiagonalSystem sys = build_case_c(p, bp, static_cast<std::size_t>(nmax) + 1);
  detail::scale_off(sys, g_scale);
  const PairedWilsonParams pw = restricted_wilson_params(p, bp);
  rep.expected_offset = -pw.gamma * pw.gamma;
  std::vector<double> shift;
  for (long n = 0; n <= nmax; ++n) {
    const RecursionRow w = paired_wilson_row(n, pw, 0.0, false);
    const auto i = static_cast<std::size_t>(n);
    rep.rows.push_back({n, sys.diag[i], -(w.diag + pw.gamma * pw.gamma), sys.off[i], -w.sup});
    shift.push_back(sys.diag[i] + w.diag);
  }
  detail::finish_report(rep, shift);
  return rep;
}

/// Generalized case (b) against the deformed Wilson family with lambda = d:
/// W_diag = s_n - (nu+1)^2/4 and W_off = t_n.
inline EquivalenceReport generalized_vs_modified_wilson(const HeunParams& p, long nmax, double g_scale = 1.0) {
  EquivalenceReport rep;
  rep.name = "generalized (b) vs deformed Wilson";
  const BasisParams bp = resolve(p, SolutionCase::Generalized);
  TridiagonalSystem sys = build_case_b(p, bp, static_cast<std::size_t>(nmax) + 1);
  detail::scale_off(sys, g_scale);
  const PairedWilsonParams pw = generalized_wilson_params(p, bp);
  rep.expected_offset = generalized_shift(bp);
  std::vector<double> shift;
  for (long n = 0; n <= nmax; ++n) {
    const RecursionRow w = paired_wilson_row(n, pw, p.d, true);
    const auto i = static_cast<std::size_t>(n);
    rep.rows.push_back({n, w.diag, sys.diag[i] + sys.shift, w.sup, sys.off[i]});
    shift.push_back(w.diag - sys.diag[i]);
  }
  detail::finish_report(rep, shift);
  return rep;
}

/// Special case (a) against the Q family at cos(theta) = 2d - 1 and
/// sigma^2 = (a+b+c-1)^2/4 - D, for 0 < d < 1.
inline EquivalenceReport special_vs_q(const HeunParams& p, long nmax, double g_scale = 1.0) {
  EquivalenceReport rep;
  rep.name = "special (a) vs Q";
  if (!(p.d > 0.0 && p.d < 1.0)) throw RegimeError("the Q family needs 0 < d < 1");
  const BasisParams bp = resolve(p, SolutionCase::Special);
  TridiagonalSystem sys = build_case_a(p, bp, static_cast<std::size_t>(nmax) + 1);
  detail::scale_off(sys, g_scale);
  const QFamily q{bp.mu, bp.nu, quarter_abc_sq(p) - p.D, std::acos(2.0 * p.d - 1.0)};
  const double z = special_z(p);
  std::vector<double> shift;
  for (long n = 0; n <= nmax; ++n) {
    const FamilyRow r = q_row(n, q);
    const auto i = static_cast<std::size_t>(n);
    const double q_diag = z * r.weight + r.diag;
    rep.rows.push_back({n, sys.diag[i], q_diag, sys.off[i], r.off});
    shift.push_back(sys.diag[i] - q_diag);
  }
  detail::finish_report(rep, shift);
  // The spectral points must agree as well: (2d-1) against cos(theta).
  const double cos_gap = detail::rel_diff(sys.spectral_value, std::cos(q.theta));
  if (cos_gap > rep.tolerance) {
    rep.passed = false;
    rep.discrepancies.push_back("spectral point 2d-1 differs from cos(theta)");
  }
  return rep;
}

/// Restricted case (d) against case (c) of the exchanged parameters: equal
/// diagonals and off-diagonals of opposite sign (f_n -> (-1)^n f_n).
inline EquivalenceReport restricted_d_vs_mapped_c(const HeunParams& p, long nmax, double g_scale = 1.0) {
  EquivalenceReport rep;
  rep.name = "restricted (d) vs exchanged (c)";
  const BasisParams bd = resolve(p, SolutionCase::RestrictedD);
  TridiagonalSystem sd = build_case_d(p, bd, static_cast<std::size_t>(nmax) + 1);
  detail::scale_off(sd, g_scale);
  const HeunParams q = map_c_to_d(p);
  const BasisParams bc = resolve(q, SolutionCase::RestrictedC);
  const TridiagonalSystem sc = build_case_c(q, bc, static_cast<std::size_t>(nmax) + 1);
  std::vector<double> shift;
  for (long n = 0; n <= nmax; ++n) {
    const auto i = static_cast<std::size_t>(n);
    rep.rows.push_back({n, sd.diag[i], sc.diag[i], sd.off[i], -sc.off[i]});
    shift.push_back(sd.diag[i] - sc.diag[i]);
  }
  detail::finish_report(rep, shift);
  return rep;
}

}  // namespace heuntra

#endif  // HEUNTRA_EQUIVALENCE_HPP
