#ifndef HEUNTRA_PARAMS_HPP
#define HEUNTRA_PARAMS_HPP

// Equation parameters, basis parameters and the feasibility rows that relate
// them for the four solution cases.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "heuntra/error.hpp"
#include "heuntra/recursion_coeffs.hpp"
#include "heuntra/special.hpp"

namespace heuntra {

/// The nine real parameters of the equation
///   y'' + (a/x + b/(x-1) + c/(x-d)) y'
///       + [A/x + B/(x-1) + C/(x-d) + xD - E] / (x(x-1)(x-d)) y = 0.
struct HeunParams {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.5;
  double A = 0.0, B = 0.0, C = 0.0, D = 0.0, E = 0.0;

  void validate() const {
    const double all[] = {a, b, c, d, A, B, C, D, E};
    for (double v : all) {
      if (!std::isfinite(v)) throw ConstraintViolation("all parameters finite");
    }
    if (d == 0.0 || d == 1.0) throw ConstraintViolation("d ≠ 0, 1");
  }

  bool operator==(const HeunParams&) const = default;
};

enum class SolutionCase { Special, Generalized, RestrictedC, RestrictedD };

inline std::string case_tag(SolutionCase k) {
  switch (k) {
    case SolutionCase::Special: return "a";
    case SolutionCase::Generalized: return "b";
    case SolutionCase::RestrictedC: return "c";
    case SolutionCase::RestrictedD: return "d";
  }
  return "?";
}

inline std::string case_name(SolutionCase k) {
  switch (k) {
    case SolutionCase::Special: return "special";
    case SolutionCase::Generalized: return "generalized";
    case SolutionCase::RestrictedC: return "restricted-c";
    case SolutionCase::RestrictedD: return "restricted-d";
  }
  return "?";
}

inline SolutionCase parse_case(const std::string& s) {
  if (s == "a" || s == "special") return SolutionCase::Special;
  if (s == "b" || s == "generalized") return SolutionCase::Generalized;
  if (s == "c" || s == "restricted-c") return SolutionCase::RestrictedC;
  if (s == "d" || s == "restricted-d") return SolutionCase::RestrictedD;
  throw Error("unknown solution case '" + s + "' (expected a, b, c or d)");
}

inline bool is_restricted(SolutionCase k) {
  return k == SolutionCase::RestrictedC || k == SolutionCase::RestrictedD;
}

/// Exponents of x, (1-x), |x-d| and the Jacobi index of the basis.
struct BasisParams {
  double alpha = 0.0, beta = 0.0, gamma = 0.0, mu = 0.0, nu = 0.0;
  SolutionCase kase = SolutionCase::Special;
  std::vector<std::string> notes;
};

inline double compute_R(const HeunParams& p) {
  return p.A / p.d - p.B / (1.0 - p.d) + (2.0 * p.d - 1.0) / (1.0 - p.d) * (p.C / p.d) - p.E;
}

/// (a+b+c-1)^2 / 4, the squared pole-strength combination shared by all cases.
inline double quarter_abc_sq(const HeunParams& p) {
  const double s = p.a + p.b + p.c - 1.0;
  return 0.25 * s * s;
}

namespace detail {

inline double row_tolerance(std::initializer_list<double> terms) {
  double mag = 1.0;
  for (double t : terms) mag += std::fabs(t);
  return 1e-10 * mag;
}

inline void require_le(double lhs, double rhs, const std::string& row) {
  if (lhs - rhs > row_tolerance({lhs, rhs})) {
    std::ostringstream os;
    os.precision(17);
    os << "lhs = " << lhs << ", rhs = " << rhs;
    throw ConstraintViolation(row, os.str());
  }
}

inline void require_eq(double lhs, double rhs, const std::string& row) {
  if (std::fabs(lhs - rhs) > row_tolerance({lhs, rhs})) {
    std::ostringstream os;
    os.precision(17);
    os << "lhs = " << lhs << ", rhs = " << rhs;
    throw ConstraintViolation(row, os.str());
  }
}

// Root of u^2 = sq for an index = u - shift, nonnegative u first.
inline double index_from_square(double sq, double shift, const std::string& what, std::vector<std::string>& notes) {
  const double r = std::sqrt(std::max(sq, 0.0));
  if (r - shift > -1.0) return r - shift;
  if (-r - shift > -1.0) {
    notes.push_back(what + ": negative root taken");
    return -r - shift;
  }
  std::ostringstream os;
  os.precision(17);
  os << what << " has no root with index > -1 (square = " << sq << ")";
  throw BranchInfeasible(os.str());
}

}  // namespace detail

inline const std::string kRowA = "4A/d ≤ (1−a)²";
inline const std::string kRowB = "4B/(1−d) ≤ (1−b)²";
inline const std::string kRowCIneq = "4C/(d(1−d)) ≥ −(1−c)²";
inline const std::string kRowCEq = "1 = (1−c)² + 4C/(d(1−d))";
inline const std::string kRowD = "D = 0";
inline const std::string kRowE = "A/d − B/(1−d) + (2d−1)C/((1−d)d) − E = (c/2)[d(a+b) − a]";

/// Right side of the energy row: (c/2)[d(a+b) - a].
inline double energy_row_rhs(const HeunParams& p) { return 0.5 * p.c * (p.d * (p.a + p.b) - p.a); }

inline double c_row_value(const HeunParams& p) {
  return (1.0 - p.c) * (1.0 - p.c) + 4.0 * p.C / (p.d * (1.0 - p.d));
}

/// Checks the feasibility rows of a case; throws ConstraintViolation naming the first failure.
inline void check_constraints(const HeunParams& p, SolutionCase k) {
  p.validate();
  detail::require_le(4.0 * p.A / p.d, (1.0 - p.a) * (1.0 - p.a), kRowA);
  detail::require_le(4.0 * p.B / (1.0 - p.d), (1.0 - p.b) * (1.0 - p.b), kRowB);
  if (k == SolutionCase::Generalized) {
    detail::require_le(-(1.0 - p.c) * (1.0 - p.c), 4.0 * p.C / (p.d * (1.0 - p.d)), kRowCIneq);
  } else {
    detail::require_eq(1.0, c_row_value(p), kRowCEq);
  }
  if (is_restricted(k)) {
    detail::require_eq(p.D, 0.0, kRowD);
    detail::require_eq(compute_R(p), energy_row_rhs(p), kRowE);
  }
}

/// Basis parameters for a solution case, with nonnegative root branches preferred.
inline BasisParams resolve(const HeunParams& p, SolutionCase k) {
  check_constraints(p, k);
  BasisParams bp;
  bp.kase = k;
  const double sq_a = (1.0 - p.a) * (1.0 - p.a) - 4.0 * p.A / p.d;
  const double sq_b = (1.0 - p.b) * (1.0 - p.b) - 4.0 * p.B / (1.0 - p.d);
  switch (k) {
    case SolutionCase::Special:
    case SolutionCase::Generalized:
      bp.nu = detail::index_from_square(sq_a, 0.0, "nu", bp.notes);
      bp.mu = detail::index_from_square(sq_b, 0.0, "mu", bp.notes);
      bp.alpha = 0.5 * (bp.nu + 1.0 - p.a);
      bp.beta = 0.5 * (bp.mu + 1.0 - p.b);
      if (k == SolutionCase::Special) {
        bp.gamma = -0.5 * p.c;
      } else {
        const double g = std::sqrt(std::max(c_row_value(p), 0.0));
        bp.gamma = 0.5 * (g + 1.0 - p.c);
      }
      break;
    case SolutionCase::RestrictedC:
      bp.nu = detail::index_from_square(sq_a, 0.0, "nu", bp.notes);
      bp.mu = detail::index_from_square(sq_b, 1.0, "mu+1", bp.notes);
      bp.alpha = 0.5 * (bp.nu + 1.0 - p.a);
      bp.beta = 0.5 * (bp.mu + 2.0 - p.b);
      bp.gamma = -0.5 * p.c;
      if (bp.mu + 1.0 < 0.0) bp.notes.push_back("exponent row 2β+b−1 = μ+1 holds only up to sign");
      break;
    case SolutionCase::RestrictedD:
      bp.nu = detail::index_from_square(sq_a, 1.0, "nu+1", bp.notes);
      bp.mu = detail::index_from_square(sq_b, 0.0, "mu", bp.notes);
      bp.alpha = 0.5 * (bp.nu + 2.0 - p.a);
      bp.beta = 0.5 * (bp.mu + 1.0 - p.b);
      bp.gamma = -0.5 * p.c;
      if (bp.nu + 1.0 < 0.0) bp.notes.push_back("exponent row 2α+a−1 = ν+1 holds only up to sign");
      break;
  }
  return bp;
}

/// Residuals of every equality row of the case, evaluated on the output.
inline std::vector<std::pair<std::string, double>> equality_residuals(const HeunParams& p, const BasisParams& bp) {
  std::vector<std::pair<std::string, double>> out;
  const double sq_a = (1.0 - p.a) * (1.0 - p.a) - 4.0 * p.A / p.d;
  const double sq_b = (1.0 - p.b) * (1.0 - p.b) - 4.0 * p.B / (1.0 - p.d);
  switch (bp.kase) {
    case SolutionCase::Special:
    case SolutionCase::Generalized:
      out.emplace_back("2α = ν+1−a", 2.0 * bp.alpha - (bp.nu + 1.0 - p.a));
      out.emplace_back("2β = μ+1−b", 2.0 * bp.beta - (bp.mu + 1.0 - p.b));
      out.emplace_back("ν² = (1−a)² − 4A/d", bp.nu * bp.nu - sq_a);
      out.emplace_back("μ² = (1−b)² − 4B/(1−d)", bp.mu * bp.mu - sq_b);
      if (bp.kase == SolutionCase::Special) {
        out.emplace_back("2γ = −c", 2.0 * bp.gamma + p.c);
        out.emplace_back(kRowCEq, 1.0 - c_row_value(p));
      } else {
        const double g = 2.0 * bp.gamma + p.c - 1.0;
        out.emplace_back("(2γ+c−1)² = (1−c)² + 4C/(d(1−d))", g * g - c_row_value(p));
      }
      break;
    case SolutionCase::RestrictedC:
      out.emplace_back("2α = ν+1−a", 2.0 * bp.alpha - (bp.nu + 1.0 - p.a));
      out.emplace_back("2β = μ+2−b", 2.0 * bp.beta - (bp.mu + 2.0 - p.b));
      out.emplace_back("2γ = −c", 2.0 * bp.gamma + p.c);
      out.emplace_back("ν² = (1−a)² − 4A/d", bp.nu * bp.nu - sq_a);
      out.emplace_back("(μ+1)² = (1−b)² − 4B/(1−d)", (bp.mu + 1.0) * (bp.mu + 1.0) - sq_b);
      break;
    case SolutionCase::RestrictedD:
      out.emplace_back("2α = ν+2−a", 2.0 * bp.alpha - (bp.nu + 2.0 - p.a));
      out.emplace_back("2β = μ+1−b", 2.0 * bp.beta - (bp.mu + 1.0 - p.b));
      out.emplace_back("2γ = −c", 2.0 * bp.gamma + p.c);
      out.emplace_back("(ν+1)² = (1−a)² − 4A/d", (bp.nu + 1.0) * (bp.nu + 1.0) - sq_a);
      out.emplace_back("μ² = (1−b)² − 4B/(1−d)", bp.mu * bp.mu - sq_b);
      break;
  }
  if (is_restricted(bp.kase)) {
    out.emplace_back(kRowCEq, 1.0 - c_row_value(p));
    out.emplace_back(kRowD, p.D);
    out.emplace_back(kRowE, compute_R(p) - energy_row_rhs(p));
  }
  return out;
}

/// Exchange map between the two restricted cases: a <-> b, A/d <-> B/(1-d)
/// and the matching energy shift. It is an involution.
inline HeunParams map_c_to_d(const HeunParams& p) {
  HeunParams q = p;
  q.a = p.b;
  q.b = p.a;
  q.A = p.d * (p.B / (1.0 - p.d));
  q.B = (1.0 - p.d) * (p.A / p.d);
  q.E = p.E - 2.0 * p.A / p.d + 2.0 * p.B / (1.0 - p.d) + 0.5 * p.c * (p.b - p.a);
  return q;
}

/// The mu <-> nu, alpha <-> beta exchange that accompanies map_c_to_d.
inline BasisParams swap_ends(const BasisParams& bp) {
  BasisParams q = bp;
  std::swap(q.mu, q.nu);
  std::swap(q.alpha, q.beta);
  if (bp.kase == SolutionCase::RestrictedC) q.kase = SolutionCase::RestrictedD;
  else if (bp.kase == SolutionCase::RestrictedD) q.kase = SolutionCase::RestrictedC;
  return q;
}

/// Value of C making the C row of the case hold. For the generalized case the
/// symmetric choice 2γ + c = 1 is returned.
inline double solve_for_C(const HeunParams& p, SolutionCase k) {
  p.validate();
  const double w = p.d * (1.0 - p.d);
  if (k == SolutionCase::Generalized) return -0.25 * w * (1.0 - p.c) * (1.0 - p.c);
  return 0.25 * w * p.c * (2.0 - p.c);
}

/// Value of E making the energy row hold (restricted cases).
inline double solve_for_E(const HeunParams& p) {
  p.validate();
  HeunParams q = p;
  q.E = 0.0;
  return compute_R(q) - energy_row_rhs(p);
}

/// Unified trigonometric/hyperbolic scale sqrt|1 - (2d-1)^2|, i.e. 2 sqrt|d - d^2|.
inline double special_omega(double d) {
  const double c = 2.0 * d - 1.0;
  return std::sqrt(std::fabs(1.0 - c * c));
}

/// Numerator K = R + dD - (c/2)[d(a+b) - a] of the special-case diagonal.
inline double special_K(const HeunParams& p) {
  return compute_R(p) + p.d * p.D - 0.5 * p.c * (p.d * (p.a + p.b) - p.a);
}

/// Spectral variable z = 2K / omega of the special solution.
inline double special_z(const HeunParams& p) { return 2.0 * special_K(p) / special_omega(p.d); }

/// E for which the special solution sits at spectral point z.
inline double energy_for_special_z(const HeunParams& p, double z) {
  HeunParams q = p;
  q.E = 0.0;
  const double K0 = special_K(q);
  // K = K0 - E.
  return K0 - 0.5 * z * special_omega(p.d);
}

/// Left-side scalar L of the generalized recursion.
inline double generalized_L(const HeunParams& p, const BasisParams& bp) {
  return 0.5 * (bp.nu + 1.0 - p.a * p.c) - compute_R(p) -
         p.d * (1.0 + p.D + 0.5 * (bp.mu + bp.nu) - 0.5 * p.c * (p.a + p.b));
}

/// Shift between L and the Wilson-type spectral variable: z = L - (nu+1)^2/4.
inline double generalized_shift(const BasisParams& bp) { return -0.25 * (bp.nu + 1.0) * (bp.nu + 1.0); }

inline double generalized_z(const HeunParams& p, const BasisParams& bp) {
  return generalized_L(p, bp) + generalized_shift(bp);
}

/// E for which the generalized solution sits at spectral point z.
inline double energy_for_generalized_z(const HeunParams& p, const BasisParams& bp, double z) {
  HeunParams q = p;
  q.E = 0.0;
  // L is affine in E with unit slope.
  return z - generalized_z(q, bp);
}

struct IdentityReport {
  double max_fraction_identities = 0.0;  // the three partial-fraction identities
  double max_plus_identity = 0.0;        // the (F_n + 1) identity
  double max_minus_identity = 0.0;       // the (F_n - 1) identity
  long evaluations = 0;
};

/// Residuals of the partial-fraction identities at the sample points and of the
/// two F_n identities for n = 0..nmax at each (mu, nu) sample.
inline IdentityReport check_identities(long nmax, const std::vector<double>& sample_x, double d,
                                       const std::vector<std::pair<double, double>>& index_samples) {
  IdentityReport rep;
  for (double x : sample_x) {
    if (x == d) throw SingularPoint("identity sample coincides with d");
    const double u = x - d;
    const double r1 = x / u - (1.0 + d / u);
    const double r2 = (x - 1.0) / u - (1.0 + (d - 1.0) / u);
    const double lhs3 = x * (x - 1.0) / (u * u);
    const double r3 = lhs3 - (1.0 + (2.0 * d - 1.0) / u + d * (d - 1.0) / (u * u));
    rep.max_fraction_identities = std::max({rep.max_fraction_identities, std::fabs(r1) / (1.0 + std::fabs(x / u)),
                                            std::fabs(r2) / (1.0 + std::fabs((x - 1.0) / u)),
                                            std::fabs(r3) / (1.0 + std::fabs(lhs3))});
    rep.evaluations += 3;
  }
  for (const auto& [mu, nu] : index_samples) {
    for (long n = 0; n <= nmax; ++n) {
      const double k = static_cast<double>(n);
      const double m = 2.0 * k + mu + nu;
      const double F = coeff_F(n, mu, nu);
      double plus = 0.0;
      double minus = 0.0;
      if (n > 0) {
        const double common = 2.0 * k * (k + mu + nu + 1.0) / (m * (m + 2.0));
        plus = common * (mu - nu) - (2.0 * k * (k + mu) / m - k * (F + 1.0));
        minus = common * (nu - mu) - (2.0 * k * (k + nu) / m + k * (F - 1.0));
      }
      rep.max_plus_identity = std::max(rep.max_plus_identity, std::fabs(plus));
      rep.max_minus_identity = std::max(rep.max_minus_identity, std::fabs(minus));
      rep.evaluations += 2;
    }
  }
  return rep;
}

}  // namespace heuntra

#endif  // HEUNTRA_PARAMS_HPP
