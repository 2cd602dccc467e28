#ifndef HEUNTRA_POLYNOMIALS_HPP
#define HEUNTRA_POLYNOMIALS_HPP

// Normalized Wilson polynomials, their lambda-deformation and the Q, H, G
// families defined by three-term recursions in Jacobi coefficients.

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "heuntra/error.hpp"
#include "heuntra/recursion_coeffs.hpp"
#include "heuntra/special.hpp"
#include "heuntra/system.hpp"

namespace heuntra {

struct WilsonParams {
  double wa = 0.0, wb = 0.0, wc = 0.0, wd = 0.0;

  double sum() const { return wa + wb + wc + wd; }
  /// (sigma - tau, sigma + tau, gamma, gamma) for real tau.
  static WilsonParams from_sigma_tau(double sigma, double tau, double gamma) {
    return {sigma - tau, sigma + tau, gamma, gamma};
  }
};

struct ModifiedWilson {
  WilsonParams base;
  double lambda = 0.0;
};

/// Wilson parameters (sigma - tau, sigma + tau, gamma, gamma) described through
/// tau^2, so that a purely imaginary tau (tau_sq < 0) keeps every coefficient real.
struct PairedWilsonParams {
  double sigma = 0.0;
  double tau_sq = 0.0;
  double gamma = 0.0;
};

namespace detail {

inline double snap_zero(double v) { return std::fabs(v) < kPoleTolerance ? 0.0 : v; }

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

inline double checked_sqrt(double radicand, double scale, const std::string& what, long n) {
  if (radicand >= 0.0) return std::sqrt(radicand);
  if (radicand > -1e-14 * (1.0 + std::fabs(scale))) return 0.0;
  throw RegimeError("negative radicand " + fmt(radicand) + " in " + what + " at n = " + std::to_string(n));
}

inline void require_nonzero(double v, const std::string& what, long n) {
  if (std::fabs(v) < kPoleTolerance) throw ZeroDenominator(what, n);
}

}  // namespace detail

/// Normalized Wilson polynomial W_n(z^2; a, b, c, d).
///
/// The square root covers the whole prefactor (the Pochhammer ratio included),
/// which is the form that satisfies the normalized recursion. For z^2 < 0 the
/// numerator pair a +- ix becomes the real pair a +- sqrt(-z^2).
inline double wilson_eval(long n, double z2, const WilsonParams& p) {
  if (n < 0) throw DegenerateIndex("negative Wilson degree");
  if (n == 0) return 1.0;
  const double a = p.wa, b = p.wb, c = p.wc, d = p.wd;
  const double s = p.sum();
  const double k = static_cast<double>(n);

  const double ratio_den = k + s - 1.0;
  detail::require_nonzero(ratio_den, "prefactor factor n+a+b+c+d-1", n);
  SignedLog rad = SignedLog::from(detail::snap_zero(2.0 * k + s - 1.0) / ratio_den);
  rad *= log_pochhammer(a + b, n);
  rad *= log_pochhammer(a + c, n);
  rad *= log_pochhammer(a + d, n);
  rad *= log_pochhammer(s, n);
  const std::pair<const char*, double> lower[] = {{"(b+c)_n", b + c}, {"(b+d)_n", b + d}, {"(c+d)_n", c + d}};
  for (const auto& [name, arg] : lower) {
    const SignedLog f = log_pochhammer(arg, n);
    if (f.is_zero()) throw ZeroDenominator(std::string("prefactor ") + name, n);
    rad /= f;
  }
  rad /= SignedLog{std::lgamma(k + 1.0), 1};
  if (rad.is_zero()) return 0.0;
  if (rad.sign < 0) {
    std::string culprits;
    const std::pair<const char*, double> factors[] = {
        {"(2n+a+b+c+d-1)/(n+a+b+c+d-1)", (2.0 * k + s - 1.0) / ratio_den},
        {"(a+b)_n", pochhammer(a + b, n)}, {"(a+c)_n", pochhammer(a + c, n)},
        {"(a+d)_n", pochhammer(a + d, n)}, {"(a+b+c+d)_n", pochhammer(s, n)},
        {"(b+c)_n", pochhammer(b + c, n)}, {"(b+d)_n", pochhammer(b + d, n)},
        {"(c+d)_n", pochhammer(c + d, n)}};
    for (const auto& [name, v] : factors) {
      if (v < 0) culprits += std::string(culprits.empty() ? "" : ", ") + name;
    }
    throw RegimeError("negative Wilson prefactor radicand at n = " + std::to_string(n) + " (negative factors: " +
                      culprits + ")");
  }
  const double prefactor = std::exp(0.5 * rad.log_abs);

  const double r = z2 < 0.0 ? std::sqrt(-z2) : 0.0;
  // The alternating terms cancel strongly, so they are carried in extended precision.
  using ext = long double;
  ext sum = 1.0L;
  ext term = 1.0L;
  for (long j = 0; j < n; ++j) {
    const double jj = static_cast<double>(j);
    ext pair;
    if (z2 >= 0.0) {
      pair = (static_cast<ext>(a) + jj) * (static_cast<ext>(a) + jj) + z2;
    } else {
      pair = static_cast<ext>(detail::snap_zero(a + jj - r)) * detail::snap_zero(a + jj + r);
    }
    const ext num = (jj - k) * static_cast<ext>(detail::snap_zero(jj + k + s - 1.0)) * pair;
    if (num == 0.0L) break;
    const ext den = (static_cast<ext>(a) + b + jj) * (static_cast<ext>(a) + c + jj) * (static_cast<ext>(a) + d + jj) *
                    (jj + 1.0L);
    detail::require_nonzero(static_cast<double>(den), "4F3 lower parameter", j);
    term *= num / den;
    sum += term;
  }
  return prefactor * static_cast<double>(sum);
}

/// Row n of the normalized Wilson recursion
///   z^2 W_n = diag W_n + sub W_{n-1} + sup W_{n+1},
/// with the negative off-diagonal signs of the normalized form.
inline RecursionRow wilson_recursion_row(long n, const WilsonParams& p) {
  if (n < 0) throw DegenerateIndex("negative Wilson degree");
  const double a = p.wa, b = p.wb, c = p.wc, d = p.wd;
  const double s = p.sum();
  const double k = static_cast<double>(n);
  RecursionRow row;

  double An;
  if (n == 0) {
    detail::require_nonzero(s, "Wilson denominator 2n+a+b+c+d", n);
    An = (a + b) * (a + c) * (a + d) / s;
  } else {
    const double d0 = 2.0 * k + s;
    const double d1 = 2.0 * k + s - 1.0;
    detail::require_nonzero(d0, "Wilson denominator 2n+a+b+c+d", n);
    detail::require_nonzero(d1, "Wilson denominator 2n+a+b+c+d-1", n);
    An = (k + a + b) * (k + a + c) * (k + a + d) * (k + s - 1.0) / (d0 * d1);
  }
  double Cn = 0.0;
  if (n > 0) {
    const double d1 = 2.0 * k + s - 1.0;
    const double d2 = 2.0 * k + s - 2.0;
    detail::require_nonzero(d2, "Wilson denominator 2n+a+b+c+d-2", n);
    Cn = k * (k + b + c - 1.0) * (k + b + d - 1.0) * (k + c + d - 1.0) / (d1 * d2);
  }
  row.diag = An + Cn - a * a;

  double sup_rad;
  if (n == 0) {
    detail::require_nonzero(s + 1.0, "Wilson denominator 2n+a+b+c+d+1", n);
    sup_rad = (a + b) * (c + d) * (a + c) * (a + d) * (b + c) * (b + d) / (s + 1.0) / (s * s);
  } else {
    const double d0 = 2.0 * k + s;
    detail::require_nonzero(2.0 * k + s + 1.0, "Wilson denominator 2n+a+b+c+d+1", n);
    sup_rad = (k + 1.0) * (k + a + b) * (k + c + d) * (k + a + c) * (k + a + d) * (k + b + c) * (k + b + d) *
              (k + s - 1.0) / ((2.0 * k + s - 1.0) * (2.0 * k + s + 1.0)) / (d0 * d0);
  }
  row.sup = -detail::checked_sqrt(sup_rad, row.diag, "Wilson off-diagonal", n);

  if (n == 1) {
    const double sub_rad = (a + b) * (c + d) * (a + c) * (a + d) * (b + c) * (b + d) / (s + 1.0) / (s * s);
    row.sub = -detail::checked_sqrt(sub_rad, row.diag, "Wilson off-diagonal", n);
  } else if (n > 1) {
    const double d2 = 2.0 * k + s - 2.0;
    detail::require_nonzero(2.0 * k + s - 3.0, "Wilson denominator 2n+a+b+c+d-3", n);
    const double sub_rad = k * (k + a + b - 1.0) * (k + c + d - 1.0) * (k + a + c - 1.0) * (k + a + d - 1.0) *
                           (k + b + c - 1.0) * (k + b + d - 1.0) * (k + s - 2.0) /
                           ((2.0 * k + s - 3.0) * (2.0 * k + s - 1.0)) / (d2 * d2);
    row.sub = -detail::checked_sqrt(sub_rad, row.diag, "Wilson off-diagonal", n);
  }
  return row;
}

/// Row of the lambda-deformed recursion: an extra diagonal term
/// -lambda[(n+a+c)(n+b+d) - n] and reversed off-diagonal signs.
inline RecursionRow modified_wilson_row(long n, const ModifiedWilson& m) {
  RecursionRow row = wilson_recursion_row(n, m.base);
  const double k = static_cast<double>(n);
  const WilsonParams& p = m.base;
  row.diag -= m.lambda * ((k + p.wa + p.wc) * (k + p.wb + p.wd) - k);
  row.sub = -row.sub;
  row.sup = -row.sup;
  return row;
}

/// Row of the paired form. Coefficients depend on tau only through tau^2.
/// `reversed` selects the positive off-diagonal sign of the deformed family.
inline RecursionRow paired_wilson_row(long n, const PairedWilsonParams& pw, double lambda, bool reversed) {
  if (n < 0) throw DegenerateIndex("negative Wilson degree");
  const double sg = pw.sigma, t2 = pw.tau_sq, g = pw.gamma;
  const double s = 2.0 * sg + 2.0 * g;
  const double k = static_cast<double>(n);
  auto pair = [&](double m) { return (m + sg + g) * (m + sg + g) - t2; };
  RecursionRow row;
  double An;
  if (n == 0) {
    detail::require_nonzero(s, "Wilson denominator 2n+a+b+c+d", n);
    An = 2.0 * g * pair(0.0) / s;
  } else {
    An = (k + 2.0 * g) * pair(k) * (k + s - 1.0) / ((2.0 * k + s - 1.0) * (2.0 * k + s));
  }
  double Cn = 0.0;
  if (n > 0) {
    detail::require_nonzero(2.0 * k + s - 2.0, "Wilson denominator 2n+a+b+c+d-2", n);
    Cn = k * pair(k - 1.0) * (k + 2.0 * sg - 1.0) / ((2.0 * k + s - 2.0) * (2.0 * k + s - 1.0));
  }
  row.diag = An + Cn - g * g - lambda * (pair(k) - k);
  auto off_sq = [&](double m) {
    const double q = pair(m);
    if (m == 0.0) return 2.0 * sg * 2.0 * g * q * q / (s * s * (s + 1.0));
    const double den = 2.0 * m + s;
    return (m + 1.0) * (m + 2.0 * sg) * (m + 2.0 * g) * q * q * (m + s - 1.0) /
           (den * den * (2.0 * m + s - 1.0) * (2.0 * m + s + 1.0));
  };
  const double sign = reversed ? 1.0 : -1.0;
  row.sup = sign * detail::checked_sqrt(off_sq(k), row.diag, "Wilson off-diagonal", n);
  if (n > 0) row.sub = sign * detail::checked_sqrt(off_sq(k - 1.0), row.diag, "Wilson off-diagonal", n);
  return row;
}

struct WilsonSpectrum {
  long N = 0;
  std::vector<double> points;  // z_k^2 = -(k + sigma - |tau|)^2
};

/// Finite discrete spectrum for sigma^2 <= tau^2.
inline WilsonSpectrum wilson_spectrum(double sigma, double tau) {
  if (sigma * sigma > tau * tau) {
    throw RegimeError("discrete spectrum needs sigma^2 <= tau^2 (sigma = " + detail::fmt(sigma) +
                      ", tau = " + detail::fmt(tau) + ")");
  }
  const double span = std::fabs(tau) - sigma;
  const double rounded = std::round(span);
  const double snapped = std::fabs(span - rounded) < kPoleTolerance ? rounded : span;
  WilsonSpectrum out;
  out.N = static_cast<long>(std::floor(snapped));
  for (long k = 0; k <= out.N; ++k) {
    const double v = static_cast<double>(k) + sigma - std::fabs(tau);
    out.points.push_back(-v * v);
  }
  return out;
}

/// Discrete part q^2(k) of the Wilson weight for parameters (sigma-tau, sigma+tau, gamma, gamma).
/// The leading -2(k + sigma - tau) factor is sign-tracked so the result is positive.
inline double wilson_discrete_weight(long k, double sigma, double tau, double gamma) {
  if (k < 0) throw DegenerateIndex("negative spectrum index");
  const WilsonSpectrum levels = wilson_spectrum(sigma, tau);
  if (k > levels.N) {
    throw RegimeError("spectrum index " + std::to_string(k) + " exceeds N = " + std::to_string(levels.N));
  }
  SignedLog w = SignedLog::from(-2.0);
  w *= log_gamma(2.0 * sigma + 2.0 * gamma);
  w *= log_gamma(2.0 * tau);
  const SignedLog g1 = log_gamma(gamma - sigma + tau);
  w *= g1;
  w *= g1;
  w /= log_gamma(2.0 * tau - 2.0 * sigma + 1.0);
  w /= log_gamma(2.0 * gamma);
  const SignedLog g2 = log_gamma(gamma + sigma + tau);
  w /= g2;
  w /= g2;

  const double kk = static_cast<double>(k);
  w *= SignedLog::from(detail::snap_zero(kk + sigma - tau));
  w *= log_pochhammer(2.0 * sigma - 2.0 * tau, k);
  w *= log_pochhammer(2.0 * sigma, k);
  const SignedLog top = log_pochhammer(sigma - tau + gamma, k);
  w *= top;
  w *= top;
  const SignedLog low1 = log_pochhammer(1.0 - 2.0 * tau, k);
  const SignedLog low2 = log_pochhammer(sigma - tau - gamma + 1.0, k);
  if (low1.is_zero()) throw ZeroDenominator("weight factor (1-2tau)_k", k);
  if (low2.is_zero()) throw ZeroDenominator("weight factor (sigma-tau-gamma+1)_k", k);
  w /= low1;
  w /= low2;
  w /= low2;
  w /= SignedLog{std::lgamma(kk + 1.0), 1};
  if (w.is_zero()) return 0.0;
  if (w.sign < 0) throw RegimeError("discrete weight is negative at k = " + std::to_string(k));
  return std::exp(w.log_abs);
}

/// Recursion system of the normalized Wilson polynomial in the variable z^2.
inline TridiagonalSystem wilson_system(const WilsonParams& p, std::size_t rows) {
  TridiagonalSystem sys;
  sys.label = "wilson";
  sys.variable = "z^2";
  for (std::size_t n = 0; n < rows; ++n) {
    const RecursionRow r = wilson_recursion_row(static_cast<long>(n), p);
    sys.push(r.diag, r.sup);
  }
  return sys;
}

inline TridiagonalSystem modified_wilson_system(const ModifiedWilson& m, std::size_t rows) {
  TridiagonalSystem sys;
  sys.label = "modified-wilson";
  for (std::size_t n = 0; n < rows; ++n) {
    const RecursionRow r = modified_wilson_row(static_cast<long>(n), m);
    sys.push(r.diag, r.sup);
  }
  return sys;
}

inline TridiagonalSystem paired_wilson_system(const PairedWilsonParams& pw, double lambda, bool reversed,
                                              std::size_t rows) {
  TridiagonalSystem sys;
  sys.label = reversed ? "modified-wilson" : "wilson";
  sys.variable = reversed ? "z" : "z^2";
  for (std::size_t n = 0; n < rows; ++n) {
    const RecursionRow r = paired_wilson_row(static_cast<long>(n), pw, lambda, reversed);
    sys.push(r.diag, r.sup);
  }
  return sys;
}

struct QFamily {
  double mu = 0.0, nu = 0.0;
  double sigma_sq = 0.0;  // negative for purely imaginary sigma
  double theta = 0.0;     // 0 <= theta < pi
};

struct GFamily {
  double mu = 0.0, nu = 0.0;
  double sigma_sq = 0.0;
  double xi = 0.5;  // 0 < xi < 1
};

/// Row data for the weighted families:
///   scale f_n = (z weight + diag) f_n + off_{n-1} f_{n-1} + off_n f_{n+1}.
struct FamilyRow {
  double weight = 0.0;
  double diag = 0.0;
  double off = 0.0;
  double scale = 0.0;
};

/// (n + (mu+nu+1)/2)^2 - sigma^2.
inline double family_delta(long n, double mu, double nu, double sigma_sq) {
  const double h = static_cast<double>(n) + 0.5 * (mu + nu + 1.0);
  return h * h - sigma_sq;
}

inline FamilyRow q_row(long n, const QFamily& f) {
  if (!(f.theta >= 0.0 && f.theta < M_PI)) throw RegimeError("Q family needs 0 <= theta < pi");
  const double delta = family_delta(n, f.mu, f.nu, f.sigma_sq);
  if (delta == 0.0) throw ZeroDenominator("(n+(mu+nu+1)/2)^2 - sigma^2", n);
  return {std::sin(f.theta) / delta, coeff_F(n, f.mu, f.nu), 2.0 * coeff_G(n, f.mu, f.nu), std::cos(f.theta)};
}

inline FamilyRow h_row(long n, const QFamily& f) {
  if (!(f.theta >= 0.0 && f.theta < M_PI)) throw RegimeError("H family needs 0 <= theta < pi");
  const double delta = family_delta(n, f.mu, f.nu, f.sigma_sq);
  return {std::sin(f.theta) * delta, coeff_F(n, f.mu, f.nu), 2.0 * coeff_G(n, f.mu, f.nu), std::cos(f.theta)};
}

inline FamilyRow g_row(long n, const GFamily& f) {
  if (!(f.xi > 0.0 && f.xi < 1.0)) throw RegimeError("G family needs 0 < xi < 1");
  const double delta = family_delta(n, f.mu, f.nu, f.sigma_sq);
  if (delta == 0.0) throw ZeroDenominator("(n+(mu+nu+1)/2)^2 - sigma^2", n);
  return {(1.0 - f.xi * f.xi) / delta, 2.0 * f.xi * coeff_F(n, f.mu, f.nu), 4.0 * f.xi * coeff_G(n, f.mu, f.nu),
          1.0 + f.xi * f.xi};
}

/// Weighted system z w_n f_n = (scale - diag) f_n - off f_{n-1} - off f_{n+1}.
template <class RowFn>
TridiagonalSystem family_system(RowFn row_of, std::size_t rows, const std::string& label) {
  TridiagonalSystem sys;
  sys.coupling = Coupling::Weighted;
  sys.label = label;
  for (std::size_t n = 0; n < rows; ++n) {
    const FamilyRow r = row_of(static_cast<long>(n));
    sys.push(r.scale - r.diag, -r.off, r.weight);
  }
  return sys;
}

inline TridiagonalSystem q_system(const QFamily& f, std::size_t rows) {
  return family_system([&](long n) { return q_row(n, f); }, rows, "Q");
}

inline TridiagonalSystem h_system(const QFamily& f, std::size_t rows) {
  return family_system([&](long n) { return h_row(n, f); }, rows, "H");
}

inline TridiagonalSystem g_system(const GFamily& f, std::size_t rows) {
  return family_system([&](long n) { return g_row(n, f); }, rows, "G");
}

/// The z = 0 reduction of the Q and H recursions: cos(theta) p_n = F_n p_n + 2G_{n-1} p_{n-1} + 2G_n p_{n+1},
/// the normalized Jacobi recursion in the variable 2x - 1.
inline TridiagonalSystem jacobi_cos_system(double mu, double nu, std::size_t rows) {
  TridiagonalSystem sys;
  sys.label = "jacobi-cos";
  sys.variable = "cos(theta)";
  for (std::size_t n = 0; n < rows; ++n) {
    sys.push(coeff_F(static_cast<long>(n), mu, nu), 2.0 * coeff_G(static_cast<long>(n), mu, nu));
  }
  return sys;
}

}  // namespace heuntra

#endif  // HEUNTRA_POLYNOMIALS_HPP
