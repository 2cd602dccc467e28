#ifndef HEUNTRA_RECURSION_COEFFS_HPP
#define HEUNTRA_RECURSION_COEFFS_HPP

// Coefficients of the normalized Jacobi recursion on [0,1]:
//   x p_n = (F_n + 1)/2 p_n + G_{n-1} p_{n-1} + G_n p_{n+1}.

#include <cmath>
#include <string>

#include "heuntra/error.hpp"

namespace heuntra {

inline void require_jacobi_index(double mu, double nu) {
  if (!(mu > -1.0) || !(nu > -1.0)) {
    throw InvalidIndex("Jacobi index requires mu > -1 and nu > -1 (mu = " + std::to_string(mu) +
                       ", nu = " + std::to_string(nu) + ")");
  }
}

/// F_n = (nu^2 - mu^2) / ((2n+mu+nu)(2n+mu+nu+2)).
///
/// At n = 0 the common factor mu+nu is cancelled, which removes the
/// mu + nu = 0 singularity.
inline double coeff_F(long n, double mu, double nu) {
  require_jacobi_index(mu, nu);
  if (n < 0) throw DegenerateIndex("negative degree in coeff_F");
  const double s = mu + nu;
  if (n == 0) return (nu - mu) / (s + 2.0);
  const double m = 2.0 * static_cast<double>(n) + s;
  return (nu * nu - mu * mu) / (m * (m + 2.0));
}

/// G_n = 1/(2n+mu+nu+2) sqrt((n+1)(n+mu+1)(n+nu+1)(n+mu+nu+1) / ((2n+mu+nu+1)(2n+mu+nu+3))).
///
/// At n = 0 the factor mu+nu+1 is cancelled against the denominator.
inline double coeff_G(long n, double mu, double nu) {
  require_jacobi_index(mu, nu);
  if (n < 0) return 0.0;
  const double s = mu + nu;
  if (n == 0) return std::sqrt((mu + 1.0) * (nu + 1.0) / (s + 3.0)) / (s + 2.0);
  const double k = static_cast<double>(n);
  const double m = 2.0 * k + s;
  const double num = (k + 1.0) * (k + mu + 1.0) * (k + nu + 1.0) * (k + s + 1.0);
  return std::sqrt(num / ((m + 1.0) * (m + 3.0))) / (m + 2.0);
}

/// n(n+mu)/(2n+mu+nu), zero at n = 0.
inline double ratio_n_mu(long n, double mu, double nu) {
  if (n == 0) return 0.0;
  const double k = static_cast<double>(n);
  return k * (k + mu) / (2.0 * k + mu + nu);
}

}  // namespace heuntra

#endif  // HEUNTRA_RECURSION_COEFFS_HPP
