#ifndef HEUNTRA_SYMMETRIC_EIGEN_HPP
#define HEUNTRA_SYMMETRIC_EIGEN_HPP

// Implicit QL iteration for real symmetric tridiagonal matrices. Only the first
// row of the eigenvector matrix is accumulated, which is all Golub-Welsch needs.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "heuntra/error.hpp"

namespace heuntra {

struct TridiagonalEigen {
  std::vector<double> values;            // ascending
  std::vector<double> first_components;  // first entry of each normalized eigenvector
};

/// Eigen-decomposition of the matrix with diagonal `diag` and off-diagonal
/// `off` (off[i] couples rows i and i+1; only the first diag.size()-1 entries are read).
inline TridiagonalEigen symmetric_tridiagonal_eigen(const std::vector<double>& diag,
                                                    const std::vector<double>& off) {
  const int n = static_cast<int>(diag.size());
  TridiagonalEigen out;
  if (n == 0) return out;
  if (static_cast<int>(off.size()) < n - 1) {
    throw DegenerateIndex("off-diagonal shorter than diagonal minus one");
  }
  std::vector<double> d(diag);
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i + 1 < n; ++i) e[i] = off[i];
  std::vector<double> z(static_cast<std::size_t>(n), 0.0);
  z[0] = 1.0;

  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 200) throw DegenerateIndex("implicit QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });
  out.values.reserve(order.size());
  out.first_components.reserve(order.size());
  for (std::size_t k : order) {
    out.values.push_back(d[k]);
    out.first_components.push_back(z[k]);
  }
  return out;
}

}  // namespace heuntra

#endif  // HEUNTRA_SYMMETRIC_EIGEN_HPP
