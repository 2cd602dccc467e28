#ifndef HEUNTRA_SYSTEM_HPP
#define HEUNTRA_SYSTEM_HPP

// Symmetric three-term recursion systems. Row n reads
//   v w_n f_n = s_n f_n + t_{n-1} f_{n-1} + t_n f_{n+1},  t_{-1} = 0,
// and the reported spectral variable is z = v + shift.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "heuntra/error.hpp"

namespace heuntra {

enum class Coupling { Shift, Weighted };

struct TridiagonalSystem {
  std::vector<double> diag;    // s_n
  std::vector<double> off;     // t_n couples rows n and n+1
  std::vector<double> weight;  // w_n, all ones for Shift coupling
  Coupling coupling = Coupling::Shift;
  double spectral_value = std::numeric_limits<double>::quiet_NaN();
  double shift = 0.0;
  std::string label;
  std::string variable = "z";

  std::size_t size() const { return diag.size(); }

  void push(double s, double t, double w = 1.0) {
    diag.push_back(s);
    off.push_back(t);
    weight.push_back(w);
  }
};

/// P_0 .. P_N at raw spectral value v with P_0 = 1 and P_1 = (v w_0 - s_0)/t_0.
inline std::vector<double> generate_sequence(const TridiagonalSystem& sys, double v, long N) {
  if (N < 0) return {};
  if (static_cast<std::size_t>(N) > sys.size()) {
    throw DegenerateIndex("system has " + std::to_string(sys.size()) + " rows, need " + std::to_string(N));
  }
  std::vector<double> p(static_cast<std::size_t>(N) + 1, 0.0);
  p[0] = 1.0;
  for (long n = 0; n < N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (sys.off[i] == 0.0) throw ZeroDenominator("off-diagonal t_n", n);
    const double prev = n > 0 ? sys.off[i - 1] * p[i - 1] : 0.0;
    p[i + 1] = ((v * sys.weight[i] - sys.diag[i]) * p[i] - prev) / sys.off[i];
  }
  return p;
}

/// Scaled closure |t_{N-1} P_N(v)| of the N-row truncation; zero at its eigenvalues.
inline double closure_residual(const TridiagonalSystem& sys, double v, long N) {
  if (N < 1) throw DegenerateIndex("closure needs N >= 1");
  const auto p = generate_sequence(sys, v, N);
  double pmax = 0.0;
  double cmax = 0.0;
  for (long n = 0; n < N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    pmax = std::max(pmax, std::fabs(p[i]));
    cmax = std::max({cmax, std::fabs(v * sys.weight[i]), std::fabs(sys.diag[i]), std::fabs(sys.off[i])});
  }
  const auto last = static_cast<std::size_t>(N - 1);
  return std::fabs(sys.off[last] * p[last + 1]) / (pmax * cmax);
}

/// One recursion row with its neighbour coefficients kept separately, so that
/// symmetry can be checked as sup(n) == sub(n+1).
struct RecursionRow {
  double diag = 0.0;
  double sub = 0.0;  // coefficient of f_{n-1}
  double sup = 0.0;  // coefficient of f_{n+1}
};

}  // namespace heuntra

#endif  // HEUNTRA_SYSTEM_HPP
