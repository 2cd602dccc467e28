#ifndef HEUNTRA_SPECIAL_HPP
#define HEUNTRA_SPECIAL_HPP

// Sign-tracked log-gamma arithmetic and compensated summation shared by the
// polynomial modules.

#include <cmath>
#include <limits>
#include <string>

#include "heuntra/error.hpp"

namespace heuntra {

/// Arguments closer than this to a nonpositive integer are treated as poles.
inline constexpr double kPoleTolerance = 1e-9;

/// A real number stored as sign * exp(log_abs). sign == 0 encodes an exact zero.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  static SignedLog zero() { return {-std::numeric_limits<double>::infinity(), 0}; }
  static SignedLog from(double v) {
    if (v == 0.0) return zero();
    return {std::log(std::fabs(v)), v > 0 ? 1 : -1};
  }

  bool is_zero() const { return sign == 0; }
  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

  SignedLog& operator*=(const SignedLog& o) {
    if (sign == 0 || o.sign == 0) return *this = zero();
    log_abs += o.log_abs;
    sign *= o.sign;
    return *this;
  }
  SignedLog& operator/=(const SignedLog& o) {
    if (o.sign == 0) throw DegenerateIndex("division by an exact zero factor");
    if (sign == 0) return *this;
    log_abs -= o.log_abs;
    sign *= o.sign;
    return *this;
  }
  friend SignedLog operator*(SignedLog a, const SignedLog& b) { return a *= b; }
  friend SignedLog operator/(SignedLog a, const SignedLog& b) { return a /= b; }
};

/// Distance from x to the nearest nonpositive integer, or +inf if x > 0.5.
inline bool near_nonpositive_integer(double x, double tol = kPoleTolerance) {
  if (x > 0.5) return false;
  return std::fabs(x - std::round(x)) < tol;
}

/// log|Gamma(x)| with the sign of Gamma(x); throws GammaPole at the poles.
inline SignedLog log_gamma(double x) {
  if (near_nonpositive_integer(x)) {
    throw GammaPole("Gamma pole at argument " + std::to_string(x));
  }
  if (x > 0) return {std::lgamma(x), 1};
  // Gamma alternates sign between consecutive negative integers.
  const double fl = std::floor(x);
  const long k = static_cast<long>(fl);
  const int sign = (k % 2 == 0) ? 1 : -1;
  // Reflection keeps lgamma's global sign state out of the picture.
  const double lg = std::log(M_PI / std::fabs(std::sin(M_PI * x))) - std::lgamma(1.0 - x);
  return {lg, sign};
}

/// Pochhammer symbol (x)_n = x (x+1) ... (x+n-1) in signed-log form.
///
/// A factor within kPoleTolerance of zero is snapped to an exact zero, which is
/// what makes terminating hypergeometric sums terminate in floating point.
inline SignedLog log_pochhammer(double x, long n) {
  if (n <= 0) return {0.0, 1};
  if (x > 0) return {std::lgamma(x + static_cast<double>(n)) - std::lgamma(x), 1};
  SignedLog acc{0.0, 1};
  for (long i = 0; i < n; ++i) {
    const double f = x + static_cast<double>(i);
    if (std::fabs(f) < kPoleTolerance) return SignedLog::zero();
    acc *= SignedLog::from(f);
  }
  return acc;
}

inline double pochhammer(double x, long n) { return log_pochhammer(x, n).value(); }

/// ln B(p, q) for p, q > 0.
inline double log_beta(double p, double q) {
  return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
}

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double v) {
    add(v);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Relative-or-absolute closeness used for equality rows on user input.
inline bool nearly_equal(double lhs, double rhs, double rtol = 1e-10) {
  return std::fabs(lhs - rhs) <= rtol * (1.0 + std::fabs(lhs) + std::fabs(rhs));
}

}  // namespace heuntra

#endif  // HEUNTRA_SPECIAL_HPP
