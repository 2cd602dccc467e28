#ifndef HEUNTRA_ERROR_HPP
#define HEUNTRA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace heuntra {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Jacobi exponents outside mu > -1, nu > -1.
class InvalidIndex : public Error {
 public:
  using Error::Error;
};

/// A recursion denominator vanishes and no limit form is available.
class DegenerateIndex : public Error {
 public:
  using Error::Error;
};

/// An equation parameter violates one of the feasibility rows of its solution case.
class ConstraintViolation : public Error {
 public:
  explicit ConstraintViolation(std::string row, const std::string& detail = "")
      : Error("constraint row: " + row + (detail.empty() ? "" : " (" + detail + ")")), row_(std::move(row)) {}
  const std::string& row() const noexcept { return row_; }

 private:
  std::string row_;
};

/// No root choice of a squared basis parameter keeps the Jacobi index valid.
class BranchInfeasible : public Error {
 public:
  using Error::Error;
};

/// A row of a recursion divides by zero at degree n.
class ZeroDenominator : public Error {
 public:
  ZeroDenominator(const std::string& what, long n)
      : Error(what + " vanishes at n = " + std::to_string(n)), n_(n) {}
  long index() const noexcept { return n_; }

 private:
  long n_;
};

/// Gamma function evaluated within tolerance of one of its poles.
class GammaPole : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the regime an operation is defined for.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested at (or too close to) a singular point of the equation.
class SingularPoint : public Error {
 public:
  using Error::Error;
};

}  // namespace heuntra

#endif  // HEUNTRA_ERROR_HPP
