#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace burau {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed braid text or an out-of-range generator index.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands that do not fit together: strand or rank mismatch, bad index.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A size guard was exceeded (cofactor expansion, dense char poly, length budget).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Evaluation outside the domain of a Laurent polynomial (t = 0) or non-finite data.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The simultaneous root iteration did not converge. Carries the best iterate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<std::complex<double>> best,
                   std::vector<double> residuals)
      : Error(what), best_(std::move(best)), residuals_(std::move(residuals)) {}

  const std::vector<std::complex<double>>& best_iterate() const { return best_; }
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<std::complex<double>> best_;
  std::vector<double> residuals_;
};

}  // namespace burau
