#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace burau {

using Complex = std::complex<double>;

/// Dense univariate polynomial a_0 + a_1 X + ... + a_n X^n with complex
/// coefficients. Leading coefficients of magnitude <= 1e-12 are trimmed on
/// construction; a polynomial with nothing left is rejected.
class ComplexPolynomial {
 public:
  static constexpr double kLeadingEpsilon = 1e-12;

  /// Ascending coefficients. Throws DomainError on non-finite input or when
  /// every coefficient is negligible.
  explicit ComplexPolynomial(std::vector<Complex> ascending);

  /// Monic polynomial with the given roots, expanded.
  static ComplexPolynomial from_roots(std::span<const Complex> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coefficients() const { return coeffs_; }
  const Complex& operator[](std::size_t k) const { return coeffs_[k]; }
  const Complex& leading() const { return coeffs_.back(); }

  Complex operator()(Complex x) const;
  ComplexPolynomial derivative() const;

  /// Sum of |a_k| |x|^k: the magnitude scale against which |p(x)| is judged.
  double magnitude_at(Complex x) const;

  friend ComplexPolynomial operator*(const ComplexPolynomial& p, const ComplexPolynomial& q);

 private:
  std::vector<Complex> coeffs_;
};

/// "X^2 + (-3)*X + 1"-style rendering with 12 significant digits.
std::string to_string(const ComplexPolynomial& p, const std::string& var = "X");

}  // namespace burau
