#include "burau/polynomial.hpp"

#include <cmath>
#include <cstdio>

#include "burau/error.hpp"

namespace burau {

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> ascending) : coeffs_(std::move(ascending)) {
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("polynomial coefficient is not finite");
    }
  }
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= kLeadingEpsilon) coeffs_.pop_back();
  if (coeffs_.empty()) throw DomainError("polynomial has no coefficient above the leading threshold");
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{Complex(1.0)};
  for (const Complex& r : roots) {
    std::vector<Complex> next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return ComplexPolynomial(std::move(c));
}

Complex ComplexPolynomial::operator()(Complex x) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
  if (coeffs_.size() <= 1) throw DomainError("derivative of a constant polynomial is zero");
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return ComplexPolynomial(std::move(d));
}

double ComplexPolynomial::magnitude_at(Complex x) const {
  const double r = std::abs(x);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

ComplexPolynomial operator*(const ComplexPolynomial& p, const ComplexPolynomial& q) {
  std::vector<Complex> r(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return ComplexPolynomial(std::move(r));
}

std::string to_string(const ComplexPolynomial& p, const std::string& var) {
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Complex c = p[static_cast<std::size_t>(k)];
    if (c == Complex{} && p.degree() > 0) continue;
    std::string coeff = c.imag() == 0.0 ? fmt(c.real()) : "(" + fmt(c.real()) + (c.imag() < 0 ? "" : "+") + fmt(c.imag()) + "i)";
    std::string term = coeff;
    if (k == 1) term += "*" + var;
    if (k > 1) term += "*" + var + "^" + std::to_string(k);
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

}  // namespace burau
