#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "burau/error.hpp"
#include "burau/polynomial.hpp"

namespace burau {

using BigInt = boost::multiprecision::cpp_int;

/// Per-domain coefficient operations. The exact-integer domain is BigInt, the
/// complex domain is std::complex<double>. Mixing domains is a type error.
template <typename C>
struct CoefficientTraits;

template <>
struct CoefficientTraits<BigInt> {
  static bool is_zero(const BigInt& c) { return c.is_zero(); }
  static BigInt conj(const BigInt& c) { return c; }
  static Complex to_complex(const BigInt& c) { return {c.convert_to<double>(), 0.0}; }
};

template <>
struct CoefficientTraits<Complex> {
  static bool is_zero(const Complex& c) { return c == Complex{}; }
  static Complex conj(const Complex& c) { return std::conj(c); }
  static Complex to_complex(const Complex& c) { return c; }
};

/// Sparse element of R[t, t^-1]. Stored terms are always nonzero; in the
/// complex domain "nonzero" means not exactly 0.0, and small coefficients are
/// only removed by an explicit normalize().
template <typename C>
class LaurentPoly {
 public:
  using Coefficient = C;
  using Traits = CoefficientTraits<C>;

  LaurentPoly() = default;
  LaurentPoly(C constant) { add_term(0, std::move(constant)); }  // NOLINT(google-explicit-constructor)
  LaurentPoly(int constant) : LaurentPoly(C(constant)) {}        // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(C coeff, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, std::move(coeff));
    return p;
  }
  static LaurentPoly t_power(int exponent) { return monomial(C(1), exponent); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<int, C>& terms() const { return terms_; }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  C coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? C(0) : it->second;
  }

  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant(const C& c) const {
    if (Traits::is_zero(c)) return is_zero();
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == c;
  }

  void add_term(int exponent, C coeff) {
    if (Traits::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), k, -c);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [i, ci] : a.terms_) {
      for (const auto& [j, cj] : b.terms_) r.add_term(i + j, ci * cj);
    }
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplication by t^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  /// t -> t^-1, with complex conjugation of coefficients in the complex domain.
  LaurentPoly bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, Traits::conj(c));
    return r;
  }

  C coefficient_sum() const {
    C s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  /// Horner evaluation over the exponent range, highest exponent first.
  Complex eval(Complex t) const {
    if (t == Complex{}) throw DomainError("Laurent polynomial evaluated at t = 0");
    if (terms_.empty()) return {};
    auto it = terms_.rbegin();
    Complex acc = Traits::to_complex(it->second);
    int e = it->first;
    for (++it; it != terms_.rend(); ++it) {
      for (; e > it->first; --e) acc *= t;
      acc += Traits::to_complex(it->second);
    }
    // acc = p(t) * t^-lo
    const int lo = min_exponent();
    return lo >= 0 ? acc * std::pow(t, lo) : acc / std::pow(t, -lo);
  }

  /// Drops coefficients with magnitude below eps. Only meaningful for the
  /// complex domain; exact coefficients are already pruned.
  LaurentPoly normalized(double eps) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
      if (std::abs(Traits::to_complex(c)) >= eps) r.terms_.emplace(e, c);
    }
    return r;
  }

 private:
  std::map<int, C> terms_;
};

using IntLaurent = LaurentPoly<BigInt>;
using ComplexLaurent = LaurentPoly<Complex>;

/// Decreasing exponents, "t^k" syntax: "t^2 - 2*t + 1 - t^-1".
std::string to_string(const IntLaurent& p, const std::string& var = "t");
std::string to_string(const ComplexLaurent& p, const std::string& var = "t");

ComplexLaurent to_complex(const IntLaurent& p);

/// Square matrix over R[t, t^-1], row-major.
template <typename C>
class LaurentMatrix {
 public:
  using Entry = LaurentPoly<C>;

  LaurentMatrix() = default;
  explicit LaurentMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  LaurentMatrix(std::size_t n, std::vector<Entry> row_major) : n_(n), entries_(std::move(row_major)) {
    if (entries_.size() != n * n) throw ArgumentError("matrix entry count does not match dimension");
  }

  static LaurentMatrix identity(std::size_t n) {
    LaurentMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Entry(C(1));
    return m;
  }

  std::size_t size() const { return n_; }
  Entry& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Entry& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<Entry>& entries() const { return entries_; }

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.n_ != b.n_) throw ArgumentError("matrix dimension mismatch");
    LaurentMatrix r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      for (std::size_t k = 0; k < a.n_; ++k) {
        const Entry& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < a.n_; ++j) {
          if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
        }
      }
    }
    return r;
  }
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

  LaurentMatrix bar() const {
    LaurentMatrix r(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].bar();
    return r;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Entry> entries_;
};

using IntLaurentMatrix = LaurentMatrix<BigInt>;

/// Polynomial in an outer variable (X or x) with Laurent coefficients in t.
/// coefficient(k) multiplies X^k; the highest stored coefficient is nonzero.
template <typename C>
class BivariatePoly {
 public:
  using Entry = LaurentPoly<C>;

  BivariatePoly() = default;
  explicit BivariatePoly(std::vector<Entry> ascending) : coeffs_(std::move(ascending)) { trim(); }
  BivariatePoly(Entry constant) : coeffs_{std::move(constant)} { trim(); }  // NOLINT(google-explicit-constructor)

  /// The outer variable itself.
  static BivariatePoly variable() { return BivariatePoly({Entry(), Entry(C(1))}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Entry>& coefficients() const { return coeffs_; }
  Entry coefficient(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : Entry();
  }

  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    std::vector<Entry> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) r[k] += b.coeffs_[k];
    return BivariatePoly(std::move(r));
  }
  friend BivariatePoly operator-(const BivariatePoly& a) {
    std::vector<Entry> r;
    r.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) r.push_back(-c);
    return BivariatePoly(std::move(r));
  }
  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) { return a + (-b); }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Entry> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (!b.coeffs_[j].is_zero()) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return BivariatePoly(std::move(r));
  }
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  /// Evaluates every Laurent coefficient at t.
  ComplexPolynomial specialize(Complex t) const {
    if (t == Complex{}) throw DomainError("bivariate polynomial specialised at t = 0");
    std::vector<Complex> c;
    c.reserve(coeffs_.size());
    for (const auto& e : coeffs_) c.push_back(e.eval(t));
    if (c.empty()) c.push_back({});
    return ComplexPolynomial(std::move(c));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Entry> coeffs_;
};

using IntBivariate = BivariatePoly<BigInt>;

/// Terms in decreasing power of the outer variable, e.g.
/// "X^3 + (t - 1 + t^-1)*X^2 + ... + t^-1", or increasing when ascending is set.
std::string to_string(const IntBivariate& p, const std::string& var = "X", const std::string& inner = "t",
                      bool ascending = false);

/// Largest dimension accepted by the exact determinant routines.
inline constexpr std::size_t kMaxExactDimension = 12;

/// det of a square matrix of bivariate entries by Laplace expansion along rows,
/// memoised on the set of columns already used. Exact, division free.
template <typename C>
BivariatePoly<C> determinant(std::size_t n, const std::vector<BivariatePoly<C>>& row_major) {
  if (n > kMaxExactDimension) {
    throw DimensionError("exact determinant limited to dimension " + std::to_string(kMaxExactDimension) +
                         ", got " + std::to_string(n));
  }
  if (row_major.size() != n * n) throw ArgumentError("matrix entry count does not match dimension");
  const std::size_t full = std::size_t{1} << n;
  std::vector<BivariatePoly<C>> minors(full);
  minors[0] = BivariatePoly<C>(LaurentPoly<C>(C(1)));
  for (std::size_t mask = 1; mask < full; ++mask) {
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    BivariatePoly<C> acc;
    int greater = 0;
    for (std::size_t c = n; c-- > 0;) {
      if (!(mask & (std::size_t{1} << c))) continue;
      const auto& entry = row_major[row * n + c];
      const auto& minor = minors[mask & ~(std::size_t{1} << c)];
      if (!entry.is_zero() && !minor.is_zero()) {
        acc = (greater % 2 == 0) ? acc + entry * minor : acc - entry * minor;
      }
      ++greater;
    }
    minors[mask] = std::move(acc);
  }
  return minors[full - 1];
}

/// det(X I - m) with X the outer variable.
template <typename C>
BivariatePoly<C> charpoly(const LaurentMatrix<C>& m) {
  const std::size_t n = m.size();
  std::vector<BivariatePoly<C>> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      BivariatePoly<C> e(-m(i, j));
      if (i == j) e = e + BivariatePoly<C>::variable();
      entries.push_back(std::move(e));
    }
  }
  return determinant<C>(n, entries);
}

}  // namespace burau
