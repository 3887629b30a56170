#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "burau/laurent.hpp"
#include "burau/polynomial.hpp"
#include "burau/tolerances.hpp"

namespace burau {

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t n = 0) : n_(n), a_(n * n) {}
  static ComplexMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool is_finite() const;
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t n_;
  std::vector<Complex> a_;
};

/// Entrywise evaluation at t != 0.
ComplexMatrix specialize(const IntLaurentMatrix& m, Complex t);

/// Max row sum of |entries|.
double max_row_sum(const ComplexMatrix& m);

/// Largest dimension accepted by char_poly_complex.
inline constexpr std::size_t kMaxDenseDimension = 64;

/// det(X I - m) via unitary Hessenberg reduction followed by the Hessenberg
/// determinant recurrence.
ComplexPolynomial char_poly_complex(const ComplexMatrix& m);

/// All roots with multiplicity (Aberth-Ehrlich iteration). Clusters that are
/// numerically a multiple root are replaced by their refined common value.
/// Throws ConvergenceError with the best iterate after max_root_iterations.
std::vector<Complex> roots(const ComplexPolynomial& p, const Tolerances& tol = {});

/// Largest root whose imaginary part is negligible (|im| <= tol.comparison * (1 + |re|)).
std::optional<double> greatest_real_root(const ComplexPolynomial& p, const Tolerances& tol = {});

/// Max |eigenvalue|; 0 for the empty matrix.
double spectral_radius(const ComplexMatrix& m, const Tolerances& tol = {});

struct SweepSample {
  double theta = 0.0;
  /// NaN when the root finder failed at this point.
  double radius = 0.0;
};

struct SweepPeak {
  double theta = 0.0;
  Complex t;
  double radius = 0.0;
};

/// R(m(e^{i theta})) on theta_k = 2 pi k / grid plus the refined maximum.
struct SweepResult {
  int grid = 0;
  bool refined = false;
  std::vector<SweepSample> samples;
  SweepPeak best;
  int refinement_iterations = 0;
  /// One line per grid or refinement point that was skipped.
  std::vector<std::string> diagnostics;

  double grid_max() const;
};

/// Throws ArgumentError if grid < 8. Grid points are evaluated concurrently;
/// each local maximum of the grid sequence is then refined by golden-section
/// search until the bracket is narrower than tol.refinement_interval. Ties in
/// the maximum go to the smaller theta.
SweepResult sweep_unit_circle(const IntLaurentMatrix& m, int grid, bool refine = true, const Tolerances& tol = {});

/// Columns theta,re_t,im_t,spectral_radius; one row per grid point.
void write_csv(std::ostream& out, const SweepResult& sweep);

/// conj(a_n) + ... + conj(a_0) X^n.
ComplexPolynomial reciprocal_conjugate(const ComplexPolynomial& p);

/// Determinant of the Sylvester matrix. Both degrees must be >= 1.
Complex resultant(const ComplexPolynomial& p, const ComplexPolynomial& q);

enum class UnitRootVerdict { has_unit_root, no_unit_root, inconclusive };
std::string to_string(UnitRootVerdict v);

struct UnitCircleCertificate {
  double resultant_magnitude = 0.0;
  /// |res(p, reciprocal_conjugate(p))| < certificate tolerance: the necessary
  /// condition for a unit-circle root is met.
  bool resultant_vanishes = false;
  /// min over roots of | |r| - 1 |.
  double min_modulus_gap = 0.0;
  UnitRootVerdict verdict = UnitRootVerdict::inconclusive;
};

/// Combines the resultant screen with a direct look at the roots. A vanishing
/// resultant whose roots all sit clearly off the circle comes from a reciprocal
/// pair r, 1/conj(r) and is reported as no_unit_root.
UnitCircleCertificate unit_circle_root_certificate(const ComplexPolynomial& p, const Tolerances& tol = {});

}  // namespace burau
