#pragma once

namespace burau {

/// Every numerical threshold used by the spectral code, in one place.
struct Tolerances {
  /// Root iteration stops once max |update| < root_convergence * (1 + |root|).
  double root_convergence = 1e-13;
  int max_root_iterations = 500;
  /// Equality of floating values (spectral radii, eigenvalue matching).
  double comparison = 1e-9;
  /// |resultant| below this counts as a vanishing resultant.
  double certificate = 1e-8;
  /// Golden-section refinement stops once the theta bracket is narrower than this.
  double refinement_interval = 1e-10;
  /// A root within this distance of |X| = 1 counts as lying on the unit circle.
  double unit_root_gap = 1e-6;
  /// Leading coefficients with magnitude at or below this are dropped.
  double leading_coefficient = 1e-12;
  /// Pruning threshold for explicit normalisation of complex Laurent polynomials.
  double complex_prune = 1e-12;
};

}  // namespace burau
