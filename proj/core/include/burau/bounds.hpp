#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burau/braid.hpp"
#include "burau/spectral.hpp"

namespace burau {

struct SpotValue {
  std::string label;
  Complex t;
  double radius = 0.0;
};

struct EntropyBound {
  /// ln(max(1, R*)) with R* the sweep maximum of the full Burau matrix.
  double bound = 0.0;
  SweepResult sweep;
  /// t = -1 and the primitive roots of unity exp(2 pi i / k), k = 3..6.
  std::vector<SpotValue> spots;
};

EntropyBound entropy_lower_bound(const BraidWord& w, int grid = 1024, bool refine = true, const Tolerances& tol = {});

struct GapReport {
  double lambda = 0.0;
  int grid = 0;
  /// Smallest |res(P, P*)| over the grid, P the reduced char poly with X -> lambda X.
  double min_resultant = 0.0;
  double min_resultant_theta = 0.0;
  /// Grid points whose scaled polynomial was found to have a unit-circle root.
  int unit_root_points = 0;
  int inconclusive_points = 0;
  int vanishing_resultant_points = 0;
  /// Refined sweep maximum of the full Burau matrix.
  double sweep_max = 0.0;
  double sweep_max_theta = 0.0;
  /// sweep_max < lambda, no vanishing resultant, no unit-circle root.
  bool gap_holds = false;
  std::vector<std::string> diagnostics;
};

/// Checks that lambda strictly exceeds sup_{|t|=1} R(B(t)) by scanning t on the
/// grid: a spectral radius equal to lambda at t would put a root of
/// P_r(t)(lambda X) on the unit circle. Requires lambda > 1.
GapReport strict_gap_check(const BraidWord& w, double lambda, int grid = 4096, const Tolerances& tol = {});

struct InvariantCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  int random_factors = 8;
  int random_points = 16;
  int max_power = 3;
  int grid = 1024;
  std::optional<double> lambda;
  Tolerances tol;
};

/// Runs the identities every Burau matrix must satisfy against w.
std::vector<InvariantCheck> verify_invariants(const BraidWord& w, const VerifyOptions& opts = {});

/// Greedy matching of the spectrum with its image under z -> 1/conj(z).
/// Returns the largest matching distance, relative to 1 + |z|.
double reciprocal_symmetry_defect(const std::vector<Complex>& eigenvalues);

}  // namespace burau
