#include "burau/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "burau/error.hpp"
#include "burau/fox.hpp"
#include "burau/freegroup.hpp"

namespace burau {

EntropyBound entropy_lower_bound(const BraidWord& w, int grid, bool refine, const Tolerances& tol) {
  const auto b = burau_matrix(w).matrix;
  EntropyBound out;
  out.sweep = sweep_unit_circle(b, grid, refine, tol);
  out.bound = std::log(std::max(1.0, out.sweep.best.radius));
  out.spots.push_back({"t=-1", Complex(-1.0, 0.0), spectral_radius(specialize(b, Complex(-1.0, 0.0)), tol)});
  for (int k = 3; k <= 6; ++k) {
    const Complex t = std::polar(1.0, 2.0 * std::numbers::pi / k);
    out.spots.push_back({"t=exp(2pi i/" + std::to_string(k) + ")", t, spectral_radius(specialize(b, t), tol)});
  }
  return out;
}

GapReport strict_gap_check(const BraidWord& w, double lambda, int grid, const Tolerances& tol) {
  if (!(lambda > 1.0)) throw ArgumentError("strict gap check needs lambda > 1");
  if (grid < 8) throw ArgumentError("strict gap check needs a grid of at least 8 points");
  const auto full = burau_matrix(w);
  const IntBivariate reduced_char = charpoly(reduced_burau(full).matrix);

  GapReport report;
  report.lambda = lambda;
  report.grid = grid;
  report.min_resultant = std::numeric_limits<double>::infinity();
  for (int k = 0; k < grid; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / grid;
    const ComplexPolynomial p = reduced_char.specialize(std::polar(1.0, theta));
    std::vector<Complex> scaled(p.coefficients().begin(), p.coefficients().end());
    double power = 1.0;
    for (auto& c : scaled) {
      c *= power;
      power *= lambda;
    }
    try {
      const auto cert = unit_circle_root_certificate(ComplexPolynomial(std::move(scaled)), tol);
      if (cert.resultant_magnitude < report.min_resultant) {
        report.min_resultant = cert.resultant_magnitude;
        report.min_resultant_theta = theta;
      }
      report.vanishing_resultant_points += cert.resultant_vanishes ? 1 : 0;
      report.unit_root_points += cert.verdict == UnitRootVerdict::has_unit_root ? 1 : 0;
      report.inconclusive_points += cert.verdict == UnitRootVerdict::inconclusive ? 1 : 0;
    } catch (const ConvergenceError& e) {
      ++report.inconclusive_points;
      report.diagnostics.push_back("theta=" + std::to_string(theta) + ": " + e.what());
    }
  }

  const auto sweep = sweep_unit_circle(full.matrix, grid, true, tol);
  report.sweep_max = sweep.best.radius;
  report.sweep_max_theta = sweep.best.theta;
  report.diagnostics.insert(report.diagnostics.end(), sweep.diagnostics.begin(), sweep.diagnostics.end());
  report.gap_holds = report.sweep_max < lambda - tol.comparison && report.vanishing_resultant_points == 0 &&
                     report.unit_root_points == 0;
  return report;
}

double reciprocal_symmetry_defect(const std::vector<Complex>& eigenvalues) {
  std::vector<bool> used(eigenvalues.size(), false);
  double worst = 0.0;
  for (const auto& z : eigenvalues) {
    const Complex target = 1.0 / std::conj(z);
    std::size_t best = eigenvalues.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(eigenvalues[j] - target) / (1.0 + std::abs(target));
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best == eigenvalues.size()) return std::numeric_limits<double>::infinity();
    used[best] = true;
    worst = std::max(worst, best_dist);
  }
  return worst;
}

namespace {

BraidWord random_braid(std::mt19937_64& rng, int strands, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> letters(static_cast<std::size_t>(len(rng)));
  for (int& l : letters) l = gen(rng) * (sign(rng) ? 1 : -1);
  return BraidWord(strands, std::move(letters));
}

Complex random_unit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

}  // namespace

std::vector<InvariantCheck> verify_invariants(const BraidWord& w, const VerifyOptions& opts) {
  std::vector<InvariantCheck> checks;
  std::mt19937_64 rng(opts.seed);
  const auto alpha = artin_action(w);
  const auto full = burau_matrix(w);
  const auto reduced = reduced_burau(full);
  const auto& b = full.matrix;
  const std::size_t n = b.size();

  checks.push_back({"braid_property", verify_braid_property(alpha), "images are conjugates of generators fixing x1...xn"});
  checks.push_back({"row_sums", rows_sum_to_one(b), "sum_k b_ik = 1"});
  checks.push_back({"weighted_columns", weighted_columns_hold(b), "sum_k t^(k-1) b_kj = t^(j-1)"});

  {
    bool ok = true;
    for (int k = 0; k < opts.random_factors && ok; ++k) {
      const auto v = random_braid(rng, w.strands(), 10);
      ok = verify_multiplicativity(w, v) && verify_multiplicativity(v, w);
      ok = ok && reduced_burau(compose(w, v)).matrix == reduced.matrix * reduced_burau(v).matrix;
    }
    checks.push_back({"multiplicativity", ok,
                      std::to_string(opts.random_factors) + " random factors on both sides, full and reduced"});
  }

  {
    const auto at_one = specialize(b, Complex(1.0, 0.0));
    const auto mu = permutation(w);
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double expected = static_cast<std::size_t>(mu[i] - 1) == j ? 1.0 : 0.0;
        ok = ok && at_one(i, j) == Complex(expected, 0.0);
      }
    }
    checks.push_back({"permutation_at_t1", ok, "B(1) is the permutation matrix of the braid"});
  }

  {
    const IntBivariate x_minus_one({IntLaurent(-1), IntLaurent(1)});
    const bool ok = charpoly(b) == x_minus_one * charpoly(reduced.matrix);
    checks.push_back({"charpoly_factorization", ok, "charpoly(B) = (X - 1) charpoly(B^r)"});
  }

  {
    double worst_symmetry = 0.0;
    double worst_one = 0.0;
    bool occurrence_ok = true;
    const auto occ = occurrence_matrix(alpha);
    for (int k = 0; k < opts.random_points; ++k) {
      const Complex t = random_unit(rng);
      worst_symmetry = std::max(worst_symmetry, reciprocal_symmetry_defect(roots(char_poly_complex(specialize(reduced.matrix, t)), opts.tol)));
      double nearest_one = std::numeric_limits<double>::infinity();
      const auto bt = specialize(b, t);
      for (const auto& z : roots(char_poly_complex(bt), opts.tol)) nearest_one = std::min(nearest_one, std::abs(z - 1.0));
      worst_one = std::max(worst_one, nearest_one);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          occurrence_ok = occurrence_ok && std::abs(bt(i, j)) <= static_cast<double>(occ(i, j)) + 1e-12;
        }
      }
    }
    checks.push_back({"reciprocal_symmetry", worst_symmetry <= 1e-7,
                      "reduced spectrum closed under z -> 1/conj(z); worst defect " + fmt(worst_symmetry)});
    checks.push_back({"eigenvalue_one", worst_one <= 1e-8, "full spectrum contains 1; worst distance " + fmt(worst_one)});
    checks.push_back({"occurrence_bound", occurrence_ok, "a_ij >= |b_ij(t)| at random |t| = 1"});
  }

  {
    bool ok = true;
    auto power = alpha;
    auto burau_power = b;
    for (int p = 1; p <= opts.max_power && ok; ++p) {
      if (p > 1) {
        if (power.total_length() > 2'000'000) break;
        power = compose(power, alpha);
        burau_power = burau_power * b;
      }
      const double norm = static_cast<double>(matrix_norm(occurrence_matrix(power)));
      for (int k = 0; k < 4; ++k) ok = ok && max_row_sum(specialize(burau_power, random_unit(rng))) <= norm * (1.0 + 1e-12);
    }
    checks.push_back({"norm_chain", ok, "||A_{a^p}|| >= ||B(t)^p|| for p <= " + std::to_string(opts.max_power)});
  }

  {
    bool count_ok = true;
    bool identity_ok = true;
    for (const auto& image : alpha.images()) {
      GroupRingElement sum(alpha.rank());
      for (int j = 1; j <= alpha.rank(); ++j) {
        const auto d = fox_derivative(image, j);
        count_ok = count_ok && monomial_count(d) == image.occurrences(j) && d == fox_derivative_by_rules(image, j);
        sum += d * (GroupRingElement(FreeWord::generator(alpha.rank(), j)) - GroupRingElement::one(alpha.rank()));
      }
      identity_ok = identity_ok && sum == GroupRingElement(image) - GroupRingElement::one(alpha.rank());
    }
    checks.push_back({"fox_monomials", count_ok, "monomials of d/dx_j equal occurrences of x_j; scan matches rules"});
    checks.push_back({"fox_fundamental_identity", identity_ok, "sum_j d_j(w)(x_j - 1) = w - 1"});
  }

  if (opts.lambda) {
    const auto gap = strict_gap_check(w, *opts.lambda, opts.grid, opts.tol);
    checks.push_back({"strict_gap", gap.gap_holds,
                      "lambda=" + fmt(gap.lambda) + " sweep_max=" + fmt(gap.sweep_max) + " min|res|=" + fmt(gap.min_resultant) +
                          " unit_root_points=" + std::to_string(gap.unit_root_points)});
  }
  return checks;
}

}  // namespace burau
