#include "burau/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>
#include <thread>

#include "burau/error.hpp"

namespace burau {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool ComplexMatrix::is_finite() const {
  return std::all_of(a_.begin(), a_.end(), [](const Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw ArgumentError("matrix dimension mismatch");
  ComplexMatrix r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  }
  return r;
}

ComplexMatrix specialize(const IntLaurentMatrix& m, Complex t) {
  if (t == Complex{}) throw DomainError("cannot specialise a Laurent matrix at t = 0");
  ComplexMatrix c(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) c(i, j) = m(i, j).eval(t);
  }
  if (!c.is_finite()) throw DomainError("specialised matrix has non-finite entries");
  return c;
}

double max_row_sum(const ComplexMatrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j) row += std::abs(m(i, j));
    best = std::max(best, row);
  }
  return best;
}

namespace {

// In-place reduction to upper Hessenberg form by Householder reflections.
void to_hessenberg(ComplexMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm2 += std::norm(a(i, k));
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) continue;
    const Complex x0 = a(k + 1, k);
    const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
    std::vector<Complex> v(n - k - 1);
    for (std::size_t i = k + 1; i < n; ++i) v[i - k - 1] = a(i, k);
    v[0] += phase * norm;
    double vnorm2 = 0.0;
    for (const auto& c : v) vnorm2 += std::norm(c);
    if (vnorm2 == 0.0) continue;
    // H = I - 2 v v* / (v* v); apply H A H.
    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i - k - 1]) * a(i, j);
      s *= 2.0 / vnorm2;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= v[i - k - 1] * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex s{};
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j - k - 1];
      s *= 2.0 / vnorm2;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= s * std::conj(v[j - k - 1]);
    }
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

using Coeffs = std::vector<Complex>;

}  // namespace

ComplexPolynomial char_poly_complex(const ComplexMatrix& m) {
  const std::size_t n = m.size();
  if (n > kMaxDenseDimension) {
    throw DimensionError("dense characteristic polynomial limited to dimension " + std::to_string(kMaxDenseDimension));
  }
  if (!m.is_finite()) throw DomainError("matrix has non-finite entries");
  ComplexMatrix h = m;
  to_hessenberg(h);
  // p[k] = det(X I - H[0..k, 0..k]), ascending coefficients.
  std::vector<Coeffs> p(n + 1);
  p[0] = {Complex(1.0)};
  for (std::size_t k = 1; k <= n; ++k) {
    Coeffs next(k + 1);
    const Coeffs& prev = p[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] += prev[d];
      next[d] -= h(k - 1, k - 1) * prev[d];
    }
    Complex sub = 1.0;
    for (std::size_t i = k - 1; i-- > 0;) {
      sub *= h(i + 1, i);
      const Complex f = h(i, k - 1) * sub;
      if (f == Complex{}) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] -= f * p[i][d];
    }
    p[k] = std::move(next);
  }
  return ComplexPolynomial(std::move(p[n]));
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Roots closer than this (relative) are examined as a possible multiple root.
constexpr double kClusterRadius = 5e-3;
// A cluster of size m is accepted as an m-fold root when p, ..., p^(m-1) all
// vanish at the refined centre to this relative accuracy.
constexpr double kClusterResidual = 1e-11;

bool at_rounding_level(const ComplexPolynomial& p, Complex z) {
  return std::abs(p(z)) <= 16.0 * (p.degree() + 1) * kEps * p.magnitude_at(z);
}

std::vector<double> residuals(const ComplexPolynomial& p, const std::vector<Complex>& z) {
  std::vector<double> r;
  r.reserve(z.size());
  for (const auto& x : z) r.push_back(std::abs(p(x)));
  return r;
}

std::vector<Complex> aberth(const ComplexPolynomial& p, const Tolerances& tol) {
  const int n = p.degree();
  const auto c = p.coefficients();
  const Complex centre = -c[static_cast<std::size_t>(n - 1)] / (static_cast<double>(n) * c[static_cast<std::size_t>(n)]);
  double radius = std::pow(std::abs(c[0]) / std::abs(c[static_cast<std::size_t>(n)]), 1.0 / n);
  if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;
  radius = std::max(radius, std::abs(centre) * 0.5 + 1e-3);

  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    z[static_cast<std::size_t>(k)] = centre + std::polar(radius, 2.0 * std::numbers::pi * k / n + 0.7);
  }
  const ComplexPolynomial dp = p.derivative();
  std::vector<bool> done(z.size(), false);

  for (int iter = 0; iter < tol.max_root_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (done[k]) continue;
      const Complex pz = p(z[k]);
      if (pz == Complex{} || at_rounding_level(p, z[k])) {
        done[k] = true;
        continue;
      }
      all_done = false;
      const Complex dpz = dp(z[k]);
      Complex sum{};
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      }
      Complex w;
      if (dpz == Complex{}) {
        w = Complex(radius * 1e-3, radius * 1e-3);
      } else {
        const Complex ratio = pz / dpz;
        w = ratio / (1.0 - ratio * sum);
      }
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = Complex(radius * 1e-3, 0.0);
      z[k] -= w;
      if (std::abs(w) < tol.root_convergence * (1.0 + std::abs(z[k]))) done[k] = true;
    }
    if (all_done) return z;
  }
  if (std::all_of(done.begin(), done.end(), [](bool d) { return d; })) return z;
  throw ConvergenceError("root iteration did not converge in " + std::to_string(tol.max_root_iterations) + " steps",
                         z, residuals(p, z));
}

// Replaces each numerically multiple root by a single refined value.
void merge_clusters(const ComplexPolynomial& p, std::vector<Complex>& z) {
  const std::size_t n = z.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double scale = 1.0 + std::max(std::abs(z[i]), std::abs(z[j]));
      if (std::abs(z[i] - z[j]) <= kClusterRadius * scale) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);

  for (const auto& g : groups) {
    const std::size_t m = g.size();
    if (m < 2) continue;
    Complex centre{};
    for (auto i : g) centre += z[i];
    centre /= static_cast<double>(m);

    std::vector<ComplexPolynomial> derivs{p};
    for (std::size_t k = 1; k < m; ++k) derivs.push_back(derivs.back().derivative());
    const ComplexPolynomial& q = derivs[m - 1];
    const ComplexPolynomial dq = q.degree() >= 1 ? q.derivative() : q;
    Complex c = centre;
    for (int it = 0; it < 30 && q.degree() >= 1; ++it) {
      const Complex d = dq(c);
      if (d == Complex{}) break;
      const Complex step = q(c) / d;
      c -= step;
      if (std::abs(step) <= 4.0 * kEps * (1.0 + std::abs(c))) break;
    }
    if (std::abs(c - centre) > kClusterRadius * (1.0 + std::abs(centre))) continue;
    bool multiple = true;
    for (std::size_t k = 0; k + 1 < m && multiple; ++k) {
      multiple = std::abs(derivs[k](c)) <= kClusterResidual * derivs[k].magnitude_at(c);
    }
    if (!multiple) continue;
    for (auto i : g) z[i] = c;
  }
}

}  // namespace

std::vector<Complex> roots(const ComplexPolynomial& p, const Tolerances& tol) {
  if (p.degree() < 1) throw ArgumentError("roots of a constant polynomial are undefined");
  // Exact zero roots are split off first.
  std::vector<Complex> zeros;
  std::size_t shift = 0;
  while (p[shift] == Complex{}) {
    zeros.emplace_back();
    ++shift;
  }
  const auto all = p.coefficients();
  ComplexPolynomial q(std::vector<Complex>(all.begin() + static_cast<std::ptrdiff_t>(shift), all.end()));

  std::vector<Complex> z;
  if (q.degree() == 1) {
    z.push_back(-q[0] / q[1]);
  } else if (q.degree() > 1) {
    z = aberth(q, tol);
    merge_clusters(q, z);
  }
  z.insert(z.end(), zeros.begin(), zeros.end());
  return z;
}

std::optional<double> greatest_real_root(const ComplexPolynomial& p, const Tolerances& tol) {
  std::optional<double> best;
  for (const auto& r : roots(p, tol)) {
    if (std::abs(r.imag()) > tol.comparison * (1.0 + std::abs(r.real()))) continue;
    if (!best || r.real() > *best) best = r.real();
  }
  return best;
}

double spectral_radius(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.size() == 0) return 0.0;
  double best = 0.0;
  for (const auto& r : roots(char_poly_complex(m), tol)) best = std::max(best, std::abs(r));
  return best;
}

double SweepResult::grid_max() const {
  double best = 0.0;
  for (const auto& s : samples) {
    if (!std::isnan(s.radius)) best = std::max(best, s.radius);
  }
  return best;
}

namespace {

double radius_at(const IntLaurentMatrix& m, double theta, const Tolerances& tol) {
  return spectral_radius(specialize(m, std::polar(1.0, theta)), tol);
}

std::string format_theta(double theta) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", theta);
  return buf;
}

}  // namespace

SweepResult sweep_unit_circle(const IntLaurentMatrix& m, int grid, bool refine, const Tolerances& tol) {
  if (grid < 8) throw ArgumentError("sweep grid must have at least 8 points, got " + std::to_string(grid));
  SweepResult result;
  result.grid = grid;
  result.refined = refine;
  result.samples.resize(static_cast<std::size_t>(grid));
  const double step = 2.0 * std::numbers::pi / grid;

  std::vector<std::string> errors(static_cast<std::size_t>(grid));
  auto evaluate = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double theta = step * static_cast<double>(k);
      result.samples[k].theta = theta;
      try {
        result.samples[k].radius = radius_at(m, theta, tol);
      } catch (const ConvergenceError& e) {
        result.samples[k].radius = std::numeric_limits<double>::quiet_NaN();
        errors[k] = e.what();
      }
    }
  };
  const std::size_t total = result.samples.size();
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  if (workers == 1 || total < 64) {
    evaluate(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t b = 0; b < total; b += chunk) pool.emplace_back(evaluate, b, std::min(total, b + chunk));
  }
  for (std::size_t k = 0; k < total; ++k) {
    if (!errors[k].empty()) result.diagnostics.push_back("skipped theta=" + format_theta(result.samples[k].theta) + ": " + errors[k]);
  }

  std::vector<SweepPeak> peaks;
  for (std::size_t k = 0; k < total; ++k) {
    const double r = result.samples[k].radius;
    if (std::isnan(r)) continue;
    peaks.push_back({result.samples[k].theta, std::polar(1.0, result.samples[k].theta), r});
  }
  if (peaks.empty()) throw ConvergenceError("every sweep point failed to converge", {}, {});

  if (refine) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (std::size_t k = 0; k < total; ++k) {
      const double r = result.samples[k].radius;
      const double left = result.samples[(k + total - 1) % total].radius;
      const double right = result.samples[(k + 1) % total].radius;
      if (std::isnan(r) || std::isnan(left) || std::isnan(right)) continue;
      if (!(r >= left && r >= right && (r > left || r > right))) continue;

      const double theta0 = result.samples[k].theta;
      double a = theta0 - step;
      double b = theta0 + step;
      auto f = [&](double theta) {
        try {
          return radius_at(m, theta, tol);
        } catch (const ConvergenceError& e) {
          result.diagnostics.push_back("refinement skipped theta=" + format_theta(theta) + ": " + e.what());
          return -std::numeric_limits<double>::infinity();
        }
      };
      SweepPeak local{theta0, std::polar(1.0, theta0), r};
      double x1 = b - invphi * (b - a);
      double x2 = a + invphi * (b - a);
      double f1 = f(x1);
      double f2 = f(x2);
      while (b - a > tol.refinement_interval) {
        ++result.refinement_iterations;
        if (f1 >= f2) {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - invphi * (b - a);
          f1 = f(x1);
        } else {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + invphi * (b - a);
          f2 = f(x2);
        }
        for (auto [x, fx] : {std::pair{x1, f1}, std::pair{x2, f2}}) {
          if (fx > local.radius * (1.0 + 8.0 * kEps)) {
            double theta = std::fmod(x, 2.0 * std::numbers::pi);
            if (theta < 0.0) theta += 2.0 * std::numbers::pi;
            local = {theta, std::polar(1.0, theta), fx};
          }
        }
      }
      peaks.push_back(local);
    }
  }

  result.best = *std::min_element(peaks.begin(), peaks.end(), [](const SweepPeak& x, const SweepPeak& y) {
    if (x.radius != y.radius) return x.radius > y.radius;
    return x.theta < y.theta;
  });
  return result;
}

void write_csv(std::ostream& out, const SweepResult& sweep) {
  out << "theta,re_t,im_t,spectral_radius\n";
  char buf[160];
  for (const auto& s : sweep.samples) {
    const Complex t = std::polar(1.0, s.theta);
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g\n", s.theta, t.real(), t.imag(), s.radius);
    out << buf;
  }
}

ComplexPolynomial reciprocal_conjugate(const ComplexPolynomial& p) {
  if (p.degree() < 1) throw ArgumentError("reciprocal conjugate needs degree >= 1");
  const auto c = p.coefficients();
  std::vector<Complex> r(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) r[k] = std::conj(c[c.size() - 1 - k]);
  return ComplexPolynomial(std::move(r));
}

Complex resultant(const ComplexPolynomial& p, const ComplexPolynomial& q) {
  const int m = p.degree();
  const int n = q.degree();
  if (m < 1 || n < 1) throw ArgumentError("resultant needs two polynomials of degree >= 1");
  const std::size_t size = static_cast<std::size_t>(m + n);
  ComplexMatrix s(size);
  // Rows 0..n-1 carry p shifted, rows n..n+m-1 carry q shifted; descending powers.
  for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) {
    for (int k = 0; k <= m; ++k) s(r, r + static_cast<std::size_t>(k)) = p[static_cast<std::size_t>(m - k)];
  }
  for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r) {
    for (int k = 0; k <= n; ++k) s(n + r, r + static_cast<std::size_t>(k)) = q[static_cast<std::size_t>(n - k)];
  }
  // LU with partial pivoting.
  Complex det = 1.0;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < size; ++r) {
      if (std::abs(s(r, col)) > std::abs(s(pivot, col))) pivot = r;
    }
    if (s(pivot, col) == Complex{}) return Complex{};
    if (pivot != col) {
      for (std::size_t j = 0; j < size; ++j) std::swap(s(pivot, j), s(col, j));
      det = -det;
    }
    det *= s(col, col);
    for (std::size_t r = col + 1; r < size; ++r) {
      const Complex f = s(r, col) / s(col, col);
      if (f == Complex{}) continue;
      for (std::size_t j = col; j < size; ++j) s(r, j) -= f * s(col, j);
    }
  }
  return det;
}

std::string to_string(UnitRootVerdict v) {
  switch (v) {
    case UnitRootVerdict::has_unit_root: return "has unit root";
    case UnitRootVerdict::no_unit_root: return "no unit root";
    case UnitRootVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

UnitCircleCertificate unit_circle_root_certificate(const ComplexPolynomial& p, const Tolerances& tol) {
  if (p.degree() < 1) throw ArgumentError("unit circle certificate needs degree >= 1");
  // Gap beyond which a vanishing resultant is attributed to an off-circle pair.
  constexpr double kOffCircle = 1e-3;
  UnitCircleCertificate cert;
  cert.resultant_magnitude = std::abs(resultant(p, reciprocal_conjugate(p)));
  cert.resultant_vanishes = cert.resultant_magnitude < tol.certificate;
  cert.min_modulus_gap = std::numeric_limits<double>::infinity();
  for (const auto& r : roots(p, tol)) cert.min_modulus_gap = std::min(cert.min_modulus_gap, std::abs(std::abs(r) - 1.0));

  const bool near_circle = cert.min_modulus_gap <= tol.unit_root_gap;
  if (cert.resultant_vanishes && near_circle) {
    cert.verdict = UnitRootVerdict::has_unit_root;
  } else if (!cert.resultant_vanishes && !near_circle) {
    cert.verdict = UnitRootVerdict::no_unit_root;
  } else if (cert.resultant_vanishes && cert.min_modulus_gap > kOffCircle) {
    cert.verdict = UnitRootVerdict::no_unit_root;
  } else {
    cert.verdict = UnitRootVerdict::inconclusive;
  }
  return cert;
}

}  // namespace burau
