#pragma once

// Seeded generators and independent oracles shared by the test binaries.
// Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "burau/braid.hpp"
#include "burau/freegroup.hpp"
#include "burau/laurent.hpp"

namespace burau::testing {

inline constexpr std::uint64_t kSeed = 0x5eed'b0a5ULL;

inline BraidWord random_braid(std::mt19937_64& rng, int strands, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> letters(static_cast<std::size_t>(len(rng)));
  for (int& l : letters) l = gen(rng) * (sign(rng) ? 1 : -1);
  return BraidWord(strands, std::move(letters));
}

inline int random_strands(std::mt19937_64& rng, int lo = 2, int hi = 6) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Raw (possibly unreduced) letter list.
inline std::vector<int> random_letters(std::mt19937_64& rng, int rank, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, rank);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> letters(static_cast<std::size_t>(len(rng)));
  for (int& l : letters) l = gen(rng) * (sign(rng) ? 1 : -1);
  return letters;
}

inline FreeWord random_word(std::mt19937_64& rng, int rank, int max_length) {
  return FreeWord::reduce(rank, random_letters(rng, rank, max_length));
}

inline IntLaurent random_laurent(std::mt19937_64& rng, int max_terms = 5, int max_exp = 8, int max_coeff = 9) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  IntLaurent p;
  for (int k = count(rng); k > 0; --k) p.add_term(exp(rng), BigInt(coeff(rng)));
  return p;
}

inline std::complex<double> random_unit(std::mt19937_64& rng) {
  return std::polar(1.0, std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng));
}

/// Direct sum of c_k t^k with std::pow.
inline std::complex<double> naive_eval(const IntLaurent& p, std::complex<double> t) {
  std::complex<double> s{};
  for (const auto& [e, c] : p.terms()) s += c.convert_to<double>() * std::pow(t, e);
  return s;
}

/// Burau matrix of sigma_k^{+-1} written down from the 2x2 block
/// [[1 - t, t], [1, 0]] and its inverse [[0, 1], [t^-1, 1 - t^-1]].
inline IntLaurentMatrix generator_block(int n, int k) {
  auto m = IntLaurentMatrix::identity(static_cast<std::size_t>(n));
  const auto i = static_cast<std::size_t>(std::abs(k) - 1);
  const IntLaurent one(1), t = IntLaurent::t_power(1), tinv = IntLaurent::t_power(-1);
  if (k > 0) {
    m(i, i) = one - t;
    m(i, i + 1) = t;
    m(i + 1, i) = one;
    m(i + 1, i + 1) = IntLaurent();
  } else {
    m(i, i) = IntLaurent();
    m(i, i + 1) = one;
    m(i + 1, i) = tinv;
    m(i + 1, i + 1) = one - tinv;
  }
  return m;
}

inline IntLaurentMatrix burau_by_blocks(const BraidWord& w) {
  auto m = IntLaurentMatrix::identity(static_cast<std::size_t>(w.strands()));
  for (int k : w.letters()) m = m * generator_block(w.strands(), k);
  return m;
}

/// det(X I - m) by the Leibniz permutation sum. Only for small n.
inline IntBivariate leibniz_charpoly(const IntLaurentMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  IntBivariate total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    IntBivariate term(IntLaurent(inversions % 2 == 0 ? 1 : -1));
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
      IntBivariate entry(-m(i, perm[i]));
      if (perm[i] == i) entry = entry + IntBivariate::variable();
      term = term * entry;
    }
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Bisection for a sign change of f on [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Greatest real root of a real polynomial (descending coefficients) by
/// scanning for the last sign change on [0, bound] and bisecting it.
inline double greatest_root_by_bisection(const std::vector<double>& descending, double bound = 100.0) {
  auto f = [&](double x) {
    double acc = 0.0;
    for (double c : descending) acc = acc * x + c;
    return acc;
  };
  const int steps = 200000;
  double hi = bound;
  for (int k = steps; k > 0; --k) {
    const double a = bound * (k - 1) / steps;
    const double b = bound * k / steps;
    if ((f(a) < 0) != (f(b) < 0)) return bisect(f, a, b);
    hi = a;
  }
  return hi;
}

}  // namespace burau::testing
