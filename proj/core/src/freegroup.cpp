#include "burau/freegroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "burau/error.hpp"
#include "burau/spectral.hpp"

namespace burau {

namespace {

void check_rank(int rank) {
  if (rank < 1) throw ArgumentError("free group rank must be positive, got " + std::to_string(rank));
}

// Pushes a letter onto a reduced stack; returns true if it cancelled.
bool push_reduced(std::vector<int>& stack, int letter) {
  if (!stack.empty() && stack.back() == -letter) {
    stack.pop_back();
    return true;
  }
  stack.push_back(letter);
  return false;
}

}  // namespace

FreeWord::FreeWord(int rank) : rank_(rank) { check_rank(rank); }

FreeWord FreeWord::reduce(int rank, std::span<const int> raw) {
  check_rank(rank);
  std::vector<int> stack;
  stack.reserve(raw.size());
  for (int letter : raw) {
    if (letter == 0 || std::abs(letter) > rank) {
      throw ArgumentError("free generator index " + std::to_string(letter) + " out of range for rank " +
                          std::to_string(rank));
    }
    push_reduced(stack, letter);
  }
  return FreeWord(rank, std::move(stack));
}

FreeWord FreeWord::inverse() const {
  std::vector<int> r(letters_.rbegin(), letters_.rend());
  for (int& l : r) l = -l;
  return FreeWord(rank_, std::move(r));
}

int FreeWord::exponent_sum() const {
  int e = 0;
  for (int l : letters_) e += l > 0 ? 1 : -1;
  return e;
}

std::size_t FreeWord::occurrences(int j) const {
  return static_cast<std::size_t>(std::count_if(letters_.begin(), letters_.end(), [j](int l) { return std::abs(l) == j; }));
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.rank_ != b.rank_) throw ArgumentError("free word rank mismatch");
  std::vector<int> r = a.letters_;
  for (int l : b.letters_) push_reduced(r, l);
  return FreeWord(a.rank_, std::move(r));
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

FreeAutomorphism::FreeAutomorphism(int rank, std::vector<FreeWord> images) : rank_(rank), images_(std::move(images)) {
  check_rank(rank);
  if (images_.size() != static_cast<std::size_t>(rank)) {
    throw ArgumentError("automorphism of rank " + std::to_string(rank) + " needs " + std::to_string(rank) + " images");
  }
  for (const auto& w : images_) {
    if (w.rank() != rank) throw ArgumentError("automorphism image has wrong rank");
  }
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
  std::vector<FreeWord> images;
  for (int i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(rank, i));
  return FreeAutomorphism(rank, std::move(images));
}

std::size_t FreeAutomorphism::total_length() const {
  std::size_t n = 0;
  for (const auto& w : images_) n += w.length();
  return n;
}

Substitution apply_tracked(const FreeAutomorphism& a, const FreeWord& w) {
  if (a.rank() != w.rank()) throw ArgumentError("automorphism and word have different ranks");
  std::vector<int> stack;
  bool cancelled = false;
  for (int l : w.letters()) {
    const auto img = a.image(std::abs(l)).letters();
    if (l > 0) {
      for (int x : img) cancelled |= push_reduced(stack, x);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) cancelled |= push_reduced(stack, -*it);
    }
  }
  return {FreeWord::reduce(a.rank(), stack), cancelled};
}

FreeWord apply(const FreeAutomorphism& a, const FreeWord& w) { return apply_tracked(a, w).word; }

FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b) {
  if (a.rank() != b.rank()) throw ArgumentError("cannot compose automorphisms of different ranks");
  std::vector<FreeWord> images;
  images.reserve(a.images().size());
  for (const auto& w : a.images()) images.push_back(apply(b, w));
  return FreeAutomorphism(a.rank(), std::move(images));
}

FreeAutomorphism generator_action(int rank, int k) {
  const int i = std::abs(k);
  if (k == 0 || i >= rank) throw ArgumentError("generator sigma_" + std::to_string(k) + " not in B_" + std::to_string(rank));
  std::vector<FreeWord> images;
  for (int j = 1; j <= rank; ++j) images.push_back(FreeWord::generator(rank, j));
  const auto idx = static_cast<std::size_t>(i - 1);
  if (k > 0) {
    // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
    images[idx] = FreeWord::reduce(rank, std::vector<int>{i, i + 1, -i});
    images[idx + 1] = FreeWord::generator(rank, i);
  } else {
    // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    images[idx] = FreeWord::generator(rank, i + 1);
    images[idx + 1] = FreeWord::reduce(rank, std::vector<int>{-(i + 1), i, i + 1});
  }
  return FreeAutomorphism(rank, std::move(images));
}

FreeAutomorphism artin_action(const BraidWord& w) {
  auto a = FreeAutomorphism::identity(w.strands());
  for (int k : w.letters()) a = compose(a, generator_action(w.strands(), k));
  return a;
}

std::optional<Permutation> core_permutation(const FreeAutomorphism& a) {
  Permutation mu;
  mu.reserve(static_cast<std::size_t>(a.rank()));
  for (const auto& w : a.images()) {
    const auto l = w.letters();
    if (l.size() % 2 == 0) return std::nullopt;
    const std::size_t mid = l.size() / 2;
    if (l[mid] <= 0) return std::nullopt;
    for (std::size_t k = 1; k <= mid; ++k) {
      if (l[mid - k] != -l[mid + k]) return std::nullopt;
    }
    mu.push_back(l[mid]);
  }
  return mu;
}

bool verify_braid_property(const FreeAutomorphism& a) {
  const auto mu = core_permutation(a);
  if (!mu) return false;
  std::vector<int> sorted = *mu;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  }
  FreeWord product(a.rank());
  for (const auto& w : a.images()) product = product * w;
  std::vector<int> expected(static_cast<std::size_t>(a.rank()));
  std::iota(expected.begin(), expected.end(), 1);
  return product == FreeWord::reduce(a.rank(), expected);
}

OccurrenceMatrix OccurrenceMatrix::identity(std::size_t n) {
  OccurrenceMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

OccurrenceMatrix operator*(const OccurrenceMatrix& a, const OccurrenceMatrix& b) {
  if (a.n_ != b.n_) throw ArgumentError("occurrence matrix dimension mismatch");
  OccurrenceMatrix r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  }
  return r;
}

OccurrenceMatrix occurrence_matrix(const FreeAutomorphism& a) {
  const auto n = static_cast<std::size_t>(a.rank());
  OccurrenceMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int l : a.images()[i].letters()) m(i, static_cast<std::size_t>(std::abs(l) - 1)) += 1;
  }
  return m;
}

std::uint64_t matrix_norm(const OccurrenceMatrix& m) {
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < m.size(); ++j) row += m(i, j);
    best = std::max(best, row);
  }
  return best;
}

double spectral_radius(const OccurrenceMatrix& m, const Tolerances& tol) {
  ComplexMatrix c(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) c(i, j) = Complex(static_cast<double>(m(i, j)), 0.0);
  }
  return spectral_radius(c, tol);
}

GrowthReport growth_rate_estimate(const FreeAutomorphism& a, int max_power, std::size_t length_budget,
                                  const Tolerances& tol) {
  if (max_power < 1) throw ArgumentError("growth estimate needs max_power >= 1");
  GrowthReport report;
  const auto base = occurrence_matrix(a);
  auto record = [&](int p, const FreeAutomorphism& power, bool cancelled) {
    const auto norm = matrix_norm(occurrence_matrix(power));
    report.steps.push_back({p, norm, std::pow(static_cast<double>(norm), 1.0 / p), cancelled});
  };

  if (a.total_length() > length_budget) {
    report.budget_exhausted = true;
    return report;
  }
  record(1, a, false);

  FreeAutomorphism power = a;
  for (int p = 2; p <= max_power; ++p) {
    // Length of the next power before cancellation bounds the work.
    std::size_t projected = 0;
    for (const auto& w : power.images()) {
      for (int l : w.letters()) projected += a.image(std::abs(l)).length();
    }
    if (projected > length_budget) {
      report.budget_exhausted = true;
      break;
    }
    std::vector<FreeWord> images;
    bool cancelled = false;
    for (const auto& w : power.images()) {
      auto s = apply_tracked(a, w);
      cancelled |= s.cancelled;
      images.push_back(std::move(s.word));
    }
    power = FreeAutomorphism(a.rank(), std::move(images));
    record(p, power, cancelled);
    if (p == 2) report.square_witness = occurrence_matrix(power) == base * base;
  }

  const bool clean = std::none_of(report.steps.begin(), report.steps.end(), [](const GrowthStep& s) { return s.cancelled; });
  if (clean && report.square_witness) report.exact_growth_rate = spectral_radius(base, tol);
  return report;
}

}  // namespace burau
