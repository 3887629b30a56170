#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "burau/braid.hpp"
#include "burau/tolerances.hpp"

namespace burau {

/// Reduced word in the free group F_n. Letter +i is x_i, -i is x_i^-1.
class FreeWord {
 public:
  /// The empty word of F_rank.
  explicit FreeWord(int rank);

  /// Freely reduces the raw letters. Throws ArgumentError on an index outside [1, rank].
  static FreeWord reduce(int rank, std::span<const int> raw);
  static FreeWord generator(int rank, int i) { return reduce(rank, std::vector<int>{i}); }

  int rank() const { return rank_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  /// Sum of the exponents of all letters.
  int exponent_sum() const;
  /// Number of letters x_j^{+-1}.
  std::size_t occurrences(int j) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  FreeWord(int rank, std::vector<int> reduced) : rank_(rank), letters_(std::move(reduced)) {}

  int rank_;
  std::vector<int> letters_;
};

/// "x1 x3 x1^-1"; the empty word renders as "1".
std::string to_string(const FreeWord& w);

/// Automorphism of F_n given by generator images, acting on the right:
/// (w)(ab) = ((w)a)b.
class FreeAutomorphism {
 public:
  /// images[i] is (x_{i+1}). Throws ArgumentError if an image has the wrong rank.
  FreeAutomorphism(int rank, std::vector<FreeWord> images);

  static FreeAutomorphism identity(int rank);

  int rank() const { return rank_; }
  /// Image of x_i, 1-based.
  const FreeWord& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<FreeWord>& images() const { return images_; }
  std::size_t total_length() const;

  friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) = default;

 private:
  int rank_;
  std::vector<FreeWord> images_;
};

/// Result of substituting into a word: the reduced image and whether any
/// letters cancelled while reducing.
struct Substitution {
  FreeWord word;
  bool cancelled = false;
};

Substitution apply_tracked(const FreeAutomorphism& a, const FreeWord& w);
FreeWord apply(const FreeAutomorphism& a, const FreeWord& w);

/// Applies a first, then b.
FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b);

/// Automorphism of sigma_k (k > 0) or its inverse (k < 0) on F_rank.
FreeAutomorphism generator_action(int rank, int k);

/// Composes the generator substitutions letter by letter in word order.
FreeAutomorphism artin_action(const BraidWord& w);

/// True iff every image is A x_m A^-1 with the cores forming a permutation,
/// and the product of the images reduces to x_1 x_2 ... x_n.
bool verify_braid_property(const FreeAutomorphism& a);

/// Core generator indices mu_i of a braid-like automorphism, or nullopt if some
/// image is not a conjugate of a single generator.
std::optional<Permutation> core_permutation(const FreeAutomorphism& a);

/// a_ij = occurrences of x_j^{+-1} in the image of x_i.
class OccurrenceMatrix {
 public:
  explicit OccurrenceMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static OccurrenceMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend OccurrenceMatrix operator*(const OccurrenceMatrix& a, const OccurrenceMatrix& b);
  friend bool operator==(const OccurrenceMatrix&, const OccurrenceMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> a_;
};

OccurrenceMatrix occurrence_matrix(const FreeAutomorphism& a);

/// Max row sum.
std::uint64_t matrix_norm(const OccurrenceMatrix& m);

/// Spectral radius of the occurrence matrix as a real matrix.
double spectral_radius(const OccurrenceMatrix& m, const Tolerances& tol = {});

struct GrowthStep {
  int power = 0;
  std::uint64_t norm = 0;
  /// norm^(1/power)
  double estimate = 0.0;
  /// Letters cancelled while forming a^power from a^(power-1).
  bool cancelled = false;
};

struct GrowthReport {
  std::vector<GrowthStep> steps;
  /// Iteration stopped early because the next power would exceed the budget.
  bool budget_exhausted = false;
  /// A_{a^2} == A_a^2 was observed.
  bool square_witness = false;
  /// Spectral radius of A_a, reported only when no step cancelled and the
  /// square witness holds.
  std::optional<double> exact_growth_rate;
};

inline constexpr std::size_t kDefaultLengthBudget = 10'000'000;

/// The sequence ||A_{a^p}||^(1/p) for p = 1..max_power. Images of a^p are
/// built by substituting into the images of a^(p-1); the total image length is
/// capped by length_budget.
GrowthReport growth_rate_estimate(const FreeAutomorphism& a, int max_power,
                                  std::size_t length_budget = kDefaultLengthBudget,
                                  const Tolerances& tol = {});

}  // namespace burau
