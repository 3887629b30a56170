#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace burau {

/// One-line permutation of {1..n}: entry i-1 holds the image of i.
using Permutation = std::vector<int>;

/// A word in the Artin generators of B_n. Letter k > 0 is sigma_k, k < 0 is
/// sigma_|k|^-1. Words are never rewritten with the braid relations; the
/// leftmost letter acts first.
class BraidWord {
 public:
  /// Throws ArgumentError if strands < 2 or a letter is outside [1, n-1].
  BraidWord(int strands, std::vector<int> letters = {});

  static BraidWord identity(int strands) { return BraidWord(strands); }

  int strands() const { return strands_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Parses whitespace-separated tokens. Each token is either a signed integer
/// ("1", "-2") or a symbolic generator ("s1", "s2^-1"); the two may be mixed.
BraidWord parse_braid(std::string_view text, int strands);

/// Canonical signed-integer rendering, e.g. "1 -2". The identity renders as "".
std::string to_string(const BraidWord& w);

/// Letters of a followed by letters of b.
BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);
int exponent_sum(const BraidWord& w);

/// Permutation i -> mu_i with (x_i)w = A_i x_{mu_i} A_i^-1, obtained by
/// composing the transpositions (k, k+1) of the letters in word order.
Permutation permutation(const BraidWord& w);

/// Applies p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

}  // namespace burau
