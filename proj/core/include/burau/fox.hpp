#pragma once

#include <map>
#include <optional>

#include "burau/braid.hpp"
#include "burau/freegroup.hpp"
#include "burau/laurent.hpp"

namespace burau {

/// Element of the integral group ring Z F_n: a finite formal sum of reduced
/// words with nonzero integer coefficients.
class GroupRingElement {
 public:
  explicit GroupRingElement(int rank) : rank_(rank) {}
  /// 1 * w
  explicit GroupRingElement(const FreeWord& w) : rank_(w.rank()) { add(w, 1); }

  static GroupRingElement one(int rank) { return GroupRingElement(FreeWord(rank)); }

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<FreeWord, BigInt>& terms() const { return terms_; }
  BigInt coefficient(const FreeWord& w) const;

  void add(const FreeWord& w, const BigInt& c);

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const BigInt& c, const GroupRingElement& a);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  int rank_;
  std::map<FreeWord, BigInt> terms_;
};

std::string to_string(const GroupRingElement& g);

/// d/dx_j of a reduced word by a single left-to-right scan: every occurrence
/// x_j^{+1} contributes +prefix, every x_j^{-1} contributes -(prefix x_j^-1).
GroupRingElement fox_derivative(const FreeWord& w, int j);

/// Linear extension of fox_derivative to the group ring.
GroupRingElement fox_derivative(const GroupRingElement& g, int j);

/// The same derivative obtained only from the defining rules: additivity, the
/// product rule d(uv) = d(u) + u d(v), d(x_i) = delta_ij and d(1) = 0.
/// Used to cross-check the scan.
GroupRingElement fox_derivative_by_rules(const FreeWord& w, int j);

/// Ring morphism Z F_n -> Z[t, t^-1], x_i -> t.
IntLaurent abelianize(const GroupRingElement& g);

/// Sum of |coefficients|.
BigInt monomial_count(const GroupRingElement& g);

enum class BurauFlavor { full, reduced };

/// A Burau matrix together with how it was built. exponent_sum is the algebraic
/// exponent sum e of the source braid (det of the full matrix is (-t)^e); it is
/// empty when built from an automorphism too large for an exact determinant.
struct BurauMatrix {
  IntLaurentMatrix matrix;
  BurauFlavor flavor = BurauFlavor::full;
  std::optional<int> exponent_sum;

  friend bool operator==(const BurauMatrix&, const BurauMatrix&) = default;
};

/// b_ij = abelianize(d/dx_j (x_i)a). Throws ArgumentError if a does not
/// satisfy verify_braid_property.
BurauMatrix burau_matrix(const FreeAutomorphism& a);
BurauMatrix burau_matrix(const BraidWord& w);

/// Restriction of the full matrix to the invariant submodule
/// {X_1 + ... + X_n = 0}, written in the basis u_i = V_i - V_{i+1} and acting on
/// row vectors from the right. Throws Error if the submodule is not invariant.
BurauMatrix reduced_burau(const BurauMatrix& full);
BurauMatrix reduced_burau(const BraidWord& w);

/// burau(u v) == burau(u) * burau(v), exactly.
bool verify_multiplicativity(const BraidWord& u, const BraidWord& v);

/// det(B^r - x I_{n-1}) with outer variable x.
IntBivariate alexander_polynomial(const BraidWord& w);

/// Checks sum_k b_ik = 1 for every row.
bool rows_sum_to_one(const IntLaurentMatrix& b);
/// Checks sum_k t^(k-1) b_kj = t^(j-1) for every column.
bool weighted_columns_hold(const IntLaurentMatrix& b);

}  // namespace burau
