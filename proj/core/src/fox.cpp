#include "burau/fox.hpp"

#include <cstdlib>

#include "burau/error.hpp"

namespace burau {

namespace {

void check_index(int rank, int j) {
  if (j < 1 || j > rank) {
    throw ArgumentError("derivative index " + std::to_string(j) + " out of range for rank " + std::to_string(rank));
  }
}

}  // namespace

BigInt GroupRingElement::coefficient(const FreeWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void GroupRingElement::add(const FreeWord& w, const BigInt& c) {
  if (w.rank() != rank_) throw ArgumentError("group ring rank mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.rank_ != b.rank_) throw ArgumentError("group ring rank mismatch");
  GroupRingElement r(a.rank_);
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) r.add(u * v, cu * cv);
  }
  return r;
}

GroupRingElement operator*(const BigInt& c, const GroupRingElement& a) {
  GroupRingElement r(a.rank_);
  for (const auto& [w, cw] : a.terms_) r.add(w, c * cw);
  return r;
}

std::string to_string(const GroupRingElement& g) {
  if (g.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : g.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    std::string term = mag == 1 ? to_string(w) : (w.empty() ? mag.str() : mag.str() + "*" + to_string(w));
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

GroupRingElement fox_derivative(const FreeWord& w, int j) {
  check_index(w.rank(), j);
  GroupRingElement r(w.rank());
  const auto letters = w.letters();
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (letters[k] == j) {
      r.add(FreeWord::reduce(w.rank(), letters.first(k)), 1);
    } else if (letters[k] == -j) {
      r.add(FreeWord::reduce(w.rank(), letters.first(k + 1)), -1);
    }
  }
  return r;
}

GroupRingElement fox_derivative(const GroupRingElement& g, int j) {
  check_index(g.rank(), j);
  GroupRingElement r(g.rank());
  for (const auto& [w, c] : g.terms()) r += c * fox_derivative(w, j);
  return r;
}

GroupRingElement fox_derivative_by_rules(const FreeWord& w, int j) {
  check_index(w.rank(), j);
  const auto letters = w.letters();
  if (letters.empty()) return GroupRingElement(w.rank());
  if (letters.size() == 1) {
    const int l = letters[0];
    const int i = std::abs(l);
    GroupRingElement d_generator(w.rank());
    if (i == j) d_generator = GroupRingElement::one(w.rank());
    if (l > 0) return d_generator;
    // 0 = d(x x^-1) = d(x) + x d(x^-1)  =>  d(x^-1) = -x^-1 d(x)
    return BigInt(-1) * (GroupRingElement(w) * d_generator);
  }
  const std::size_t mid = letters.size() / 2;
  const FreeWord u = FreeWord::reduce(w.rank(), letters.first(mid));
  const FreeWord v = FreeWord::reduce(w.rank(), letters.subspan(mid));
  return fox_derivative_by_rules(u, j) + GroupRingElement(u) * fox_derivative_by_rules(v, j);
}

IntLaurent abelianize(const GroupRingElement& g) {
  IntLaurent p;
  for (const auto& [w, c] : g.terms()) p.add_term(w.exponent_sum(), c);
  return p;
}

BigInt monomial_count(const GroupRingElement& g) {
  BigInt n = 0;
  for (const auto& [w, c] : g.terms()) n += c < 0 ? BigInt(-c) : c;
  return n;
}

namespace {

std::optional<int> exponent_from_determinant(const IntLaurentMatrix& b) {
  const std::size_t n = b.size();
  if (n > kMaxExactDimension) return std::nullopt;
  std::vector<IntBivariate> entries;
  entries.reserve(n * n);
  for (const auto& e : b.entries()) entries.emplace_back(e);
  const IntLaurent det = determinant<BigInt>(n, entries).coefficient(0);
  if (!det.is_monomial()) return std::nullopt;
  return det.min_exponent();
}

IntLaurentMatrix fox_jacobian(const FreeAutomorphism& a) {
  if (!verify_braid_property(a)) {
    throw ArgumentError("automorphism is not induced by a braid; Burau matrix undefined");
  }
  const auto n = static_cast<std::size_t>(a.rank());
  IntLaurentMatrix b(n);
  // Same scan as fox_derivative, abelianised on the fly: a prefix only
  // contributes its exponent sum.
  for (std::size_t i = 0; i < n; ++i) {
    int prefix = 0;
    for (int letter : a.images()[i].letters()) {
      const auto j = static_cast<std::size_t>(std::abs(letter) - 1);
      if (letter > 0) {
        b(i, j).add_term(prefix, BigInt(1));
        ++prefix;
      } else {
        --prefix;
        b(i, j).add_term(prefix, BigInt(-1));
      }
    }
  }
  return b;
}

}  // namespace

BurauMatrix burau_matrix(const FreeAutomorphism& a) {
  auto b = fox_jacobian(a);
  auto e = exponent_from_determinant(b);
  return {std::move(b), BurauFlavor::full, e};
}

BurauMatrix burau_matrix(const BraidWord& w) {
  return {fox_jacobian(artin_action(w)), BurauFlavor::full, exponent_sum(w)};
}

BurauMatrix reduced_burau(const BurauMatrix& full) {
  if (full.flavor != BurauFlavor::full) throw ArgumentError("reduced_burau expects a full Burau matrix");
  const std::size_t n = full.matrix.size();
  if (n < 2) throw ArgumentError("reduced Burau matrix needs at least 2 strands");
  const auto& b = full.matrix;
  IntLaurentMatrix r(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // u_i B = row_i - row_{i+1}; its coordinates in the u basis are its partial sums.
    IntLaurent partial;
    for (std::size_t k = 0; k < n; ++k) {
      partial += b(i, k) - b(i + 1, k);
      if (k + 1 < n) r(i, k) = partial;
    }
    if (!partial.is_zero()) {
      throw Error("submodule X_1 + ... + X_n = 0 is not invariant: residual " + to_string(partial));
    }
  }
  return {std::move(r), BurauFlavor::reduced, full.exponent_sum};
}

BurauMatrix reduced_burau(const BraidWord& w) { return reduced_burau(burau_matrix(w)); }

bool verify_multiplicativity(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw ArgumentError("strand count mismatch");
  return burau_matrix(compose(u, v)).matrix == burau_matrix(u).matrix * burau_matrix(v).matrix;
}

IntBivariate alexander_polynomial(const BraidWord& w) {
  const auto r = reduced_burau(w).matrix;
  const std::size_t n = r.size();
  std::vector<IntBivariate> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntBivariate e(r(i, j));
      if (i == j) e = e - IntBivariate::variable();
      entries.push_back(std::move(e));
    }
  }
  return determinant<BigInt>(n, entries);
}

bool rows_sum_to_one(const IntLaurentMatrix& b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    IntLaurent s;
    for (std::size_t k = 0; k < b.size(); ++k) s += b(i, k);
    if (!s.is_constant(BigInt(1))) return false;
  }
  return true;
}

bool weighted_columns_hold(const IntLaurentMatrix& b) {
  for (std::size_t j = 0; j < b.size(); ++j) {
    IntLaurent s;
    for (std::size_t k = 0; k < b.size(); ++k) s += b(k, j).shifted(static_cast<int>(k));
    if (!(s == IntLaurent::t_power(static_cast<int>(j)))) return false;
  }
  return true;
}

}  // namespace burau
