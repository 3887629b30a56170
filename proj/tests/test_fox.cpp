#include <doctest.h>

#include "burau/error.hpp"
#include "burau/fox.hpp"
#include "burau/laurent.hpp"
#include "burau/serialize.hpp"
#include "burau/spectral.hpp"
#include "support/test_support.hpp"

using namespace burau;

namespace {

FreeWord word(int rank, std::vector<int> letters) { return FreeWord::reduce(rank, letters); }
GroupRingElement elem(const FreeWord& w) { return GroupRingElement(w); }

const IntLaurent one(1);
const IntLaurent t = IntLaurent::t_power(1);
const IntLaurent tinv = IntLaurent::t_power(-1);

IntLaurentMatrix matrix(std::vector<std::vector<IntLaurent>> rows) {
  IntLaurentMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

TEST_CASE("Fox derivative examples") {
  CHECK(fox_derivative(word(3, {2}), 2) == GroupRingElement::one(3));
  CHECK(fox_derivative(word(3, {2}), 1).is_zero());
  CHECK(fox_derivative(word(3, {-2}), 2) == BigInt(-1) * elem(word(3, {-2})));
  const auto w = word(3, {1, 3, -1});
  CHECK(fox_derivative(w, 1) == GroupRingElement::one(3) - elem(w));
  CHECK(fox_derivative(w, 3) == elem(word(3, {1})));
  CHECK(fox_derivative(FreeWord(3), 1).is_zero());
  CHECK_THROWS_AS(fox_derivative(w, 4), ArgumentError);
  CHECK_THROWS_AS(fox_derivative(w, 0), ArgumentError);
}

TEST_CASE("linear extension") {
  const auto w = word(3, {1, 3, -1});
  CHECK(fox_derivative(elem(w) + elem(w), 1) == BigInt(2) * fox_derivative(w, 1));
  CHECK(fox_derivative(GroupRingElement(3), 2).is_zero());
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = testing::random_word(rng, 3, 10);
    const auto b = testing::random_word(rng, 3, 10);
    for (int j = 1; j <= 3; ++j) {
      CHECK(fox_derivative(elem(a) + elem(b), j) == fox_derivative(a, j) + fox_derivative(b, j));
    }
  }
}

TEST_CASE("abelianisation and monomial counts") {
  CHECK(abelianize(GroupRingElement::one(3) - elem(word(3, {1, 3, -1}))) == one - t);
  CHECK(abelianize(GroupRingElement(3)).is_zero());
  CHECK(abelianize(elem(word(3, {1, 2})) + elem(word(3, {2, 1}))) == IntLaurent::monomial(BigInt(2), 2));
  CHECK(monomial_count(fox_derivative(word(3, {1, 3, -1}), 1)) == 2);
  CHECK(monomial_count(GroupRingElement(3)) == 0);
  CHECK(fox_derivative(word(3, {2, 2}), 2) == GroupRingElement::one(3) + elem(word(3, {2})));
  CHECK(monomial_count(fox_derivative(word(3, {2, 2}), 2)) == 2);
}

TEST_CASE("Fox calculus properties on random words (property)") {
  std::mt19937_64 rng(testing::kSeed + 1);
  for (int trial = 0; trial < 150; ++trial) {
    const int rank = testing::random_strands(rng, 1, 5);
    const auto a = testing::random_word(rng, rank, 12);
    const auto b = testing::random_word(rng, rank, 12);
    GroupRingElement fundamental(rank);
    for (int j = 1; j <= rank; ++j) {
      const auto da = fox_derivative(a, j);
      // product rule
      CHECK(fox_derivative(a * b, j) == da + elem(a) * fox_derivative(b, j));
      // scan against the rules
      CHECK(da == fox_derivative_by_rules(a, j));
      CHECK(monomial_count(da) == a.occurrences(j));
      fundamental += da * (elem(FreeWord::generator(rank, j)) - GroupRingElement::one(rank));
    }
    CHECK(fundamental == elem(a) - GroupRingElement::one(rank));
  }
}

TEST_CASE("Burau matrix examples") {
  CHECK(burau_matrix(BraidWord(2, {1})).matrix == matrix({{one - t, t}, {one, IntLaurent()}}));
  CHECK(reduced_burau(BraidWord(2, {1})).matrix == matrix({{-t}}));
  for (int n = 2; n <= 6; ++n) {
    CHECK(burau_matrix(BraidWord::identity(n)).matrix == IntLaurentMatrix::identity(static_cast<std::size_t>(n)));
    CHECK(reduced_burau(BraidWord::identity(n)).matrix ==
          IntLaurentMatrix::identity(static_cast<std::size_t>(n - 1)));
  }
  const auto ex1 = burau_matrix(BraidWord(3, {1, -2}));
  CHECK(ex1.matrix == matrix({{one - t, IntLaurent(), t}, {one, IntLaurent(), IntLaurent()},
                              {IntLaurent(), tinv, one - tinv}}));
  CHECK(ex1.flavor == BurauFlavor::full);
  CHECK(ex1.exponent_sum == 0);
  const auto r1 = reduced_burau(BraidWord(3, {1, -2}));
  CHECK(r1.flavor == BurauFlavor::reduced);
  const auto X = IntBivariate::variable();
  CHECK(charpoly(r1.matrix) == X * X - IntBivariate(one - t - tinv) * X + IntBivariate(one));
  const auto from_auto = burau_matrix(artin_action(BraidWord(4, {1, -2, -3})));
  CHECK(from_auto == burau_matrix(BraidWord(4, {1, -2, -3})));
  CHECK(from_auto.exponent_sum == -1);
}

TEST_CASE("Burau construction rejects non-braid automorphisms") {
  const FreeAutomorphism bad(2, {word(2, {1, 2}), word(2, {2})});
  CHECK_THROWS_AS(burau_matrix(bad), ArgumentError);
}

TEST_CASE("Alexander polynomial") {
  const auto x = IntBivariate::variable();
  CHECK(alexander_polynomial(BraidWord::identity(2)) == IntBivariate(one) - x);
  CHECK(alexander_polynomial(BraidWord(2, {1})) == IntBivariate(-t) - x);
  CHECK(alexander_polynomial(BraidWord(3, {1, -2})) == x * x - IntBivariate(one - t - tinv) * x + IntBivariate(one));
  CHECK(to_string(alexander_polynomial(BraidWord(3, {1, -2})), "x", "t", true) == "1 + (t - 1 + t^-1)*x + x^2");
}

TEST_CASE("multiplicativity") {
  CHECK(verify_multiplicativity(BraidWord(3, {1}), BraidWord(3, {-1})));
  CHECK(burau_matrix(BraidWord(3, {1, -1})).matrix == IntLaurentMatrix::identity(3));
  CHECK(verify_multiplicativity(BraidWord(3, {1}), BraidWord(3, {-2})));
  CHECK_THROWS_AS(verify_multiplicativity(BraidWord(3, {1}), BraidWord(4, {1})), ArgumentError);
}

TEST_CASE("Burau matrices of random braids (property)") {
  std::mt19937_64 rng(testing::kSeed + 2);
  const auto X = IntBivariate::variable();
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testing::random_strands(rng);
    const auto u = testing::random_braid(rng, n, 10);
    const auto v = testing::random_braid(rng, n, 10);
    CHECK(verify_multiplicativity(u, v));
    const auto b = burau_matrix(u);
    CHECK(b.matrix == testing::burau_by_blocks(u));
    const auto act = artin_action(u);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        CHECK(b.matrix(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) ==
              abelianize(fox_derivative(act.image(i), j)));
      }
    }
    CHECK(rows_sum_to_one(b.matrix));
    CHECK(weighted_columns_hold(b.matrix));
    const auto r = reduced_burau(b);
    CHECK(reduced_burau(compose(u, v)).matrix == r.matrix * reduced_burau(v).matrix);
    CHECK(charpoly(b.matrix) == (X - IntBivariate(one)) * charpoly(r.matrix));
    // t = 1 gives the permutation matrix of the braid
    const auto p = permutation(u);
    const auto at_one = specialize(b.matrix, 1.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double want = p[static_cast<std::size_t>(i)] == j + 1 ? 1.0 : 0.0;
        CHECK(at_one(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == Complex(want, 0.0));
      }
    }
    // |b_ij(t)| <= a_ij on the unit circle
    const auto occ = occurrence_matrix(artin_action(u));
    const auto z = testing::random_unit(rng);
    const auto bz = specialize(b.matrix, z);
    for (std::size_t i = 0; i < bz.size(); ++i) {
      for (std::size_t j = 0; j < bz.size(); ++j) {
        CHECK(std::abs(bz(i, j)) <= static_cast<double>(occ(i, j)) + 1e-12);
      }
    }
  }
}

TEST_CASE("row and column identities detect corruption") {
  auto m = burau_matrix(BraidWord(3, {1, -2})).matrix;
  CHECK(rows_sum_to_one(m));
  m(0, 0) += one;
  CHECK_FALSE(rows_sum_to_one(m));
  CHECK_FALSE(weighted_columns_hold(m));
}

TEST_CASE("Burau JSON round trip") {
  std::mt19937_64 rng(testing::kSeed + 3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = testing::random_strands(rng);
    const auto w = testing::random_braid(rng, n, 8);
    for (const auto& b : {burau_matrix(w), reduced_burau(w)}) {
      const auto j = to_json(b);
      CHECK(burau_from_json(j) == b);
      CHECK(burau_from_json(json::parse(j.dump())) == b);
    }
  }
  CHECK_THROWS_AS(burau_from_json(json::parse(R"({"dimension": 2})")), ParseError);
  CHECK(int_laurent_from_json(to_json(one - t)) == one - t);
}
