#include <doctest.h>

#include <cmath>

#include "burau/error.hpp"
#include "burau/fox.hpp"
#include "burau/laurent.hpp"
#include "burau/polynomial.hpp"
#include "support/test_support.hpp"

using namespace burau;

namespace {

const IntLaurent one(1);
const IntLaurent t = IntLaurent::t_power(1);
const IntLaurent tinv = IntLaurent::t_power(-1);
const IntBivariate X = IntBivariate::variable();

IntBivariate constant(const IntLaurent& p) { return IntBivariate(p); }

void check_close(const ComplexPolynomial& got, const ComplexPolynomial& want, double tol = 1e-12) {
  REQUIRE(got.degree() == want.degree());
  for (int k = 0; k <= want.degree(); ++k) {
    CHECK(std::abs(got[static_cast<std::size_t>(k)] - want[static_cast<std::size_t>(k)]) <= tol);
  }
}

ComplexPolynomial real_poly(std::vector<double> ascending) {
  std::vector<Complex> c(ascending.begin(), ascending.end());
  return ComplexPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("ring operation examples") {
  CHECK((one - t) + t == one);
  CHECK(tinv * t == one);
  CHECK((one - t - tinv) * t == t - t * t - one);
  CHECK((t - t).is_zero());
  CHECK((t - t).term_count() == 0);
  CHECK(-(one - t) == t - one);
  CHECK(t.shifted(-3) == IntLaurent::t_power(-2));
}

TEST_CASE("rendering of Laurent polynomials") {
  CHECK(to_string(one - t) == "-t + 1");
  CHECK(to_string(t - 2 * one + tinv) == "t - 2 + t^-1");
  CHECK(to_string(IntLaurent()) == "0");
  CHECK(to_string(IntLaurent::monomial(BigInt(-3), -2)) == "-3*t^-2");
}

TEST_CASE("ring axioms on random sparse polynomials (property)") {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::random_laurent(rng);
    const auto q = testing::random_laurent(rng);
    const auto r = testing::random_laurent(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p - p).is_zero());
    CHECK(p * one == p);
    const auto pq = p * q;
    for (const auto& [e, c] : pq.terms()) CHECK_FALSE(c.is_zero());
  }
}

TEST_CASE("bar examples and properties") {
  CHECK((IntLaurent::t_power(-2) - tinv + one).bar() == t * t - t + one);
  CHECK(one.bar() == one);
  std::mt19937_64 rng(testing::kSeed + 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = testing::random_laurent(rng);
    const auto q = testing::random_laurent(rng);
    CHECK(p.bar().bar() == p);
    CHECK((p * q).bar() == p.bar() * q.bar());
    CHECK((p + q).bar() == p.bar() + q.bar());
  }
  const ComplexLaurent z = ComplexLaurent::monomial(Complex(1, 2), 3);
  CHECK(z.bar() == ComplexLaurent::monomial(Complex(1, -2), -3));
}

TEST_CASE("eval examples") {
  CHECK((one - t - tinv).eval(-1.0) == Complex(3, 0));
  CHECK((IntLaurent::t_power(-2) - tinv + one).eval(-1.0) == Complex(3, 0));
  CHECK_THROWS_AS(t.eval(0.0), DomainError);
  CHECK(IntLaurent().eval(2.0) == Complex{});
  std::mt19937_64 rng(testing::kSeed + 2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = testing::random_laurent(rng);
    CHECK(p.eval(1.0).real() == doctest::Approx(p.coefficient_sum().convert_to<double>()));
  }
}

TEST_CASE("eval agrees with a direct power sum and is multiplicative on |t| = 1 (property)") {
  std::mt19937_64 rng(testing::kSeed + 3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::random_laurent(rng);
    const auto q = testing::random_laurent(rng);
    const auto z = testing::random_unit(rng);
    const Complex pz = p.eval(z), qz = q.eval(z);
    const double scale = 1.0 + std::abs(pz) * std::abs(qz);
    CHECK(std::abs((p * q).eval(z) - pz * qz) <= 1e-10 * scale);
    CHECK(std::abs(pz - testing::naive_eval(p, z)) <= 1e-10 * (1.0 + std::abs(pz)));
    // conj on the unit circle is t -> t^-1
    CHECK(std::abs(p.bar().eval(z) - std::conj(pz)) <= 1e-10 * (1.0 + std::abs(pz)));
  }
}

TEST_CASE("complex normalisation drops negligible terms") {
  ComplexLaurent p;
  p.add_term(0, Complex(1, 0));
  p.add_term(2, Complex(1e-15, 0));
  p.add_term(-1, Complex(0, 2));
  const auto n = p.normalized(1e-12);
  CHECK(n.term_count() == 2);
  CHECK(n.coefficient(-1) == Complex(0, 2));
  CHECK(to_complex(t - one) == ComplexLaurent::t_power(1) - ComplexLaurent(Complex(1, 0)));
}

TEST_CASE("charpoly examples") {
  CHECK(charpoly(IntLaurentMatrix::identity(2)) == (X - constant(one)) * (X - constant(one)));
  const auto a = one - t - tinv;
  const auto ex1 = burau_matrix(BraidWord(3, {1, -2})).matrix;
  CHECK(charpoly(ex1) == (X - constant(one)) * (X * X - constant(a) * X + constant(one)));
  const auto ex2 = burau_matrix(BraidWord(4, {1, -2, -3})).matrix;
  CHECK(charpoly(ex2) == (X - constant(one)) * (X * X * X - constant(a) * X * X +
                                                constant(IntLaurent::t_power(-2) - tinv + one) * X + constant(tinv)));
  CHECK(to_string(charpoly(ex1)) == "X^3 + (t - 2 + t^-1)*X^2 + (-t + 2 - t^-1)*X - 1");
  CHECK_THROWS_AS(charpoly(IntLaurentMatrix::identity(13)), DimensionError);
}

TEST_CASE("charpoly agrees with the Leibniz expansion (property)") {
  std::mt19937_64 rng(testing::kSeed + 4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testing::random_strands(rng, 2, 5);
    const auto m = burau_matrix(testing::random_braid(rng, n, 10)).matrix;
    CHECK(charpoly(m) == testing::leibniz_charpoly(m));
  }
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::random_strands(rng, 1, 4));
    IntLaurentMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = testing::random_laurent(rng, 3, 3, 4);
    }
    CHECK(charpoly(m) == testing::leibniz_charpoly(m));
  }
}

TEST_CASE("specialisation at t = -1") {
  const auto full2 = charpoly(burau_matrix(BraidWord(4, {1, -2, -3})).matrix).specialize(-1.0);
  check_close(full2, real_poly({1, -4, 6, -4, 1}));
  const auto red2 = charpoly(reduced_burau(BraidWord(4, {1, -2, -3})).matrix).specialize(-1.0);
  check_close(red2, real_poly({-1, 3, -3, 1}));
  const auto ex1 = charpoly(burau_matrix(BraidWord(3, {1, -2})).matrix).specialize(-1.0);
  check_close(ex1, real_poly({1, -3, 1}) * real_poly({-1, 1}));
  const auto ex3 = charpoly(burau_matrix(BraidWord(5, {4, 3, 2, 1, 4, 3})).matrix).specialize(-1.0);
  check_close(ex3, real_poly({1, 1, -1, 1, 1}) * real_poly({-1, 1}));
  CHECK_THROWS_AS(X.specialize(0.0), DomainError);
}

TEST_CASE("bivariate rendering") {
  CHECK(to_string(X - constant(one)) == "X - 1");
  CHECK(to_string(X - constant(one), "x", "t", true) == "-1 + x");
  CHECK(to_string(constant(t) * X * X) == "t*X^2");
}
