#include "lspace/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace lspace;

namespace {

LaurentPoly1 t(int k, int c = 1) { return LaurentPoly1::monomial(BigInt(c), {k}); }
LaurentPoly2 az(int a, int z, int c = 1) { return LaurentPoly2::monomial(BigInt(c), {a, z}); }

LaurentPoly1 random_poly1(std::mt19937& rng, int terms = 4, int spread = 4) {
  std::uniform_int_distribution<int> exp(-spread, spread), coeff(-5, 5);
  LaurentPoly1 p;
  for (int k = 0; k < terms; ++k) p += t(exp(rng), coeff(rng));
  return p;
}

LaurentPoly2 random_poly2(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-3, 3), coeff(-4, 4), count(0, 5);
  LaurentPoly2 p;
  for (int k = count(rng); k > 0; --k) p += az(exp(rng), exp(rng), coeff(rng));
  return p;
}

}  // namespace

TEST_CASE("ring arithmetic examples") {
  CHECK((t(1) - 1) * (t(1) + 1) == t(2) - 1);
  CHECK((t(1) * LaurentPoly1(0)).is_zero());
  CHECK((t(1) + t(-1)) * (t(1) + t(-1)) == t(2) + 2 + t(-2));
  CHECK(t(3) - t(3) == LaurentPoly1());
}

TEST_CASE("breadth") {
  CHECK(breadth(az(4, 1) - az(-2, 0), 0) == 6);
  CHECK(breadth(LaurentPoly2(1), 0) == 0);
  CHECK(breadth(az(0, 3) + az(0, 1), 0) == 0);
  CHECK_THROWS_AS(breadth(LaurentPoly2(), 0), PolynomialError);
}

TEST_CASE("evaluate_unit") {
  CHECK(evaluate_unit(t(1) - 1 + t(-1), 1) == 1);
  CHECK(evaluate_unit(t(2) - 1, 1) == 0);
  CHECK(evaluate_unit(t(1) + t(-1), -1) == -2);
  CHECK_THROWS_AS(evaluate_unit(t(1), 2), PolynomialError);
}

TEST_CASE("variable mismatch is rejected but constants adapt") {
  const LaurentPoly1 z = LaurentPoly1::variable(0, {"z"});
  CHECK_THROWS_AS(z + t(1), PolynomialError);
  CHECK_THROWS_AS(z * t(1), PolynomialError);
  CHECK((z + 1).names()[0] == "z");
  CHECK((LaurentPoly1(3) * z).names()[0] == "z");
}

TEST_CASE("canonical text form") {
  CHECK((t(-1) - 1 + t(1)).to_string() == "1*t^-1 - 1 + 1*t");
  CHECK(LaurentPoly1().to_string() == "0");
  CHECK((az(-2, 2) - az(-4, 0)).to_string() == "-1*a^-4 + 1*a^-2*z^2");
  CHECK(LaurentPoly1::parse("t^2 - 1") == t(2) - 1);
  CHECK(LaurentPoly1::parse("-3*t^-2 + t - t + 7") == t(-2, -3) + 7);
  CHECK(LaurentPoly2::parse("a^2*z^-1 + 2") == az(2, -1) + 2);
  CHECK_THROWS_AS(LaurentPoly1::parse("t^"), PolynomialError);
  CHECK_THROWS_AS(LaurentPoly1::parse("3 t"), PolynomialError);
  CHECK_THROWS_AS(LaurentPoly1::parse("x + 1"), PolynomialError);
  CHECK_THROWS_AS(LaurentPoly1::parse(""), PolynomialError);
}

TEST_CASE("big coefficients survive arithmetic") {
  LaurentPoly1 p = t(1) + 1;
  LaurentPoly1 acc(1);
  for (int k = 0; k < 100; ++k) acc = acc * p;
  // middle binomial coefficient C(100, 50) does not fit in 64 bits
  CHECK(acc.coeff({50}) == BigInt("100891344545564193334812497256"));
  CHECK(LaurentPoly1::parse(acc.to_string()) == acc);
}

TEST_CASE("exact division") {
  CHECK(exact_quotient(t(3) - 1, t(1) - 1) == t(2) + t(1) + 1);
  CHECK(exact_quotient(t(-2) * (t(2) - 1), t(1) + 1) == t(-1) - t(-2));
  CHECK_THROWS_AS(exact_quotient(t(2) + 1, t(1) + 1), PolynomialError);
  CHECK_THROWS_AS(exact_quotient(t(1), LaurentPoly1()), PolynomialError);
  CHECK_THROWS_AS(exact_quotient(2 * t(1) + 1, 2 * t(1) + 2), PolynomialError);
}

TEST_CASE("specialize") {
  const LaurentPoly2 p = az(1, -1) - az(-1, -1) + az(2, 2);
  CHECK(specialize(p, 0, 1) == LaurentPoly1::monomial(BigInt(1), {2}, {"z"}));
  CHECK(specialize(p, 1, -1) == -(LaurentPoly1::monomial(BigInt(1), {1}, {"a"}) -
                                  LaurentPoly1::monomial(BigInt(1), {-1}, {"a"})) +
                                    LaurentPoly1::monomial(BigInt(1), {2}, {"a"}));
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly2(rng), q = random_poly2(rng), r = random_poly2(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == LaurentPoly2());
  }
}

TEST_CASE("text and JSON round trips") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly2(rng);
    CHECK(LaurentPoly2::parse(p.to_string()) == p);
    CHECK(LaurentPoly2::from_json(nlohmann::json::parse(p.to_json().dump())) == p);
    const auto q = random_poly1(rng);
    CHECK(LaurentPoly1::parse(q.to_string()) == q);
  }
}

TEST_CASE("product degree bounds without cancellation") {
  // Positive coefficients cannot cancel, so extreme exponents add.
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> exp(-6, 6), coeff(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly1 p, q;
    for (int k = 0; k < 3; ++k) {
      p += t(exp(rng), coeff(rng));
      q += t(exp(rng), coeff(rng));
    }
    const auto pq = p * q;
    CHECK(pq.min_exponent(0) == p.min_exponent(0) + q.min_exponent(0));
    CHECK(pq.max_exponent(0) == p.max_exponent(0) + q.max_exponent(0));
  }
}
