#include "lspace/homfly.hpp"
#include "skein_oracle.hpp"

#include <doctest.h>

#include <random>

using namespace lspace;

namespace {

LaurentPoly2 az(int a, int z, int c = 1) { return LaurentPoly2::monomial(BigInt(c), {a, z}); }
LaurentPoly1 zpow(int k, int c = 1) { return LaurentPoly1::monomial(BigInt(c), {k}, {"z"}); }

BraidWord random_word(std::mt19937& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> gen(1, strands - 1), sign(0, 1), len(0, max_len);
  std::vector<int> letters;
  for (int k = len(rng); k > 0; --k) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return {strands, letters};
}

// P(mirror L)(a, z) = P(L)(a^-1, -z)
LaurentPoly2 mirror(const LaurentPoly2& p) {
  LaurentPoly2 out;
  for (const auto& [e, c] : p.terms()) out += az(-e[0], e[1], e[1] % 2 ? -1 : 1) * LaurentPoly2(c);
  return out;
}

}  // namespace

TEST_CASE("Hecke algebra relations") {
  const HeckeElement one(3);
  CHECK(one.nonzero_terms() == 1);
  const HeckeElement g1 = one.times_generator(1);
  CHECK(g1.coeff(std::vector<int>{1, 0, 2}) == zpow(0));

  // g^2 = 1 + z g
  const HeckeElement g1g1 = g1.times_generator(1);
  CHECK(g1g1.coeff(std::vector<int>{0, 1, 2}) == zpow(0));
  CHECK(g1g1.coeff(std::vector<int>{1, 0, 2}) == zpow(1));
  CHECK(g1g1.nonzero_terms() == 2);

  CHECK(g1.times_generator(-1) == one);
  CHECK(one.times_generator(-2).times_generator(2) == one);
  CHECK(hecke_image(parse_braid("1,2,1")) == hecke_image(parse_braid("2,1,2")));
  CHECK(hecke_image(parse_braid("1,3", 4)) == hecke_image(parse_braid("3,1", 4)));
  CHECK(hecke_image(parse_braid("-1,-2,-1")) == hecke_image(parse_braid("-2,-1,-2")));
  CHECK_THROWS_AS(one.times_generator(3), HomflyError);
  CHECK_THROWS_AS(one.times_generator(0), HomflyError);
}

TEST_CASE("Ocneanu trace normalisation") {
  const auto tables = hecke_tables(3);
  CHECK(tables->dimension() == 6);
  const LaurentPoly2 delta = az(1, -1) - az(-1, -1);
  CHECK(ocneanu_trace(*tables, tables->index_of({0, 1, 2})) == delta * delta);
  CHECK(ocneanu_trace(*tables, tables->index_of({1, 0, 2})) == az(1, 0) * delta);
  CHECK(ocneanu_trace(*tables, tables->index_of({0, 2, 1})) == az(1, 0) * delta);
  CHECK(ocneanu_trace(*tables, tables->index_of({1, 2, 0})) == az(2, 0));
}

TEST_CASE("HOMFLY examples") {
  CHECK(homfly(BraidWord(1, {})) == LaurentPoly2(1));
  CHECK(homfly(parse_braid("1")) == LaurentPoly2(1));
  CHECK(homfly(parse_braid("-1,2", 3)) == LaurentPoly2(1));
  // Trefoil value frozen from the skein oracle.
  const LaurentPoly2 trefoil = -az(-4, 0) + az(-2, 0, 2) + az(-2, 2);
  CHECK(oracle::homfly_skein(parse_braid("1,1,1")) == trefoil);
  CHECK(homfly(parse_braid("1,1,1")) == trefoil);
  CHECK(homfly(parse_braid("-1,-1,-1")) == mirror(trefoil));
  CHECK(homfly(parse_braid("1,-2,1,-2")) == az(-2, 0) - 1 - az(0, 2) + az(2, 0));
  // two-component unlink
  CHECK(homfly(BraidWord(2, {})) == az(1, -1) - az(-1, -1));
}

TEST_CASE("Markov invariance on random words") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int s = 2 + trial % 3;
    const BraidWord b = random_word(rng, s, 7);
    const LaurentPoly2 p = homfly(b);
    const BraidWord w = random_word(rng, s, 3);
    CHECK(homfly(w * b * w.inverse()) == p);
    std::vector<int> up(b.letters().begin(), b.letters().end());
    up.push_back(s);
    CHECK(homfly(BraidWord(s + 1, up)) == p);
    up.back() = -s;
    CHECK(homfly(BraidWord(s + 1, up)) == p);
    std::vector<int> negated(b.letters().begin(), b.letters().end());
    for (int& e : negated) e = -e;
    CHECK(homfly(BraidWord(s, negated)) == mirror(p));
  }
}

TEST_CASE("Hecke route agrees with the skein oracle") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const BraidWord b = random_word(rng, 2 + trial % 3, 8);
    CHECK(homfly(b) == oracle::homfly_skein(b));
  }
}

TEST_CASE("z parity matches component count") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const BraidWord b = random_word(rng, 2 + trial % 3, 8);
    const int parity = (closure_components(b) - 1) % 2;
    const LaurentPoly2 p = homfly(b);
    for (const auto& [e, c] : p.terms()) CHECK(((e[1] % 2) + 2) % 2 == (parity + 2) % 2);
  }
}

TEST_CASE("MFW bound") {
  CHECK(mfw_lower_bound(homfly(parse_braid("1,1,1"))) == 2);
  CHECK(mfw_lower_bound(LaurentPoly2(1)) == 1);
  CHECK_THROWS_AS(mfw_lower_bound(LaurentPoly2()), HomflyError);

  const BraidIndexResult kink = braid_index_bounds(parse_braid("1"));
  CHECK_FALSE(kink.certified());
  CHECK(kink.to_string() == "inconclusive (MFW lower bound 1, upper bound 2)");
  CHECK(braid_index_certified(parse_braid("1,1,1")) == 2);

  for (int n = 1; n <= 3; ++n) {
    const BraidIndexResult r = braid_index_bounds(family_braid(n));
    CHECK(r.lower_bound == 4);
    CHECK(r.to_string() == "4");
  }
}
