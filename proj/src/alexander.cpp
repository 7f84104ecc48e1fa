#include "lspace/alexander.hpp"

#include <cstdlib>

namespace lspace {

namespace {

LaurentPoly1 t_power(int k, const BigInt& c = BigInt(1)) {
  return LaurentPoly1::monomial(c, {k});
}

}  // namespace

BurauMatrix reduced_burau(int generator, int strands) {
  const int i = std::abs(generator);
  if (strands < 2 || i < 1 || i > strands - 1)
    throw AlexanderError("Burau generator " + std::to_string(generator) + " out of range for " +
                         std::to_string(strands) + " strands");
  const int dim = strands - 1;
  BurauMatrix m = identity_matrix<LaurentPoly1>(dim);

  // Local 3×3 block on rows/cols i−1, i, i+1 (1-based), then clipped.
  LaurentPoly1 block[3][3];
  if (generator > 0) {
    block[0][0] = 1, block[0][1] = t_power(1), block[0][2] = 0;
    block[1][0] = 0, block[1][1] = t_power(1, -1), block[1][2] = 0;
    block[2][0] = 0, block[2][1] = 1, block[2][2] = 1;
  } else {
    block[0][0] = 1, block[0][1] = 1, block[0][2] = 0;
    block[1][0] = 0, block[1][1] = t_power(-1, -1), block[1][2] = 0;
    block[2][0] = 0, block[2][1] = t_power(-1), block[2][2] = 1;
  }
  for (int r = 0; r < 3; ++r) {
    const int row = i - 2 + r;  // 0-based
    if (row < 0 || row >= dim) continue;
    for (int c = 0; c < 3; ++c) {
      const int col = i - 2 + c;
      if (col < 0 || col >= dim) continue;
      m(row, col) = block[r][c];
    }
  }
  return m;
}

BurauMatrix reduced_burau(const BraidWord& b) {
  if (b.strands() < 2) return identity_matrix<LaurentPoly1>(0);
  BurauMatrix acc = identity_matrix<LaurentPoly1>(b.strands() - 1);
  for (int e : b.letters()) acc = (acc * reduced_burau(e, b.strands())).eval();
  return acc;
}

LaurentPoly1 alexander_poly(const BraidWord& b) {
  if (!is_knot_closure(b)) throw AlexanderError("Alexander polynomial requires a knot closure");
  const int s = b.strands();
  if (s == 1) return LaurentPoly1(1);

  BurauMatrix m = identity_matrix<LaurentPoly1>(s - 1) - reduced_burau(b);
  LaurentPoly1 det = determinant(m);

  // (1 − t^s)/(1 − t) = 1 + t + ... + t^{s−1}
  LaurentPoly1 cyclotomic_sum;
  for (int k = 0; k < s; ++k) cyclotomic_sum += t_power(k);
  LaurentPoly1 delta;
  try {
    delta = exact_quotient(det, cyclotomic_sum);
  } catch (const PolynomialError& e) {
    throw AlexanderError(std::string("Burau determinant not divisible by 1 + t + ... + t^(s-1): ") +
                         e.what());
  }
  if (delta.is_zero()) throw AlexanderError("Alexander polynomial vanished for a knot closure");

  // Centre the exponents, then fix the sign with Δ(1) = 1.
  const int lo = delta.min_exponent(0);
  const int hi = delta.max_exponent(0);
  if ((lo + hi) % 2 != 0) throw AlexanderError("Alexander polynomial has odd exponent span");
  delta = delta.shifted({-(lo + hi) / 2});
  const BigInt at_one = evaluate_unit(delta, 1);
  if (at_one == -1) {
    delta = -delta;
  } else if (at_one != 1) {
    throw AlexanderError("Alexander polynomial has Δ(1) = " + at_one.str());
  }
  if (reflect(delta) != delta) throw AlexanderError("Alexander polynomial is not symmetric");
  return delta;
}

int genus_from_alexander(const LaurentPoly1& delta) {
  const int span = breadth(delta, 0);
  if (span % 2 != 0) throw AlexanderError("odd Alexander span");
  return span / 2;
}

bool lspace_form_check(const LaurentPoly1& delta) {
  if (delta.is_zero()) return false;
  int expected = 1;
  // terms() is ascending; walk it from the top degree down.
  for (auto it = delta.terms().rbegin(); it != delta.terms().rend(); ++it) {
    if (it->second != expected) return false;
    expected = -expected;
  }
  return true;
}

}  // namespace lspace
