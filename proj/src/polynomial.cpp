#include "lspace/polynomial.hpp"

#include <vector>

namespace lspace {

BigInt exact_quotient(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("division by zero");
  BigInt q = num / den;
  if (q * den != num) throw std::domain_error("inexact integer division");
  return q;
}

BigInt evaluate_unit(const LaurentPoly1& p, int at) {
  if (at != 1 && at != -1) throw PolynomialError("evaluate_unit: point must be 1 or -1");
  BigInt sum(0);
  for (const auto& [e, c] : p.terms()) {
    bool odd = (e[0] % 2) != 0;
    sum += (at == -1 && odd) ? BigInt(-c) : c;
  }
  return sum;
}

LaurentPoly1 reflect(const LaurentPoly1& p) {
  LaurentPoly1 out(p.names());
  for (const auto& [e, c] : p.terms())
    out += LaurentPoly1::monomial(c, {-e[0]}, p.names());
  return out;
}

LaurentPoly1 exact_quotient(const LaurentPoly1& num, const LaurentPoly1& den) {
  if (den.is_zero()) throw PolynomialError("exact_quotient: division by zero polynomial");
  if (num.is_zero()) return LaurentPoly1(num.names());

  // Shift both to ordinary polynomials with nonzero constant term, then run
  // schoolbook division from the top degree down.
  const int num_lo = num.min_exponent(0);
  const int den_lo = den.min_exponent(0);
  const int num_deg = num.max_exponent(0) - num_lo;
  const int den_deg = den.max_exponent(0) - den_lo;
  if (num_deg < den_deg)
    throw PolynomialError("exact_quotient: divisor has larger span than dividend");

  std::vector<BigInt> rem(static_cast<std::size_t>(num_deg) + 1, BigInt(0));
  std::vector<BigInt> dv(static_cast<std::size_t>(den_deg) + 1, BigInt(0));
  for (const auto& [e, c] : num.terms()) rem[e[0] - num_lo] = c;
  for (const auto& [e, c] : den.terms()) dv[e[0] - den_lo] = c;
  const BigInt& lead = dv.back();

  std::vector<BigInt> quot(static_cast<std::size_t>(num_deg - den_deg) + 1, BigInt(0));
  for (int k = num_deg - den_deg; k >= 0; --k) {
    const BigInt& top = rem[k + den_deg];
    if (top == 0) continue;
    BigInt q = top / lead;
    if (q * lead != top)
      throw PolynomialError("exact_quotient: leading coefficient does not divide");
    quot[k] = q;
    for (int j = 0; j <= den_deg; ++j) rem[k + j] -= q * dv[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw PolynomialError("exact_quotient: nonzero remainder");

  LaurentPoly1 out(num.names());
  for (std::size_t k = 0; k < quot.size(); ++k)
    out += LaurentPoly1::monomial(quot[k], {static_cast<int>(k) + num_lo - den_lo}, num.names());
  return out;
}

LaurentPoly1 specialize(const LaurentPoly2& p, std::size_t var, int value) {
  if (var > 1) throw PolynomialError("specialize: variable index out of range");
  if (value == 0) throw PolynomialError("specialize: cannot evaluate a Laurent polynomial at 0");
  const std::size_t keep = 1 - var;
  LaurentPoly1 out(LaurentPoly1::Names{p.names()[keep]});
  for (const auto& [e, c] : p.terms()) {
    // value^k for k possibly negative; only ±1 give integer results for k < 0.
    BigInt factor(1);
    int k = e[var];
    if (k < 0 && value != 1 && value != -1)
      throw PolynomialError("specialize: negative power of a non-unit value");
    for (int r = 0; r < std::abs(k); ++r) factor *= value;
    out += LaurentPoly1::monomial(c * factor, {e[keep]}, out.names());
  }
  return out;
}

}  // namespace lspace
