#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace lspace {

// Expression templates are off so BigInt behaves as a plain value type inside
// Eigen matrices and `auto` declarations.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

inline std::string to_string(const BigInt& x) { return x.str(); }

// Throws std::domain_error unless `den` divides `num`.
BigInt exact_quotient(const BigInt& num, const BigInt& den);

}  // namespace lspace
