#pragma once

#include "lspace/bigint.hpp"
#include "lspace/polynomial.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <utility>

namespace lspace {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = MatrixX<BigInt>;
using PolyMatrix = MatrixX<LaurentPoly1>;

template <typename Scalar>
bool is_zero_scalar(const Scalar& x) {
  if constexpr (requires { x.is_zero(); }) {
    return x.is_zero();
  } else {
    return x == 0;
  }
}

/// Determinant by Bareiss elimination. Every intermediate division is exact
/// over an integral domain, so this works for any Scalar with an
/// `exact_quotient(Scalar, Scalar)` overload.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  MatrixX<Scalar> m = input;
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);

  bool negate = false;
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (is_zero_scalar(m(k, k))) {
      Eigen::Index swap_row = k + 1;
      while (swap_row < n && is_zero_scalar(m(swap_row, k))) ++swap_row;
      if (swap_row == n) return Scalar(0);
      m.row(k).swap(m.row(swap_row));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_quotient(num, prev);
      }
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

template <typename Scalar>
MatrixX<Scalar> identity_matrix(Eigen::Index n) {
  MatrixX<Scalar> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Scalar(i == j ? 1 : 0);
  return m;
}

}  // namespace lspace
