#pragma once

#include "lspace/matrix.hpp"

#include <utility>

namespace lspace {

/// Smith normal form with transforms: input = left · diagonal · right, where
/// left and right are unimodular and the diagonal entries d_1 | d_2 | ... are
/// non-negative.
template <typename Scalar>
struct SmithDecomposition {
  MatrixX<Scalar> left;
  MatrixX<Scalar> diagonal;
  MatrixX<Scalar> right;
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

// Elementary operations applied to the working matrix, with the inverse
// operation folded into the transform so that input = left · work · right
// stays true throughout.
template <typename Scalar>
struct SmithState {
  MatrixX<Scalar> work, left, right;

  void swap_rows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    work.row(i).swap(work.row(j));
    left.col(i).swap(left.col(j));
  }
  void swap_cols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    work.col(i).swap(work.col(j));
    right.row(i).swap(right.row(j));
  }
  // row_i += k · row_j
  void add_row(Eigen::Index i, Eigen::Index j, const Scalar& k) {
    if (k == 0) return;
    for (Eigen::Index c = 0; c < work.cols(); ++c) work(i, c) += k * work(j, c);
    for (Eigen::Index r = 0; r < left.rows(); ++r) left(r, j) -= k * left(r, i);
  }
  // col_i += k · col_j
  void add_col(Eigen::Index i, Eigen::Index j, const Scalar& k) {
    if (k == 0) return;
    for (Eigen::Index r = 0; r < work.rows(); ++r) work(r, i) += k * work(r, j);
    for (Eigen::Index c = 0; c < right.cols(); ++c) right(j, c) -= k * right(i, c);
  }
  void negate_row(Eigen::Index i) {
    for (Eigen::Index c = 0; c < work.cols(); ++c) work(i, c) = -work(i, c);
    for (Eigen::Index r = 0; r < left.rows(); ++r) left(r, i) = -left(r, i);
  }
};

}  // namespace detail

/// Exact integer Smith normal form. Pivots are chosen by smallest magnitude in
/// the remaining block, which keeps entries small on the tiny matrices this
/// library produces.
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(
    const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using detail::abs_value;
  const Eigen::Index rows = input.rows();
  const Eigen::Index cols = input.cols();
  detail::SmithState<Scalar> st{input, identity_matrix<Scalar>(rows),
                                identity_matrix<Scalar>(cols)};

  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the block [t.., t..] goes to (t, t).
      Eigen::Index pr = -1, pc = -1;
      Scalar best(0);
      for (Eigen::Index r = t; r < rows; ++r)
        for (Eigen::Index c = t; c < cols; ++c)
          if (st.work(r, c) != 0 && (pr < 0 || abs_value(st.work(r, c)) < best)) {
            best = abs_value(st.work(r, c));
            pr = r;
            pc = c;
          }
      if (pr < 0) break;  // remaining block is zero
      st.swap_rows(t, pr);
      st.swap_cols(t, pc);

      bool clean = true;
      for (Eigen::Index r = t + 1; r < rows; ++r) {
        Scalar q = st.work(r, t) / st.work(t, t);
        st.add_row(r, t, Scalar(-q));
        if (st.work(r, t) != 0) clean = false;
      }
      for (Eigen::Index c = t + 1; c < cols; ++c) {
        Scalar q = st.work(t, c) / st.work(t, t);
        st.add_col(c, t, Scalar(-q));
        if (st.work(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block; otherwise fold the offending
      // row into row t and go again.
      Eigen::Index bad = -1;
      for (Eigen::Index r = t + 1; r < rows && bad < 0; ++r)
        for (Eigen::Index c = t + 1; c < cols; ++c)
          if (st.work(r, c) % st.work(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      st.add_row(t, bad, Scalar(1));
    }
    if (st.work(t, t) < 0) st.negate_row(t);
  }
  return {std::move(st.left), std::move(st.work), std::move(st.right)};
}

}  // namespace lspace
