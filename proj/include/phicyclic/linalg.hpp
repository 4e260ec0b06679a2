/*
 * Copyright 2026 The phicyclic Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PHICYCLIC_LINALG_HPP_
#define PHICYCLIC_LINALG_HPP_

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "phicyclic/types.hpp"

namespace phicyclic {

// Exact linear algebra. The field routines are templated on the scalar and
// need only +, -, *, / and comparison with Scalar(0); the integer routines
// are fraction free.

template <typename Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;              // reduced row echelon form
  std::vector<Eigen::Index> pivots;    // pivot column of each nonzero row
};

template <typename Derived>
RowEchelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out{a, {}};
  auto& r = out.reduced;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < r.rows() && r(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == r.rows()) continue;
    r.row(pivot).swap(r.row(row));
    const Scalar inv = Scalar(1) / r(row, col);
    for (Eigen::Index j = col; j < r.cols(); ++j) r(row, j) = r(row, j) * inv;
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == Scalar(0)) continue;
      const Scalar factor = r(i, col);
      for (Eigen::Index j = col; j < r.cols(); ++j)
        r(i, j) = r(i, j) - factor * r(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  return static_cast<Eigen::Index>(row_echelon(a).pivots.size());
}

// Basis of {x : a x = 0}, one basis vector per row.
template <typename Derived>
Matrix<typename Derived::Scalar> right_kernel(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const auto ech = row_echelon(a);
  const Eigen::Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (auto p : ech.pivots) is_pivot[static_cast<size_t>(p)] = true;
  const Eigen::Index dim = n - static_cast<Eigen::Index>(ech.pivots.size());
  Matrix<Scalar> basis = Matrix<Scalar>::Constant(dim, n, Scalar(0));
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    basis(k, free) = Scalar(1);
    for (size_t i = 0; i < ech.pivots.size(); ++i)
      basis(k, ech.pivots[i]) = -ech.reduced(static_cast<Eigen::Index>(i), free);
    ++k;
  }
  return basis;
}

// True when v lies in the row space of the echelon form.
template <typename Scalar, typename Derived>
bool in_row_space(const RowEchelon<Scalar>& ech, const Eigen::MatrixBase<Derived>& v) {
  Eigen::Matrix<Scalar, 1, Eigen::Dynamic> rest = v.transpose();
  for (size_t i = 0; i < ech.pivots.size(); ++i) {
    const Scalar c = rest(ech.pivots[i]);
    if (c == Scalar(0)) continue;
    rest = rest - c * ech.reduced.row(static_cast<Eigen::Index>(i));
  }
  for (Eigen::Index j = 0; j < rest.size(); ++j)
    if (!(rest(j) == Scalar(0))) return false;
  return true;
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == Scalar(0))) return false;
  return true;
}

// Integer matrix product written out explicitly; used where the operands
// are tiny and an Eigen product expression would be needlessly heavy.
IntMatrix int_product(const IntMatrix& a, const IntMatrix& b);

// Determinant by fraction-free (Bareiss) elimination.
BigInt bareiss_determinant(IntMatrix a);

// Adjugate adj(a) with a * adj(a) = det(a) * I, exact.
IntMatrix adjugate(const IntMatrix& a);

// Inverse of a modulo q as det^-1 * adj (mod q); q may be composite.
// Throws kNotInvertibleModQ when gcd(det a, q) != 1.
IntMatrix inverse_mod(const IntMatrix& a, const BigInt& q);

}  // namespace phicyclic

#endif  // PHICYCLIC_LINALG_HPP_
