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

#include "phicyclic/linalg.hpp"

#include <boost/multiprecision/integer.hpp>

namespace phicyclic {

namespace {

// One Bareiss sweep over the first `pivot_cols` columns of `a` (which may
// carry extra augmented columns). Returns false if a pivot column is
// entirely zero. `sign` collects row swaps.
bool bareiss_forward(IntMatrix& a, Eigen::Index pivot_cols, int& sign) {
  const Eigen::Index n = a.rows();
  BigInt prev = 1;
  sign = 1;
  for (Eigen::Index k = 0; k < pivot_cols; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index i = k + 1;
      while (i < n && a(i, k) == 0) ++i;
      if (i == n) return false;
      a.row(i).swap(a.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < a.cols(); ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return true;
}

IntMatrix minor_of(const IntMatrix& a, Eigen::Index row, Eigen::Index col) {
  const Eigen::Index n = a.rows();
  IntMatrix m(n - 1, n - 1);
  for (Eigen::Index i = 0, r = 0; i < n; ++i) {
    if (i == row) continue;
    for (Eigen::Index j = 0, c = 0; j < n; ++j) {
      if (j == col) continue;
      m(r, c++) = a(i, j);
    }
    ++r;
  }
  return m;
}

}  // namespace

IntMatrix int_product(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    fail(Errc::kDimensionMismatch, "matrix product shape mismatch");
  IntMatrix c = IntMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

BigInt bareiss_determinant(IntMatrix a) {
  if (a.rows() != a.cols())
    fail(Errc::kDimensionMismatch, "determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  if (!bareiss_forward(a, n - 1, sign)) return 0;
  return sign * a(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& a) {
  if (a.rows() != a.cols())
    fail(Errc::kDimensionMismatch, "adjugate of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return IntMatrix(0, 0);
  if (n == 1) return IntMatrix::Constant(1, 1, BigInt(1));

  IntMatrix aug = IntMatrix::Zero(n, 2 * n);
  aug.leftCols(n) = a;
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = 1;
  int sign = 1;
  const bool full = bareiss_forward(aug, n, sign);
  if (!full || aug(n - 1, n - 1) == 0) {
    // Singular: fall back to cofactors.
    IntMatrix adj(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const BigInt m = bareiss_determinant(minor_of(a, j, i));
        adj(i, j) = ((i + j) % 2 == 0) ? m : BigInt(-m);
      }
    return adj;
  }
  // U X = B with X = a^-1; back-substitute Y = det * X, which is integral.
  const BigInt det = sign * aug(n - 1, n - 1);
  IntMatrix y(n, n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    for (Eigen::Index c = 0; c < n; ++c) {
      BigInt acc = det * aug(i, n + c);
      for (Eigen::Index j = i + 1; j < n; ++j) acc -= aug(i, j) * y(j, c);
      y(i, c) = acc / aug(i, i);
    }
  }
  return y;
}

IntMatrix inverse_mod(const IntMatrix& a, const BigInt& q) {
  const BigInt det = bareiss_determinant(a);
  if (boost::multiprecision::gcd(mod_floor(det, q), q) != 1)
    fail(Errc::kNotInvertibleModQ, "determinant " + det.str() +
                                       " shares a factor with " + q.str());
  const BigInt det_inv = mod_inverse(det, q);
  const IntMatrix adj = adjugate(a);
  return adj.unaryExpr([&](const BigInt& v) { return mod_floor(v * det_inv, q); });
}

}  // namespace phicyclic
