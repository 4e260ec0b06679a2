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

#include "phicyclic/idealmat.hpp"

#include "phicyclic/linalg.hpp"

namespace phicyclic {

IntPhiContext::IntPhiContext(IntVector a) : a_(std::move(a)), phi_(Integers{}) {
  const int n = this->n();
  if (n == 0) fail(Errc::kInvalidArgument, "a must have at least one entry");
  if (a_(0) == 0) fail(Errc::kZeroConstantTerm, "a_0 must be nonzero");
  std::vector<BigInt> coeffs(static_cast<size_t>(n) + 1, BigInt(1));
  for (int i = 0; i < n; ++i) coeffs[static_cast<size_t>(i)] = -a_(i);
  phi_ = IntPolynomial(Integers{}, std::move(coeffs));

  h_ = IntMatrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) h_(i + 1, i) = 1;
  h_.col(n - 1) = a_;

  // H^n = a_0 I + a_1 H + ... + a_{n-1} H^{n-1}.
  IntMatrix power = IntMatrix::Identity(n, n);
  IntMatrix rhs = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    rhs += a_(i) * power;
    power = int_product(h_, power);
  }
  if (!matrices_equal(power, rhs))
    fail(Errc::kInternalMismatch, "companion matrix fails its characteristic equation");
}

void IntPhiContext::check_length(const IntVector& v) const {
  if (v.size() != n())
    fail(Errc::kDimensionMismatch,
         "expected length " + std::to_string(n()) + ", got " + std::to_string(v.size()));
}

IntVector IntPhiContext::to_vector(const IntPolynomial& f) const {
  const auto padded = f.padded(n());
  return Eigen::Map<const IntVector>(padded.data(), n());
}

IntPolynomial IntPhiContext::to_polynomial(const IntVector& v) const {
  check_length(v);
  return IntPolynomial(Integers{}, std::vector<BigInt>(v.data(), v.data() + v.size()));
}

IntMatrix companion(const IntPhiContext& ctx) { return ctx.H(); }

IntMatrix ideal_matrix_by_columns(const IntPhiContext& ctx, const IntVector& f) {
  ctx.check_length(f);
  const int n = ctx.n();
  IntMatrix m(n, n);
  IntVector col = f;
  for (int k = 0; k < n; ++k) {
    m.col(k) = col;
    col = int_product(ctx.H(), col);
  }
  return m;
}

IntMatrix ideal_matrix_by_powers(const IntPhiContext& ctx, const IntVector& f) {
  ctx.check_length(f);
  const int n = ctx.n();
  IntMatrix sum = IntMatrix::Zero(n, n);
  IntMatrix power = IntMatrix::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    if (f(i) != 0) sum += f(i) * power;
    power = int_product(ctx.H(), power);
  }
  return sum;
}

IdealMatrix::IdealMatrix(const IntPhiContext& ctx, const IntVector& f)
    : f_(f), m_(ideal_matrix_by_columns(ctx, f)) {
  if (!matrices_equal(m_, ideal_matrix_by_powers(ctx, f)))
    fail(Errc::kInternalMismatch, "column and power-sum ideal matrices differ");
}

IntMatrix ideal_matrix(const IntPhiContext& ctx, const IntVector& f) {
  return IdealMatrix(ctx, f).matrix();
}

IntVector star(const IntPhiContext& ctx, const IntVector& f, const IntVector& g) {
  ctx.check_length(g);
  return int_product(ideal_matrix(ctx, f), g);
}

BigInt idealmat_det(const IntPhiContext& ctx, const IntVector& f) {
  return bareiss_determinant(ideal_matrix(ctx, f));
}

IntMatrix idealmat_inverse_mod(const IntPhiContext& ctx, const IntVector& f, const BigInt& q) {
  if (q < 2) fail(Errc::kInvalidArgument, "modulus must be at least 2");
  return inverse_mod(ideal_matrix(ctx, f), q);
}

}  // namespace phicyclic
