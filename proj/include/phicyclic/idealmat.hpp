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

#ifndef PHICYCLIC_IDEALMAT_HPP_
#define PHICYCLIC_IDEALMAT_HPP_

#include <initializer_list>

#include "phicyclic/polyring.hpp"
#include "phicyclic/types.hpp"

namespace phicyclic {

// Z[x]/<phi> with phi = x^n - a_{n-1}x^{n-1} - ... - a_0 and its companion
// matrix H (ones below the diagonal, last column a).
class IntPhiContext {
 public:
  // Throws kZeroConstantTerm, kInvalidArgument (empty a), and
  // kInternalMismatch if H fails its own characteristic equation.
  explicit IntPhiContext(IntVector a);
  IntPhiContext(std::initializer_list<long long> a) : IntPhiContext(to_int_vector(a)) {}

  int n() const { return static_cast<int>(a_.size()); }
  const IntVector& a() const { return a_; }
  const IntPolynomial& phi() const { return phi_; }
  const IntMatrix& H() const { return h_; }

  void check_length(const IntVector& v) const;
  IntVector to_vector(const IntPolynomial& f) const;
  IntPolynomial to_polynomial(const IntVector& v) const;

 private:
  IntVector a_;
  IntPolynomial phi_;
  IntMatrix h_;
};

IntMatrix companion(const IntPhiContext& ctx);

// H*(f) = [f, Hf, ..., H^{n-1} f] = f_0 I + f_1 H + ... + f_{n-1} H^{n-1}.
class IdealMatrix {
 public:
  // Builds both forms and throws kInternalMismatch if they differ.
  IdealMatrix(const IntPhiContext& ctx, const IntVector& f);

  const IntVector& f() const { return f_; }
  const IntMatrix& matrix() const { return m_; }

 private:
  IntVector f_;
  IntMatrix m_;
};

IntMatrix ideal_matrix(const IntPhiContext& ctx, const IntVector& f);
IntMatrix ideal_matrix_by_columns(const IntPhiContext& ctx, const IntVector& f);
IntMatrix ideal_matrix_by_powers(const IntPhiContext& ctx, const IntVector& f);

// H*(f) g, the coefficient vector of f(x) g(x) mod phi(x).
IntVector star(const IntPhiContext& ctx, const IntVector& f, const IntVector& g);

// det H*(f) by fraction-free elimination.
BigInt idealmat_det(const IntPhiContext& ctx, const IntVector& f);

// K with K H*(f) = H*(f) K = I (mod q), entries in [0, q).
// Throws kNotInvertibleModQ when gcd(det H*(f), q) != 1.
IntMatrix idealmat_inverse_mod(const IntPhiContext& ctx, const IntVector& f, const BigInt& q);

}  // namespace phicyclic

#endif  // PHICYCLIC_IDEALMAT_HPP_
