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

#ifndef PHICYCLIC_QLATTICE_HPP_
#define PHICYCLIC_QLATTICE_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "phicyclic/idealmat.hpp"
#include "phicyclic/types.hpp"

namespace phicyclic {

// The q-ary lattice {y in Z^{2n} : y = A' x (mod q) for some x} with
// A' = [H*(f); H*(g)].
class ConvLattice {
 public:
  const IntPhiContext& context() const { return ctx_; }
  const IntVector& f() const { return f_; }
  const IntVector& g() const { return g_; }
  const BigInt& q() const { return q_; }
  int n() const { return ctx_.n(); }

  // 2n x n, [H*(f); H*(g)].
  const IntMatrix& A_prime() const { return a_prime_; }
  // n x 2n, [H*(f)^T, H*(g)^T].
  IntMatrix A() const { return a_prime_.transpose(); }

  // Present exactly when H*(f) is invertible mod q.
  bool has_public_basis() const { return h_.has_value(); }
  const std::optional<IntMatrix>& f_inverse() const { return f_inv_; }
  // h = H*(f)^{-1} g mod q, entries in [0, q).
  const std::optional<IntVector>& h() const { return h_; }

 private:
  friend ConvLattice build_lattice(const IntPhiContext&, const IntVector&, const IntVector&,
                                   const BigInt&);
  ConvLattice(IntPhiContext ctx, IntVector f, IntVector g, BigInt q)
      : ctx_(std::move(ctx)), f_(std::move(f)), g_(std::move(g)), q_(std::move(q)) {}

  IntPhiContext ctx_;
  IntVector f_;
  IntVector g_;
  BigInt q_;
  IntMatrix a_prime_;
  std::optional<IntMatrix> f_inv_;
  std::optional<IntVector> h_;
};

// Throws kDimensionMismatch or kInvalidArgument (q < 2).
ConvLattice build_lattice(const IntPhiContext& ctx, const IntVector& f, const IntVector& g,
                          const BigInt& q);

inline constexpr std::int64_t kMembershipSearchBound = 1'000'000;

// Solves x = H*(f)^{-1} y_top and tests H*(g) x = y_bottom (mod q). Without
// an inverse, scans x over Z_q^n when q^n <= bound, else throws kUndecidable.
bool lat_member(const ConvLattice& lat, const IntVector& y,
                std::int64_t bound = kMembershipSearchBound);

// Membership from public data only: y_bottom = H*(h) y_top (mod q).
bool lat_member_public(const IntPhiContext& ctx, const IntVector& h, const BigInt& q,
                       const IntVector& y);

// (H alpha; H beta) for y = (alpha; beta).
IntVector sigma_apply(const ConvLattice& lat, const IntVector& y);

// 2n x 2n upper triangular basis whose ROWS generate the lattice:
//   [ I_n  H*(h)^T ]
//   [ 0    q I_n   ]
// Throws kNotInvertibleModQ when the lattice has no public basis.
IntMatrix hnf_basis(const ConvLattice& lat);
IntMatrix hnf_basis(const IntPhiContext& ctx, const IntVector& h, const BigInt& q);

struct BasisReport {
  bool rows_are_members = false;     // (a)
  bool generators_in_span = false;   // (b)
  bool determinant_ok = false;       // (c)
  BigInt determinant;
  // "a", "b" or "c" for the first failing clause, empty when all pass.
  std::string failed_clause;
  bool ok() const { return failed_clause.empty(); }
};

// Checks a candidate row basis against the lattice without throwing.
BasisReport check_basis(const ConvLattice& lat, const IntMatrix& basis);
// check_basis on hnf_basis(lat) (or on `basis`); throws kVerificationFailed
// naming the first violated clause.
BasisReport verify_basis(const ConvLattice& lat);
BasisReport verify_basis(const ConvLattice& lat, const IntMatrix& basis);

}  // namespace phicyclic

#endif  // PHICYCLIC_QLATTICE_HPP_
