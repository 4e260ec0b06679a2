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

#ifndef PHICYCLIC_PHICODE_HPP_
#define PHICYCLIC_PHICODE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "phicyclic/field.hpp"
#include "phicyclic/polyring.hpp"

namespace phicyclic {

// The quotient ring F_q[x]/<phi> with phi = x^n - a_{n-1}x^{n-1} - ... - a_0,
// together with the matrix T of multiplication by x.
class PhiContext {
 public:
  // Throws kZeroConstantTerm when a_0 = 0 and kInvalidArgument when a is empty.
  PhiContext(const Field& field, std::vector<FieldElement> a);
  PhiContext(const Field& field, const std::vector<long long>& a);
  PhiContext(const Field& field, std::initializer_list<long long> a)
      : PhiContext(field, std::vector<long long>(a)) {}

  const Field& field() const { return field_; }
  int n() const { return static_cast<int>(a_.size()); }
  const std::vector<FieldElement>& a() const { return a_; }
  const FieldPolynomial& phi() const { return phi_; }
  const FieldMatrix& T() const { return t_; }

  // Coefficient vector of length n; throws kDimensionMismatch if f does not fit.
  FieldVector to_vector(const FieldPolynomial& f) const;
  FieldPolynomial to_polynomial(const FieldVector& c) const;
  // f * g mod phi.
  FieldPolynomial star(const FieldPolynomial& f, const FieldPolynomial& g) const;

  void check_length(const FieldVector& c) const;

 private:
  Field field_;
  std::vector<FieldElement> a_;
  FieldPolynomial phi_;
  FieldMatrix t_;
};

inline PhiContext phi_context_make(const Field& field, const std::vector<long long>& a) {
  return PhiContext(field, a);
}

// (a_0 c_{n-1}, c_0 + a_1 c_{n-1}, ..., c_{n-2} + a_{n-1} c_{n-1}).
FieldVector tau_apply(const PhiContext& ctx, const FieldVector& c);

enum class ParitySource { kReversedCofactor, kKernelFallback };
std::string parity_source_name(ParitySource source);

class PhiCyclicCode {
 public:
  const PhiContext& context() const { return ctx_; }
  const FieldPolynomial& g() const { return g_; }
  const FieldPolynomial& h() const { return h_; }
  int n() const { return ctx_.n(); }
  int k() const { return k_; }
  // k x n, rows g, tau(g), ..., tau^{k-1}(g).
  const FieldMatrix& G() const { return gen_; }
  // (n-k) x n with G * H^T = 0 and rank n-k.
  const FieldMatrix& H() const { return parity_; }
  ParitySource parity_source() const { return source_; }

 private:
  friend PhiCyclicCode code_from_generator(const PhiContext& ctx, const FieldPolynomial& g);
  PhiCyclicCode(PhiContext ctx, FieldPolynomial g, FieldPolynomial h)
      : ctx_(std::move(ctx)), g_(std::move(g)), h_(std::move(h)) {}

  PhiContext ctx_;
  FieldPolynomial g_;
  FieldPolynomial h_;
  int k_ = 0;
  FieldMatrix gen_;
  FieldMatrix parity_;
  ParitySource source_ = ParitySource::kReversedCofactor;
};

// Throws kNotMonic or kNotDivisor. g = phi and g = 1 give the zero code and
// the whole space.
PhiCyclicCode code_from_generator(const PhiContext& ctx, const FieldPolynomial& g);

// Rows hbar, tau(hbar), ..., tau^{n-k-1}(hbar) where hbar is the cofactor's
// length-n coefficient vector reversed. Exposed for measurement.
FieldMatrix reversed_cofactor_rows(const PhiContext& ctx, const FieldPolynomial& h);

FieldVector encode(const PhiCyclicCode& code, const FieldVector& message);
// g divides c(x).
bool is_codeword(const PhiCyclicCode& code, const FieldVector& c);
// c * H^T = 0.
bool syndrome_is_zero(const PhiCyclicCode& code, const FieldVector& c);

// d = a g mod phi where a g + b h = 1. Throws kNotSeparable or kTrivialCode.
FieldPolynomial idempotent(const PhiCyclicCode& code);

// c(theta) = 0 in F_q[y]/<g>. Throws kNotIrreducible.
bool maximal_membership(const PhiCyclicCode& code, const FieldVector& c);

struct VandermondeParity {
  Field extension;   // F_q[y]/<g>
  FieldMatrix H;     // m x n over `extension`, row i = powers of theta^(q^i)
};
// Throws kNotIrreducible or kNotDivisor.
VandermondeParity vandermonde_parity(const PhiContext& ctx, const FieldPolynomial& g);
bool vandermonde_membership(const VandermondeParity& vp, const FieldVector& c);

// Minimum nonzero weight by enumerating all q^k messages.
// Throws kTrivialCode (k = 0) or kTooLarge (q^k > bound).
int min_distance(const PhiCyclicCode& code, std::int64_t bound = kDefaultSearchBound);

// One code per monic divisor of phi, in monic_divisors order.
std::vector<PhiCyclicCode> enumerate_codes(const PhiContext& ctx,
                                           std::int64_t bound = kDefaultSearchBound);

// a_{n-1} = ... = a_1 = b and a_0 = 1 + b for some b. Requires n >= 2.
bool constant_code_is_phi_cyclic(const PhiContext& ctx);

// Largest d such that every d columns of m are linearly independent,
// searched up to `limit`. Diagnostic only.
int independent_column_depth(const FieldMatrix& m, int limit);

}  // namespace phicyclic

#endif  // PHICYCLIC_PHICODE_HPP_
