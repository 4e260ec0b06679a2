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

#ifndef PHICYCLIC_POLYRING_HPP_
#define PHICYCLIC_POLYRING_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "phicyclic/field.hpp"
#include "phicyclic/polynomial.hpp"
#include "phicyclic/types.hpp"

namespace phicyclic {

using IntPolynomial = Polynomial<Integers>;
using ModPolynomial = Polynomial<IntegersMod>;

inline constexpr std::int64_t kDefaultSearchBound = 1'000'000;

// Quotient and remainder with f = quotient * g + remainder and
// deg remainder < deg g. The leading coefficient of g must be a unit of
// the coefficient ring.
template <CoefficientRing Ring>
std::pair<Polynomial<Ring>, Polynomial<Ring>> poly_divmod(const Polynomial<Ring>& f,
                                                          const Polynomial<Ring>& g) {
  f.check_ring(g);
  const Ring& ring = f.ring();
  if (g.is_zero()) fail(Errc::kDivisionByZero, "division by the zero polynomial");
  if (!ring.is_unit(g.leading()))
    fail(Errc::kLeadingCoefficientNotUnit,
         "leading coefficient " + ring.to_string(g.leading()) + " is not a unit");
  const int dg = g.degree();
  if (f.degree() < dg) return {Polynomial<Ring>(ring), f};
  const auto lc_inv = ring.inverse(g.leading());
  std::vector<typename Ring::Element> r = f.coefficients();
  std::vector<typename Ring::Element> quot(static_cast<size_t>(f.degree() - dg + 1),
                                           ring.zero());
  for (int k = f.degree(); k >= dg; --k) {
    const auto t = ring.mul(r[static_cast<size_t>(k)], lc_inv);
    quot[static_cast<size_t>(k - dg)] = t;
    if (ring.is_zero(t)) continue;
    for (int j = 0; j <= dg; ++j) {
      auto& slot = r[static_cast<size_t>(k - dg + j)];
      slot = ring.sub(slot, ring.mul(t, g.coeff(j)));
    }
  }
  r.resize(static_cast<size_t>(dg));
  return {Polynomial<Ring>(ring, std::move(quot)), Polynomial<Ring>(ring, std::move(r))};
}

template <CoefficientRing Ring>
Polynomial<Ring> poly_rem(const Polynomial<Ring>& f, const Polynomial<Ring>& g) {
  return poly_divmod(f, g).second;
}

// f scaled to leading coefficient 1 (zero stays zero).
FieldPolynomial make_monic(const FieldPolynomial& f);

struct XgcdResult {
  FieldPolynomial d;  // monic gcd
  FieldPolynomial a;
  FieldPolynomial b;  // a * f + b * g = d
};

// Throws kBothZero when f = g = 0.
XgcdResult poly_xgcd(const FieldPolynomial& f, const FieldPolynomial& g);
FieldPolynomial poly_gcd(const FieldPolynomial& f, const FieldPolynomial& g);

// Integer polynomial helpers.
BigInt content(const IntPolynomial& f);
IntPolynomial primitive_part(const IntPolynomial& f);
// lc(g)^(deg f - deg g + 1) * f mod g, exact over Z.
IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g);
// Greatest common divisor in Q[x], returned as a primitive integer
// polynomial with positive leading coefficient, times gcd of contents.
IntPolynomial primitive_gcd(const IntPolynomial& f, const IntPolynomial& g);

// gcd(phi, phi') is constant. Throws kZeroPolynomial.
bool is_separable(const FieldPolynomial& phi);
bool is_separable(const IntPolynomial& phi);

// Every monic polynomial of the given degree over `field`, enumerated by
// reading the index as base-q digits c_0, c_1, ..., c_{degree-1}.
std::vector<FieldPolynomial> monic_polynomials(const Field& field, int degree);

bool is_irreducible(const FieldPolynomial& f);

// All monic divisors of the monic polynomial phi, ordered by degree and then
// lexicographically on coefficient indices from c_0 upwards. Found by trial
// division over every monic polynomial of degree <= deg phi; throws
// kTooLarge when that search space exceeds `bound`.
std::vector<FieldPolynomial> monic_divisors(const FieldPolynomial& phi,
                                            std::int64_t bound = kDefaultSearchBound);

// Moebius function.
int mobius(std::int64_t n);
// Number of monic irreducible polynomials of degree m over F_q.
BigInt count_irreducible(std::int64_t q, int m);

IntMatrix sylvester_matrix(const IntPolynomial& f, const IntPolynomial& g);
// Resultant as the determinant of the Sylvester matrix.
BigInt poly_resultant(const IntPolynomial& f, const IntPolynomial& g);
// Resultant by the subresultant pseudo-remainder sequence.
BigInt poly_resultant_prs(const IntPolynomial& f, const IntPolynomial& g);

// Evaluates f (over F_q) at x, which may live in any extension of F_q in
// the same tower. Throws kFieldMismatch otherwise.
FieldElement poly_eval(const FieldPolynomial& f, const FieldElement& x);

FieldElement field_from_bigint(const Field& field, const BigInt& v);
// Coefficient-wise reduction Z[x] -> F_p[x].
FieldPolynomial reduce_mod(const IntPolynomial& f, const Field& prime_field);
IntPolynomial int_polynomial(std::initializer_list<long long> coeffs);

}  // namespace phicyclic

#endif  // PHICYCLIC_POLYRING_HPP_
