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

#ifndef PHICYCLIC_ORACLES_HPP_
#define PHICYCLIC_ORACLES_HPP_

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "phicyclic/field.hpp"
#include "phicyclic/phicode.hpp"
#include "phicyclic/qlattice.hpp"
#include "phicyclic/types.hpp"

// Deliberately naive reference implementations. They rely only on field
// arithmetic and plain loops, never on the elimination, divisor or
// resultant routines they are compared against.
namespace phicyclic::oracles {

struct OracleReport {
  std::string case_descriptor;
  std::string expected;
  std::string actual;
  bool agree = false;
};

template <typename T>
OracleReport compare(std::string descriptor, const T& expected, const T& actual) {
  std::ostringstream e, a;
  e << expected;
  a << actual;
  return {std::move(descriptor), e.str(), a.str(), expected == actual};
}

struct IdealCensus {
  std::int64_t count = 0;
  // Each closed subspace as its reduced row echelon basis.
  std::vector<FieldMatrix> subspaces;
};

// Scans every subspace of F_q^n (one reduced echelon form each) and keeps
// those closed under multiplication by x, computed as T * c.
// Throws kTooLarge when q^n exceeds `bound`.
IdealCensus enumerate_ideals_bruteforce(const PhiContext& ctx, std::int64_t bound = 81);

// Minimum weight of b(x) g(x) over all nonzero b of degree < k.
int min_distance_oracle(const PhiCyclicCode& code, std::int64_t bound = 1'000'000);

// Laplace expansion along the first row.
BigInt det_oracle(const IntMatrix& m);

// Tries every x in Z_q^n, computing f(x) x(x) and g(x) x(x) mod phi by
// schoolbook multiplication. Throws kTooLarge when q^n exceeds `bound`.
bool lattice_member_bruteforce(const ConvLattice& lat, const IntVector& y,
                               std::int64_t bound = 1'000'000);

struct RootProduct {
  double product = 0.0;     // real part of prod f(w_i)
  double imaginary = 0.0;   // imaginary part, ~0 for real inputs
  // Largest relative root sensitivity sum_j |a_j| |w|^j / (|w| |phi'(w)|),
  // with the leading coefficient included.
  double root_condition = 0.0;
  // Estimated relative sensitivity of the product to relative root errors:
  // sum_i |w_i f'(w_i) / f(w_i)| times the root condition of w_i.
  // Infinite when some f(w_i) vanishes.
  double product_condition = 0.0;
  double relative_error = 0.0;  // |product - expected| / max(|expected|, 1)
  bool agree = false;           // relative_error <= tolerance
};

// Cases whose product_condition exceeds this are excluded from the float
// comparison; with long double roots the expected relative error at the
// cutoff is about 1e10 * 1e-19 = 1e-9.
inline constexpr double kRootConditionCutoff = 1e10;

// Roots of phi from the companion matrix eigenvalues (long double), polished
// by Newton steps on phi, then the product of f over the roots.
RootProduct root_product_check(const IntPhiContext& ctx, const IntVector& f,
                               const BigInt& expected, double tolerance = 1e-6);

}  // namespace phicyclic::oracles

#endif  // PHICYCLIC_ORACLES_HPP_
