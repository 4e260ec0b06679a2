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

#include "phicyclic/types.hpp"

#include <utility>

namespace phicyclic {

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  if (m < 1) fail(Errc::kInvalidArgument, "modulus must be positive");
  BigInt r0 = m, r1 = mod_floor(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const BigInt t = r0 / r1;
    r0 = std::exchange(r1, r0 - t * r1);
    s0 = std::exchange(s1, s0 - t * s1);
  }
  if (r0 != 1)
    fail(Errc::kNotInvertibleModQ,
         a.str() + " is not invertible modulo " + m.str());
  return mod_floor(s0, m);
}

IntVector to_int_vector(std::initializer_list<long long> values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (long long x : values) v(i++) = x;
  return v;
}

IntMatrix to_int_matrix(
    std::initializer_list<std::initializer_list<long long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c)
      fail(Errc::kDimensionMismatch, "ragged matrix literal");
    Eigen::Index j = 0;
    for (long long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntegersMod::IntegersMod(BigInt modulus) : q(std::move(modulus)) {
  if (q < 2) fail(Errc::kInvalidArgument, "modulus must be at least 2");
}

bool IntegersMod::is_unit(const Element& a) const {
  return boost::multiprecision::gcd(mod_floor(a, q), q) == 1;
}

IntegersMod::Element IntegersMod::inverse(const Element& a) const {
  return mod_inverse(a, q);
}

}  // namespace phicyclic
