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

#ifndef PHICYCLIC_FIELD_HPP_
#define PHICYCLIC_FIELD_HPP_

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "phicyclic/errors.hpp"
#include "phicyclic/polynomial.hpp"

namespace phicyclic {

namespace detail {
struct FieldData;
}  // namespace detail

class Field;

enum class FieldKind { kPrime, kExtension };

// An element of a finite field F_q, stored as its canonical index in
// [0, q): for F_p the residue itself, for an extension the base-field
// coefficients of the reduced representative read as base-|base| digits,
// lowest degree first.
//
// A default-constructed or integer-constructed element is an unbound
// integer literal. It takes on the field of whichever bound element it
// meets; this is what lets Eigen write Scalar(0) and Scalar(1). Two bound
// elements of different fields never mix.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  template <std::integral T>
  FieldElement(T literal) : value_(static_cast<std::int64_t>(literal)) {}  // NOLINT

  bool is_bound() const { return field_ != nullptr; }
  Field field() const;
  // Canonical index for bound elements, the literal value otherwise.
  std::int64_t code() const { return value_; }

  bool is_zero() const;
  bool is_one() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  std::string to_string() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  friend class Field;
  FieldElement(const detail::FieldData* field, std::int64_t code)
      : field_(field), value_(code) {}

  const detail::FieldData* field_ = nullptr;
  std::int64_t value_ = 0;
};

// A finite field: F_p for a prime p, or F_b[y]/<g(y)> for a monic
// irreducible g over an existing field F_b. Fields are interned: asking
// for the same field twice yields the same instance, so equality is
// identity. Instances are immutable and live for the whole process.
class Field {
 public:
  using Element = FieldElement;

  // F_p. Throws kNotPrime.
  static Field prime(std::int64_t p);

  // base[y]/<modulus(y)>. Throws kNotMonic, kReducible, kInvalidArgument
  // (degree < 1) or kTooLarge (order would not fit the element index).
  static Field extension(const Field& base, const Polynomial<Field>& modulus);

  FieldKind kind() const;
  std::int64_t characteristic() const;
  std::int64_t order() const;
  // Degree over the immediate base (1 for prime fields).
  int degree() const;
  // Degree over the prime subfield.
  int absolute_degree() const;
  std::optional<Field> base() const;
  // Defining polynomial over base(); only for extensions.
  Polynomial<Field> modulus() const;

  // Element with canonical index `code` in [0, q).
  FieldElement element(std::int64_t code) const;
  // The image of the integer v under Z -> F_q.
  FieldElement from_int(long long v) const;
  // Residue class of y; only for extensions.
  FieldElement generator() const;
  // Element with the given coefficients over base(), lowest degree first.
  FieldElement from_coefficients(std::span<const FieldElement> coeffs) const;
  std::vector<FieldElement> coefficients(const FieldElement& x) const;
  // All q elements in index order.
  std::vector<FieldElement> elements() const;

  // True when `sub` is this field or appears in its chain of bases.
  bool contains(const Field& sub) const;
  // Canonical embedding of an element of a subfield in the base chain.
  FieldElement embed(const FieldElement& x) const;

  std::string description() const;

  // CoefficientRing interface.
  FieldElement zero() const { return element(0); }
  FieldElement one() const { return element(1); }
  FieldElement reduce(const FieldElement& x) const;
  FieldElement add(const FieldElement& a, const FieldElement& b) const { return a + b; }
  FieldElement sub(const FieldElement& a, const FieldElement& b) const { return a - b; }
  FieldElement mul(const FieldElement& a, const FieldElement& b) const { return a * b; }
  FieldElement neg(const FieldElement& a) const { return -a; }
  bool is_zero(const FieldElement& a) const { return a.is_zero(); }
  bool equal(const FieldElement& a, const FieldElement& b) const { return a == b; }
  bool is_unit(const FieldElement& a) const { return !a.is_zero(); }
  FieldElement inverse(const FieldElement& a) const { return reduce(a).inverse(); }
  std::string to_string(const FieldElement& a) const { return reduce(a).to_string(); }

  bool operator==(const Field& other) const { return data_ == other.data_; }

 private:
  friend class FieldElement;
  explicit Field(const detail::FieldData* data) : data_(data) {}

  const detail::FieldData* data_;
};

using FieldMatrix = Eigen::Matrix<FieldElement, Eigen::Dynamic, Eigen::Dynamic>;
using FieldVector = Eigen::Matrix<FieldElement, Eigen::Dynamic, 1>;
using FieldPolynomial = Polynomial<Field>;

bool is_prime(std::int64_t n);

// field_make / ext_field_make
inline Field field_make(std::int64_t p) { return Field::prime(p); }
inline Field ext_field_make(const Field& base, const FieldPolynomial& g) {
  return Field::extension(base, g);
}

}  // namespace phicyclic

namespace Eigen {
template <>
struct NumTraits<phicyclic::FieldElement>
    : GenericNumTraits<phicyclic::FieldElement> {
  using Real = phicyclic::FieldElement;
  using NonInteger = phicyclic::FieldElement;
  using Nested = phicyclic::FieldElement;
  using Literal = phicyclic::FieldElement;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3,
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};
}  // namespace Eigen

#endif  // PHICYCLIC_FIELD_HPP_
