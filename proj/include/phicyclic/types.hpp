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

#ifndef PHICYCLIC_TYPES_HPP_
#define PHICYCLIC_TYPES_HPP_

#include <cstdint>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "phicyclic/errors.hpp"

// Eigen 3.4 declares const_iterator = void for non-vector expressions, which
// Boost's byte-container probe dereferences when a multiprecision scalar
// meets a matrix in a mixed expression. No Eigen type is a byte container.
namespace boost::multiprecision::detail {
#define PHICYCLIC_NOT_BYTE_CONTAINER(...)                                  \
  template <__VA_ARGS__>                                                    \
  struct is_byte_container<PHICYCLIC_EIGEN_TYPE> : public boost::false_type {};
#define PHICYCLIC_EIGEN_TYPE Eigen::Matrix<S, R, C, O, MR, MC>
PHICYCLIC_NOT_BYTE_CONTAINER(class S, int R, int C, int O, int MR, int MC)
#undef PHICYCLIC_EIGEN_TYPE
#define PHICYCLIC_EIGEN_TYPE Eigen::Block<X, R, C, I>
PHICYCLIC_NOT_BYTE_CONTAINER(class X, int R, int C, bool I)
#undef PHICYCLIC_EIGEN_TYPE
#define PHICYCLIC_EIGEN_TYPE Eigen::Map<X, O, S>
PHICYCLIC_NOT_BYTE_CONTAINER(class X, int O, class S)
#undef PHICYCLIC_EIGEN_TYPE
#define PHICYCLIC_EIGEN_TYPE Eigen::CwiseNullaryOp<F, X>
PHICYCLIC_NOT_BYTE_CONTAINER(class F, class X)
#undef PHICYCLIC_EIGEN_TYPE
#define PHICYCLIC_EIGEN_TYPE Eigen::CwiseUnaryOp<F, X>
PHICYCLIC_NOT_BYTE_CONTAINER(class F, class X)
#undef PHICYCLIC_EIGEN_TYPE
#define PHICYCLIC_EIGEN_TYPE Eigen::CwiseBinaryOp<F, X, Y>
PHICYCLIC_NOT_BYTE_CONTAINER(class F, class X, class Y)
#undef PHICYCLIC_EIGEN_TYPE
#define PHICYCLIC_EIGEN_TYPE Eigen::Product<X, Y, O>
PHICYCLIC_NOT_BYTE_CONTAINER(class X, class Y, int O)
#undef PHICYCLIC_EIGEN_TYPE
#define PHICYCLIC_EIGEN_TYPE Eigen::Transpose<X>
PHICYCLIC_NOT_BYTE_CONTAINER(class X)
#undef PHICYCLIC_EIGEN_TYPE
#define PHICYCLIC_EIGEN_TYPE Eigen::DenseBase<X>
PHICYCLIC_NOT_BYTE_CONTAINER(class X)
#undef PHICYCLIC_EIGEN_TYPE
#define PHICYCLIC_EIGEN_TYPE Eigen::MatrixBase<X>
PHICYCLIC_NOT_BYTE_CONTAINER(class X)
#undef PHICYCLIC_EIGEN_TYPE
#undef PHICYCLIC_NOT_BYTE_CONTAINER
}  // namespace boost::multiprecision::detail

namespace phicyclic {

// Arbitrary precision integer. Expression templates are disabled so the
// type behaves like a plain value inside Eigen expressions.
using BigInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using IntVector = Vector<BigInt>;

// Least non-negative residue of `a` modulo `m` (m > 0).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

// Representative of `a` modulo `m` in [-m/2, m/2).
inline BigInt mod_centered(const BigInt& a, const BigInt& m) {
  BigInt r = mod_floor(a, m);
  if (2 * r >= m) r -= m;
  return r;
}

// Representative of `a` modulo `m` in (-m/2, m/2].
inline BigInt mod_centered_upper(const BigInt& a, const BigInt& m) {
  BigInt r = mod_floor(a, m);
  if (2 * r > m) r -= m;
  return r;
}

// Inverse of `a` modulo `m`; throws kNotInvertibleModQ when gcd(a, m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

// Shape and entrywise equality; unlike operator== it accepts operands of
// different shapes and mixed expression types.
template <typename A, typename B>
bool matrices_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <typename Derived>
Matrix<BigInt> mod_floor(const Eigen::MatrixBase<Derived>& x, const BigInt& m) {
  return x.unaryExpr([&m](const BigInt& v) { return mod_floor(v, m); });
}

template <typename Derived>
Matrix<BigInt> mod_centered(const Eigen::MatrixBase<Derived>& x,
                            const BigInt& m) {
  return x.unaryExpr([&m](const BigInt& v) { return mod_centered(v, m); });
}

IntVector to_int_vector(std::initializer_list<long long> values);
IntMatrix to_int_matrix(std::initializer_list<std::initializer_list<long long>> rows);

// Coefficient ring Z.
struct Integers {
  using Element = BigInt;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const { return v; }
  Element reduce(const Element& v) const { return v; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  bool is_zero(const Element& a) const { return a == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_unit(const Element& a) const { return a == 1 || a == -1; }
  Element inverse(const Element& a) const {
    if (!is_unit(a)) fail(Errc::kLeadingCoefficientNotUnit, "not a unit in Z");
    return a;
  }
  std::string to_string(const Element& a) const { return a.str(); }
  bool operator==(const Integers&) const { return true; }
};

// Coefficient ring Z_q for any modulus q >= 2 (prime or composite).
struct IntegersMod {
  using Element = BigInt;

  explicit IntegersMod(BigInt modulus);

  const BigInt& modulus() const { return q; }
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const { return mod_floor(BigInt(v), q); }
  Element reduce(const Element& v) const { return mod_floor(v, q); }
  Element add(const Element& a, const Element& b) const { return mod_floor(a + b, q); }
  Element sub(const Element& a, const Element& b) const { return mod_floor(a - b, q); }
  Element mul(const Element& a, const Element& b) const { return mod_floor(a * b, q); }
  Element neg(const Element& a) const { return mod_floor(-a, q); }
  bool is_zero(const Element& a) const { return a == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_unit(const Element& a) const;
  Element inverse(const Element& a) const;
  std::string to_string(const Element& a) const { return a.str(); }
  bool operator==(const IntegersMod& other) const { return q == other.q; }

  BigInt q;
};

}  // namespace phicyclic

#endif  // PHICYCLIC_TYPES_HPP_
