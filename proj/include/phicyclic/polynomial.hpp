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

#ifndef PHICYCLIC_POLYNOMIAL_HPP_
#define PHICYCLIC_POLYNOMIAL_HPP_

#include <algorithm>
#include <concepts>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "phicyclic/errors.hpp"

namespace phicyclic {

// What a coefficient domain must provide. Implemented by Field, Integers
// and IntegersMod.
template <typename R>
concept CoefficientRing = requires(const R& r, const typename R::Element& a) {
  { r.zero() } -> std::convertible_to<typename R::Element>;
  { r.one() } -> std::convertible_to<typename R::Element>;
  { r.from_int(0LL) } -> std::convertible_to<typename R::Element>;
  { r.reduce(a) } -> std::convertible_to<typename R::Element>;
  { r.add(a, a) } -> std::convertible_to<typename R::Element>;
  { r.sub(a, a) } -> std::convertible_to<typename R::Element>;
  { r.mul(a, a) } -> std::convertible_to<typename R::Element>;
  { r.neg(a) } -> std::convertible_to<typename R::Element>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.equal(a, a) } -> std::convertible_to<bool>;
  { r.is_unit(a) } -> std::convertible_to<bool>;
  { r.inverse(a) } -> std::convertible_to<typename R::Element>;
  { r.to_string(a) } -> std::convertible_to<std::string>;
  { r == r } -> std::convertible_to<bool>;
};

// Dense univariate polynomial; coefficient i multiplies x^i. The
// coefficient vector never carries zeros above the degree, so the zero
// polynomial has an empty coefficient vector and degree -1.
template <typename Ring>
class Polynomial {
 public:
  using Element = typename Ring::Element;

  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  Polynomial(Ring ring, std::vector<Element> coeffs)
      : ring_(std::move(ring)), c_(std::move(coeffs)) {
    for (auto& v : c_) v = ring_.reduce(v);
    trim();
  }

  Polynomial(Ring ring, std::initializer_list<long long> coeffs)
      : ring_(std::move(ring)) {
    c_.reserve(coeffs.size());
    for (long long v : coeffs) c_.push_back(ring_.from_int(v));
    trim();
  }

  static Polynomial from_ints(Ring ring, std::span<const long long> coeffs) {
    Polynomial p(std::move(ring));
    p.c_.reserve(coeffs.size());
    for (long long v : coeffs) p.c_.push_back(p.ring_.from_int(v));
    p.trim();
    return p;
  }

  static Polynomial constant(Ring ring, const Element& c) {
    return Polynomial(std::move(ring), std::vector<Element>{c});
  }

  // c * x^k
  static Polynomial monomial(Ring ring, const Element& c, int k) {
    std::vector<Element> v(static_cast<size_t>(k) + 1, ring.zero());
    v.back() = c;
    return Polynomial(std::move(ring), std::move(v));
  }

  const Ring& ring() const { return ring_; }
  const std::vector<Element>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  Element coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return ring_.zero();
    return c_[static_cast<size_t>(i)];
  }

  Element leading() const { return c_.empty() ? ring_.zero() : c_.back(); }

  bool is_monic() const {
    return !c_.empty() && ring_.equal(c_.back(), ring_.one());
  }

  // Coefficient vector padded with zeros to length n (n > degree).
  std::vector<Element> padded(int n) const {
    if (n <= degree())
      fail(Errc::kDimensionMismatch, "polynomial does not fit in length " +
                                         std::to_string(n));
    std::vector<Element> out(static_cast<size_t>(n), ring_.zero());
    std::copy(c_.begin(), c_.end(), out.begin());
    return out;
  }

  Polynomial operator-() const {
    Polynomial r(ring_);
    r.c_.reserve(c_.size());
    for (const auto& v : c_) r.c_.push_back(ring_.neg(v));
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    const auto& big = a.c_.size() >= b.c_.size() ? a : b;
    const auto& small = a.c_.size() >= b.c_.size() ? b : a;
    Polynomial r(a.ring_, big.c_);
    for (size_t i = 0; i < small.c_.size(); ++i)
      r.c_[i] = a.ring_.add(r.c_[i], small.c_[i]);
    r.trim();
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial r(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, a.ring_.zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.ring_.is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        r.c_[i + j] = a.ring_.add(r.c_[i + j], a.ring_.mul(a.c_[i], b.c_[j]));
    }
    r.trim();
    return r;
  }

  Polynomial scaled(const Element& s) const {
    Polynomial r(ring_);
    r.c_.reserve(c_.size());
    const Element sr = ring_.reduce(s);
    for (const auto& v : c_) r.c_.push_back(ring_.mul(v, sr));
    r.trim();
    return r;
  }

  // x^k * self
  Polynomial shifted(int k) const {
    if (is_zero()) return *this;
    Polynomial r(ring_);
    r.c_.assign(static_cast<size_t>(k), ring_.zero());
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  Polynomial derivative() const {
    Polynomial r(ring_);
    for (size_t i = 1; i < c_.size(); ++i)
      r.c_.push_back(ring_.mul(c_[i], ring_.from_int(static_cast<long long>(i))));
    r.trim();
    return r;
  }

  // Horner evaluation at a point of the coefficient ring.
  Element operator()(const Element& x) const {
    Element acc = ring_.zero();
    const Element xr = ring_.reduce(x);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = ring_.add(ring_.mul(acc, xr), *it);
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.ring_ == b.ring_) || a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!a.ring_.equal(a.c_[i], b.c_[i])) return false;
    return true;
  }

  std::string to_string(char var = 'x') const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Element& v = c_[static_cast<size_t>(i)];
      if (ring_.is_zero(v)) continue;
      std::string s = ring_.to_string(v);
      const bool negative = !s.empty() && s[0] == '-';
      if (negative) s.erase(0, 1);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (i == 0) {
        out += s;
        continue;
      }
      if (s != "1") out += s;
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

  void check_ring(const Polynomial& other) const {
    if (!(ring_ == other.ring_))
      fail(Errc::kFieldMismatch, "polynomials over different coefficient domains");
  }

 private:
  void trim() {
    while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
  }

  Ring ring_;
  std::vector<Element> c_;
};

}  // namespace phicyclic

#endif  // PHICYCLIC_POLYNOMIAL_HPP_
