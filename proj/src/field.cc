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

#include "phicyclic/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace phicyclic {

namespace detail {

// Element indices of prime fields are residues; extension indices pack the
// m base coefficients as base-|base| digits.
struct FieldData {
  FieldKind kind = FieldKind::kPrime;
  std::int64_t p = 0;
  std::int64_t q = 0;
  int m = 1;
  const FieldData* base = nullptr;
  std::vector<std::int64_t> modulus;  // monic, over base, length m + 1
  std::vector<std::int32_t> mul_table;
  std::vector<std::int32_t> inv_table;

  std::vector<std::int64_t> digits(std::int64_t a) const {
    std::vector<std::int64_t> d(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      d[static_cast<size_t>(i)] = a % base->q;
      a /= base->q;
    }
    return d;
  }

  std::int64_t pack(const std::vector<std::int64_t>& d) const {
    std::int64_t a = 0;
    for (int i = m - 1; i >= 0; --i) a = a * base->q + d[static_cast<size_t>(i)];
    return a;
  }

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    if (kind == FieldKind::kPrime) {
      std::int64_t r = a + b;
      return r >= p ? r - p : r;
    }
    std::int64_t r = 0, scale = 1;
    for (int i = 0; i < m; ++i) {
      r += base->add(a % base->q, b % base->q) * scale;
      a /= base->q;
      b /= base->q;
      scale *= base->q;
    }
    return r;
  }

  std::int64_t neg(std::int64_t a) const {
    if (kind == FieldKind::kPrime) return a == 0 ? 0 : p - a;
    std::int64_t r = 0, scale = 1;
    for (int i = 0; i < m; ++i) {
      r += base->neg(a % base->q) * scale;
      a /= base->q;
      scale *= base->q;
    }
    return r;
  }

  std::int64_t sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }

  std::int64_t mul_slow(std::int64_t a, std::int64_t b) const {
    const auto da = digits(a);
    const auto db = digits(b);
    std::vector<std::int64_t> prod(static_cast<size_t>(2 * m - 1), 0);
    for (int i = 0; i < m; ++i) {
      if (da[static_cast<size_t>(i)] == 0) continue;
      for (int j = 0; j < m; ++j) {
        auto& slot = prod[static_cast<size_t>(i + j)];
        slot = base->add(slot, base->mul(da[static_cast<size_t>(i)],
                                         db[static_cast<size_t>(j)]));
      }
    }
    // y^m = -(modulus_0 + ... + modulus_{m-1} y^{m-1})
    for (int k = 2 * m - 2; k >= m; --k) {
      const std::int64_t t = prod[static_cast<size_t>(k)];
      if (t == 0) continue;
      for (int j = 0; j < m; ++j) {
        auto& slot = prod[static_cast<size_t>(k - m + j)];
        slot = base->sub(slot, base->mul(t, modulus[static_cast<size_t>(j)]));
      }
      prod[static_cast<size_t>(k)] = 0;
    }
    prod.resize(static_cast<size_t>(m));
    return pack(prod);
  }

  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    if (kind == FieldKind::kPrime) return (a * b) % p;
    if (!mul_table.empty())
      return mul_table[static_cast<size_t>(a * q + b)];
    return mul_slow(a, b);
  }

  std::int64_t pow(std::int64_t a, std::uint64_t e) const {
    std::int64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::int64_t inv(std::int64_t a) const {
    if (a == 0) fail(Errc::kDivisionByZero, "inverse of zero");
    if (kind == FieldKind::kPrime) {
      std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
      while (r1 != 0) {
        const std::int64_t t = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - t * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - t * s1);
      }
      return s0 < 0 ? s0 + p : s0;
    }
    if (!inv_table.empty()) return inv_table[static_cast<size_t>(a)];
    return pow(a, static_cast<std::uint64_t>(q - 2));
  }

  std::int64_t from_int(long long v) const {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
  }

  bool contains(const FieldData* sub) const {
    for (const FieldData* f = this; f != nullptr; f = f->base)
      if (f == sub) return true;
    return false;
  }
};

}  // namespace detail

namespace {

constexpr std::int64_t kMaxOrder = std::int64_t{1} << 31;
constexpr std::int64_t kTableOrder = 256;

struct Registry {
  std::mutex mu;
  std::map<std::int64_t, std::unique_ptr<detail::FieldData>> primes;
  std::map<std::pair<const detail::FieldData*, std::vector<std::int64_t>>,
           std::unique_ptr<detail::FieldData>>
      extensions;
};

Registry& registry() {
  static Registry* r = new Registry();
  return *r;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// FieldElement

Field FieldElement::field() const {
  if (!field_) fail(Errc::kFieldMismatch, "integer literal has no field");
  return Field(field_);
}

bool FieldElement::is_zero() const { return value_ == 0; }

bool FieldElement::is_one() const { return value_ == 1; }

FieldElement FieldElement::inverse() const {
  if (!field_) {
    if (value_ == 1 || value_ == -1) return *this;
    fail(Errc::kFieldMismatch, "cannot invert an unbound integer literal");
  }
  return FieldElement(field_, field_->inv(value_));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement r = field_ ? FieldElement(field_, 1) : FieldElement(1);
  FieldElement b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::string FieldElement::to_string() const {
  if (!field_ || field_->kind == FieldKind::kPrime) return std::to_string(value_);
  const Field f(field_);
  const FieldPolynomial as_poly(*f.base(), f.coefficients(*this));
  std::string s = as_poly.to_string('y');
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

FieldElement FieldElement::operator-() const {
  if (!field_) return FieldElement(-value_);
  return FieldElement(field_, field_->neg(value_));
}


namespace {

// Resolves the field shared by two operands, binding integer literals.
// Returns nullptr when both are literals.
const detail::FieldData* bind(const FieldElement& a, const FieldElement& b,
                              std::int64_t& ca, std::int64_t& cb,
                              const detail::FieldData* fa,
                              const detail::FieldData* fb) {
  if (fa && fb && fa != fb)
    fail(Errc::kFieldMismatch, "elements of different fields (orders " +
                                   std::to_string(fa->q) + " and " +
                                   std::to_string(fb->q) + ")");
  const detail::FieldData* f = fa ? fa : fb;
  ca = a.code();
  cb = b.code();
  if (f) {
    if (!fa) ca = f->from_int(ca);
    if (!fb) cb = f->from_int(cb);
  }
  return f;
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  std::int64_t ca, cb;
  const auto* f = bind(a, b, ca, cb, a.field_, b.field_);
  if (!f) return FieldElement(ca + cb);
  return FieldElement(f, f->add(ca, cb));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  std::int64_t ca, cb;
  const auto* f = bind(a, b, ca, cb, a.field_, b.field_);
  if (!f) return FieldElement(ca - cb);
  return FieldElement(f, f->sub(ca, cb));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  std::int64_t ca, cb;
  const auto* f = bind(a, b, ca, cb, a.field_, b.field_);
  if (!f) return FieldElement(ca * cb);
  return FieldElement(f, f->mul(ca, cb));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  std::int64_t ca, cb;
  const auto* f = bind(a, b, ca, cb, a.field_, b.field_);
  if (!f) {
    if (cb == 0) fail(Errc::kDivisionByZero, "division by zero");
    if (cb == 1 || cb == -1) return FieldElement(ca * cb);
    fail(Errc::kFieldMismatch, "division of unbound integer literals");
  }
  return FieldElement(f, f->mul(ca, f->inv(cb)));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  std::int64_t ca, cb;
  bind(a, b, ca, cb, a.field_, b.field_);
  return ca == cb;
}

// ---------------------------------------------------------------------------
// Field

Field Field::prime(std::int64_t p) {
  if (!is_prime(p)) fail(Errc::kNotPrime, std::to_string(p) + " is not prime");
  if (p >= kMaxOrder) fail(Errc::kTooLarge, "prime too large");
  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto& slot = reg.primes[p];
  if (!slot) {
    slot = std::make_unique<detail::FieldData>();
    slot->kind = FieldKind::kPrime;
    slot->p = p;
    slot->q = p;
    slot->m = 1;
  }
  return Field(slot.get());
}

Field Field::extension(const Field& base, const FieldPolynomial& modulus) {
  if (!(modulus.ring() == base))
    fail(Errc::kFieldMismatch, "modulus is not defined over the base field");
  const int m = modulus.degree();
  if (m < 1) fail(Errc::kInvalidArgument, "modulus must have degree >= 1");
  if (!modulus.is_monic())
    fail(Errc::kNotMonic, modulus.to_string('y') + " is not monic");
  {
    long double order = 1;
    for (int i = 0; i < m; ++i) order *= static_cast<long double>(base.order());
    if (order >= static_cast<long double>(kMaxOrder))
      fail(Errc::kTooLarge, "extension order exceeds 2^31");
  }

  std::vector<std::int64_t> key;
  for (const auto& c : modulus.coefficients()) key.push_back(c.code());
  auto& reg = registry();
  {
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.extensions.find({base.data_, key});
    if (it != reg.extensions.end()) return Field(it->second.get());
  }

  // Exhaustive search for a monic factor of degree <= m/2.
  for (int d = 1; 2 * d <= m; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= base.order();
    for (std::int64_t idx = 0; idx < count; ++idx) {
      std::vector<FieldElement> c(static_cast<size_t>(d) + 1, base.one());
      std::int64_t rest = idx;
      for (int i = 0; i < d; ++i) {
        c[static_cast<size_t>(i)] = base.element(rest % base.order());
        rest /= base.order();
      }
      const FieldPolynomial candidate(base, std::move(c));
      // Remainder of modulus by the monic candidate.
      std::vector<FieldElement> r = modulus.coefficients();
      for (int k = m; k >= d; --k) {
        const FieldElement t = r[static_cast<size_t>(k)];
        if (t.is_zero()) continue;
        for (int j = 0; j <= d; ++j)
          r[static_cast<size_t>(k - d + j)] -= t * candidate.coeff(j);
      }
      bool zero = true;
      for (int j = 0; j < d; ++j) zero = zero && r[static_cast<size_t>(j)].is_zero();
      if (zero)
        fail(Errc::kReducible, modulus.to_string('y') + " has the factor " +
                                   candidate.to_string('y'));
    }
  }

  auto data = std::make_unique<detail::FieldData>();
  data->kind = FieldKind::kExtension;
  data->p = base.characteristic();
  data->m = m;
  data->base = base.data_;
  data->modulus = key;
  data->q = 1;
  for (int i = 0; i < m; ++i) data->q *= base.order();
  if (data->q <= kTableOrder) {
    const auto q = static_cast<size_t>(data->q);
    data->mul_table.resize(q * q);
    data->inv_table.assign(q, 0);
    for (size_t a = 0; a < q; ++a)
      for (size_t b = 0; b < q; ++b) {
        const auto v = data->mul_slow(static_cast<std::int64_t>(a),
                                      static_cast<std::int64_t>(b));
        data->mul_table[a * q + b] = static_cast<std::int32_t>(v);
        if (v == 1) data->inv_table[a] = static_cast<std::int32_t>(b);
      }
  }

  std::lock_guard<std::mutex> lock(reg.mu);
  auto& slot = reg.extensions[{base.data_, key}];
  if (!slot) slot = std::move(data);
  return Field(slot.get());
}

FieldKind Field::kind() const { return data_->kind; }
std::int64_t Field::characteristic() const { return data_->p; }
std::int64_t Field::order() const { return data_->q; }
int Field::degree() const { return data_->m; }

int Field::absolute_degree() const {
  int d = 1;
  for (const auto* f = data_; f != nullptr; f = f->base) d *= f->m;
  return d;
}

std::optional<Field> Field::base() const {
  if (!data_->base) return std::nullopt;
  return Field(data_->base);
}

FieldPolynomial Field::modulus() const {
  if (data_->kind != FieldKind::kExtension)
    fail(Errc::kInvalidArgument, "prime fields have no defining polynomial");
  const Field b(data_->base);
  std::vector<FieldElement> c;
  for (auto v : data_->modulus) c.push_back(b.element(v));
  return FieldPolynomial(b, std::move(c));
}

FieldElement Field::element(std::int64_t code) const {
  if (code < 0 || code >= data_->q)
    fail(Errc::kInvalidArgument, "element index " + std::to_string(code) +
                                     " outside [0, " + std::to_string(data_->q) + ")");
  return FieldElement(data_, code);
}

FieldElement Field::from_int(long long v) const {
  return FieldElement(data_, data_->from_int(v));
}

FieldElement Field::generator() const {
  if (data_->kind != FieldKind::kExtension)
    fail(Errc::kInvalidArgument, "prime fields have no canonical generator");
  // Index of the polynomial y.
  return FieldElement(data_, data_->m == 1 ? data_->base->neg(data_->modulus[0])
                                           : data_->base->q);
}

FieldElement Field::from_coefficients(std::span<const FieldElement> coeffs) const {
  if (data_->kind != FieldKind::kExtension)
    fail(Errc::kInvalidArgument, "prime fields have no coefficient representation");
  // Reduce an arbitrary-length coefficient list by the modulus.
  const Field b(data_->base);
  FieldElement acc = zero();
  const FieldElement y = generator();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * y + embed(b.reduce(*it));
  return acc;
}

std::vector<FieldElement> Field::coefficients(const FieldElement& x) const {
  if (data_->kind != FieldKind::kExtension)
    fail(Errc::kInvalidArgument, "prime fields have no coefficient representation");
  const FieldElement r = reduce(x);
  const Field b(data_->base);
  std::vector<FieldElement> out;
  for (auto d : data_->digits(r.code())) out.push_back(b.element(d));
  return out;
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(static_cast<size_t>(data_->q));
  for (std::int64_t i = 0; i < data_->q; ++i) out.emplace_back(FieldElement(data_, i));
  return out;
}

bool Field::contains(const Field& sub) const { return data_->contains(sub.data_); }

FieldElement Field::embed(const FieldElement& x) const {
  if (!x.is_bound()) return from_int(x.code());
  if (!data_->contains(x.field_))
    fail(Errc::kFieldMismatch, x.field().description() +
                                   " is not a subfield of " + description());
  // Indices of subfield elements are preserved: they are constants.
  return FieldElement(data_, x.code());
}

FieldElement Field::reduce(const FieldElement& x) const {
  if (!x.is_bound()) return from_int(x.code());
  if (x.field_ != data_)
    fail(Errc::kFieldMismatch, "element of " + x.field().description() +
                                   " used in " + description());
  return x;
}

std::string Field::description() const {
  if (data_->kind == FieldKind::kPrime) return "F_" + std::to_string(data_->p);
  return base()->description() + "[y]/(" + modulus().to_string('y') + ")";
}

}  // namespace phicyclic
