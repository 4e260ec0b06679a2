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

#include "phicyclic/polyring.hpp"

#include <algorithm>

#include <boost/multiprecision/integer.hpp>

#include "phicyclic/linalg.hpp"

namespace phicyclic {

namespace {

BigInt ipow(const BigInt& b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

IntPolynomial exact_div(const IntPolynomial& f, const BigInt& d) {
  std::vector<BigInt> c = f.coefficients();
  for (auto& v : c) v /= d;
  return IntPolynomial(Integers{}, std::move(c));
}

}  // namespace

FieldPolynomial make_monic(const FieldPolynomial& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.leading().inverse());
}

XgcdResult poly_xgcd(const FieldPolynomial& f, const FieldPolynomial& g) {
  f.check_ring(g);
  const Field& field = f.ring();
  if (f.is_zero() && g.is_zero()) fail(Errc::kBothZero, "xgcd(0, 0)");
  FieldPolynomial r0 = f, r1 = g;
  FieldPolynomial s0 = FieldPolynomial::constant(field, field.one());
  FieldPolynomial s1(field);
  FieldPolynomial t0(field);
  FieldPolynomial t1 = FieldPolynomial::constant(field, field.one());
  while (!r1.is_zero()) {
    auto [quot, rem] = poly_divmod(r0, r1);
    r0 = std::exchange(r1, rem);
    s0 = std::exchange(s1, s0 - quot * s1);
    t0 = std::exchange(t1, t0 - quot * t1);
  }
  const FieldElement scale = r0.leading().inverse();
  return {r0.scaled(scale), s0.scaled(scale), t0.scaled(scale)};
}

FieldPolynomial poly_gcd(const FieldPolynomial& f, const FieldPolynomial& g) {
  return poly_xgcd(f, g).d;
}

BigInt content(const IntPolynomial& f) {
  BigInt c = 0;
  for (const auto& v : f.coefficients()) c = boost::multiprecision::gcd(c, v);
  return c < 0 ? BigInt(-c) : c;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  BigInt c = content(f);
  if (f.leading() < 0) c = -c;
  return exact_div(f, c);
}

IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) fail(Errc::kDivisionByZero, "pseudo-remainder by zero");
  const int dg = g.degree();
  if (f.degree() < dg) return f;
  std::vector<BigInt> r = f.coefficients();
  const BigInt lc = g.leading();
  for (int k = f.degree(); k >= dg; --k) {
    const BigInt t = r[static_cast<size_t>(k)];
    for (auto& v : r) v *= lc;
    for (int j = 0; j <= dg; ++j) r[static_cast<size_t>(k - dg + j)] -= t * g.coeff(j);
  }
  r.resize(static_cast<size_t>(dg));
  return IntPolynomial(Integers{}, std::move(r));
}

IntPolynomial primitive_gcd(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() && g.is_zero()) fail(Errc::kBothZero, "gcd(0, 0)");
  if (f.is_zero()) return primitive_part(g).scaled(content(g));
  if (g.is_zero()) return primitive_part(f).scaled(content(f));
  const BigInt c = boost::multiprecision::gcd(content(f), content(g));
  IntPolynomial a = primitive_part(f), b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  return primitive_part(a).scaled(c);
}

bool is_separable(const FieldPolynomial& phi) {
  if (phi.is_zero()) fail(Errc::kZeroPolynomial, "separability of 0");
  return poly_gcd(phi, phi.derivative()).degree() == 0;
}

bool is_separable(const IntPolynomial& phi) {
  if (phi.is_zero()) fail(Errc::kZeroPolynomial, "separability of 0");
  return primitive_gcd(phi, phi.derivative()).degree() == 0;
}

std::vector<FieldPolynomial> monic_polynomials(const Field& field, int degree) {
  std::int64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= field.order();
  std::vector<FieldPolynomial> out;
  out.reserve(static_cast<size_t>(count));
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::vector<FieldElement> c(static_cast<size_t>(degree) + 1, field.one());
    std::int64_t rest = idx;
    for (int i = 0; i < degree; ++i) {
      c[static_cast<size_t>(i)] = field.element(rest % field.order());
      rest /= field.order();
    }
    out.emplace_back(field, std::move(c));
  }
  return out;
}

bool is_irreducible(const FieldPolynomial& f) {
  if (f.degree() < 1) return false;
  const FieldPolynomial g = make_monic(f);
  for (int d = 1; 2 * d <= g.degree(); ++d)
    for (const auto& cand : monic_polynomials(g.ring(), d))
      if (poly_rem(g, cand).is_zero()) return false;
  return true;
}

std::vector<FieldPolynomial> monic_divisors(const FieldPolynomial& phi,
                                            std::int64_t bound) {
  if (!phi.is_monic()) fail(Errc::kNotMonic, phi.to_string() + " is not monic");
  const Field& field = phi.ring();
  std::int64_t total = 0, layer = 1;
  for (int d = 0; d <= phi.degree(); ++d) {
    total += layer;
    if (total > bound)
      fail(Errc::kTooLarge, "divisor search space exceeds " + std::to_string(bound));
    if (d < phi.degree()) layer *= field.order();
  }
  std::vector<FieldPolynomial> out;
  for (int d = 0; d <= phi.degree(); ++d) {
    auto layer_divisors = monic_polynomials(field, d);
    std::erase_if(layer_divisors,
                  [&](const FieldPolynomial& g) { return !poly_rem(phi, g).is_zero(); });
    std::sort(layer_divisors.begin(), layer_divisors.end(),
              [](const FieldPolynomial& a, const FieldPolynomial& b) {
                for (int i = 0; i <= a.degree(); ++i)
                  if (a.coeff(i).code() != b.coeff(i).code())
                    return a.coeff(i).code() < b.coeff(i).code();
                return false;
              });
    out.insert(out.end(), layer_divisors.begin(), layer_divisors.end());
  }
  return out;
}

int mobius(std::int64_t n) {
  if (n < 1) fail(Errc::kInvalidArgument, "mobius of non-positive integer");
  int result = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

BigInt count_irreducible(std::int64_t q, int m) {
  if (m < 1) fail(Errc::kInvalidArgument, "degree must be >= 1");
  if (q < 2) fail(Errc::kInvalidArgument, "q must be a prime power");
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  std::int64_t rest = q;
  while (rest % p == 0) rest /= p;
  if (rest != 1) fail(Errc::kInvalidArgument, std::to_string(q) + " is not a prime power");
  BigInt sum = 0;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) sum += mobius(d) * ipow(BigInt(q), m / d);
  return sum / m;
}

IntMatrix sylvester_matrix(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero())
    fail(Errc::kZeroPolynomial, "Sylvester matrix of the zero polynomial");
  const int m = f.degree(), n = g.degree();
  const Eigen::Index size = m + n;
  IntMatrix s = IntMatrix::Zero(size, size);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s(i, i + k) = f.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s(n + i, i + k) = g.coeff(n - k);
  return s;
}

BigInt poly_resultant(const IntPolynomial& f, const IntPolynomial& g) {
  return bareiss_determinant(sylvester_matrix(f, g));
}

BigInt poly_resultant_prs(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero())
    fail(Errc::kZeroPolynomial, "resultant of the zero polynomial");
  IntPolynomial a = f, b = g;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
  }
  const BigInt ca = content(a), cb = content(b);
  const BigInt t = ipow(ca, b.degree()) * ipow(cb, a.degree());
  a = exact_div(a, ca);
  b = exact_div(b, cb);
  BigInt gg = 1, h = 1;
  while (b.degree() > 0) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = exact_div(r, gg * ipow(h, delta));
    gg = a.leading();
    if (delta > 0) h = ipow(gg, delta) / ipow(h, delta - 1);
  }
  // b is a nonzero constant here.
  const int da = a.degree();
  const BigInt last = da == 0 ? BigInt(1) : BigInt(ipow(b.leading(), da) / ipow(h, da - 1));
  return BigInt(s) * t * last;
}

FieldElement poly_eval(const FieldPolynomial& f, const FieldElement& x) {
  const Field& base = f.ring();
  if (!x.is_bound()) return f(base.from_int(x.code()));
  const Field target = x.field();
  if (!target.contains(base))
    fail(Errc::kFieldMismatch, base.description() + " does not embed in " +
                                   target.description());
  FieldElement acc = target.zero();
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + target.embed(*it);
  return acc;
}

FieldElement field_from_bigint(const Field& field, const BigInt& v) {
  const BigInt r = mod_floor(v, BigInt(field.characteristic()));
  return field.from_int(r.convert_to<long long>());
}

FieldPolynomial reduce_mod(const IntPolynomial& f, const Field& prime_field) {
  std::vector<FieldElement> c;
  c.reserve(f.coefficients().size());
  for (const auto& v : f.coefficients()) c.push_back(field_from_bigint(prime_field, v));
  return FieldPolynomial(prime_field, std::move(c));
}

IntPolynomial int_polynomial(std::initializer_list<long long> coeffs) {
  return IntPolynomial(Integers{}, coeffs);
}

}  // namespace phicyclic
