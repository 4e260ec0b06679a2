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

#include "phicyclic/phicode.hpp"

#include <algorithm>
#include <numeric>

#include "phicyclic/linalg.hpp"

namespace phicyclic {

namespace {

std::vector<FieldElement> to_elements(const Field& field, const std::vector<long long>& a) {
  std::vector<FieldElement> out;
  out.reserve(a.size());
  for (long long v : a) out.push_back(field.from_int(v));
  return out;
}

int weight(const FieldVector& c) {
  int w = 0;
  for (Eigen::Index i = 0; i < c.size(); ++i) w += !c(i).is_zero();
  return w;
}

// Message vector for index `idx` read as base-q digits.
FieldVector message_at(const Field& field, int k, std::int64_t idx) {
  FieldVector m(k);
  for (int i = 0; i < k; ++i) {
    m(i) = field.element(idx % field.order());
    idx /= field.order();
  }
  return m;
}

}  // namespace

PhiContext::PhiContext(const Field& field, std::vector<FieldElement> a)
    : field_(field), a_(std::move(a)), phi_(field) {
  if (a_.empty()) fail(Errc::kInvalidArgument, "a must have at least one entry");
  for (auto& v : a_) v = field_.reduce(v);
  if (a_[0].is_zero()) fail(Errc::kZeroConstantTerm, "a_0 must be nonzero");
  const int n = this->n();
  std::vector<FieldElement> coeffs(static_cast<size_t>(n) + 1, field_.one());
  for (int i = 0; i < n; ++i) coeffs[static_cast<size_t>(i)] = -a_[static_cast<size_t>(i)];
  phi_ = FieldPolynomial(field_, std::move(coeffs));
  t_ = FieldMatrix::Constant(n, n, field_.zero());
  for (int i = 0; i + 1 < n; ++i) t_(i + 1, i) = field_.one();
  for (int i = 0; i < n; ++i) t_(i, n - 1) = a_[static_cast<size_t>(i)];
}

PhiContext::PhiContext(const Field& field, const std::vector<long long>& a)
    : PhiContext(field, to_elements(field, a)) {}

void PhiContext::check_length(const FieldVector& c) const {
  if (c.size() != n())
    fail(Errc::kDimensionMismatch,
         "expected length " + std::to_string(n()) + ", got " + std::to_string(c.size()));
}

FieldVector PhiContext::to_vector(const FieldPolynomial& f) const {
  const auto padded = f.padded(n());
  FieldVector v(n());
  for (int i = 0; i < n(); ++i) v(i) = padded[static_cast<size_t>(i)];
  return v;
}

FieldPolynomial PhiContext::to_polynomial(const FieldVector& c) const {
  check_length(c);
  return FieldPolynomial(field_, std::vector<FieldElement>(c.data(), c.data() + c.size()));
}

FieldPolynomial PhiContext::star(const FieldPolynomial& f, const FieldPolynomial& g) const {
  return poly_rem(f * g, phi_);
}

FieldVector tau_apply(const PhiContext& ctx, const FieldVector& c) {
  ctx.check_length(c);
  const int n = ctx.n();
  const FieldElement last = ctx.field().reduce(c(n - 1));
  FieldVector out(n);
  out(0) = ctx.a()[0] * last;
  for (int i = 1; i < n; ++i) out(i) = c(i - 1) + ctx.a()[static_cast<size_t>(i)] * last;
  return out;
}

std::string parity_source_name(ParitySource source) {
  return source == ParitySource::kReversedCofactor ? "reversed-cofactor" : "kernel-fallback";
}

FieldMatrix reversed_cofactor_rows(const PhiContext& ctx, const FieldPolynomial& h) {
  const int n = ctx.n();
  const int rows = n - h.degree();
  FieldMatrix out = FieldMatrix::Constant(std::max(rows, 0), n, ctx.field().zero());
  if (rows <= 0) return out;
  FieldVector row = ctx.to_vector(h).reverse();
  for (int i = 0; i < rows; ++i) {
    out.row(i) = row.transpose();
    row = tau_apply(ctx, row);
  }
  return out;
}

PhiCyclicCode code_from_generator(const PhiContext& ctx, const FieldPolynomial& g) {
  ctx.phi().check_ring(g);
  if (!g.is_monic()) fail(Errc::kNotMonic, g.to_string() + " is not monic");
  auto [h, rem] = poly_divmod(ctx.phi(), g);
  if (!rem.is_zero())
    fail(Errc::kNotDivisor, g.to_string() + " does not divide " + ctx.phi().to_string());

  PhiCyclicCode code(ctx, g, h);
  const int n = ctx.n();
  const int k = n - g.degree();
  code.k_ = k;
  const Field& field = ctx.field();

  code.gen_ = FieldMatrix::Constant(k, n, field.zero());
  if (k > 0) {
    FieldVector row = ctx.to_vector(g);
    for (int i = 0; i < k; ++i) {
      code.gen_.row(i) = row.transpose();
      row = tau_apply(ctx, row);
    }
  }

  code.parity_ = reversed_cofactor_rows(ctx, h);
  const bool orthogonal = is_zero_matrix(code.gen_ * code.parity_.transpose());
  if (orthogonal && rank(code.parity_) == n - k) {
    code.source_ = ParitySource::kReversedCofactor;
  } else {
    code.parity_ = right_kernel(code.gen_);
    code.source_ = ParitySource::kKernelFallback;
  }
  return code;
}

FieldVector encode(const PhiCyclicCode& code, const FieldVector& message) {
  if (message.size() != code.k())
    fail(Errc::kDimensionMismatch, "message length " + std::to_string(message.size()) +
                                       " for a code of dimension " + std::to_string(code.k()));
  if (code.k() == 0) return FieldVector::Constant(code.n(), code.context().field().zero());
  return (message.transpose() * code.G()).transpose();
}

bool is_codeword(const PhiCyclicCode& code, const FieldVector& c) {
  return poly_rem(code.context().to_polynomial(c), code.g()).is_zero();
}

bool syndrome_is_zero(const PhiCyclicCode& code, const FieldVector& c) {
  code.context().check_length(c);
  if (code.H().rows() == 0) return true;
  return is_zero_matrix(code.H() * c);
}

FieldPolynomial idempotent(const PhiCyclicCode& code) {
  const PhiContext& ctx = code.context();
  if (code.k() == 0 || code.k() == code.n())
    fail(Errc::kTrivialCode, "idempotent needs 1 <= k <= n-1");
  if (!is_separable(ctx.phi()))
    fail(Errc::kNotSeparable, ctx.phi().to_string() + " is not separable");
  const XgcdResult r = poly_xgcd(code.g(), code.h());
  return poly_rem(r.a * code.g(), ctx.phi());
}

bool maximal_membership(const PhiCyclicCode& code, const FieldVector& c) {
  const FieldPolynomial cx = code.context().to_polynomial(c);
  if (!is_irreducible(code.g()))
    fail(Errc::kNotIrreducible, code.g().to_string() + " is not irreducible");
  const Field ext = Field::extension(code.context().field(), code.g());
  return poly_eval(cx, ext.generator()).is_zero();
}

VandermondeParity vandermonde_parity(const PhiContext& ctx, const FieldPolynomial& g) {
  ctx.phi().check_ring(g);
  if (!is_irreducible(g)) fail(Errc::kNotIrreducible, g.to_string() + " is not irreducible");
  if (!g.is_monic() || !poly_rem(ctx.phi(), g).is_zero())
    fail(Errc::kNotDivisor, g.to_string() + " is not a monic divisor of " + ctx.phi().to_string());
  const Field ext = Field::extension(ctx.field(), g);
  const int m = g.degree(), n = ctx.n();
  FieldMatrix h = FieldMatrix::Constant(m, n, ext.zero());
  FieldElement beta = ext.generator();
  for (int i = 0; i < m; ++i) {
    FieldElement power = ext.one();
    for (int j = 0; j < n; ++j) {
      h(i, j) = power;
      power = power * beta;
    }
    beta = beta.pow(static_cast<std::uint64_t>(ctx.field().order()));
  }
  return {ext, std::move(h)};
}

bool vandermonde_membership(const VandermondeParity& vp, const FieldVector& c) {
  if (c.size() != vp.H.cols())
    fail(Errc::kDimensionMismatch, "vector length does not match the parity matrix");
  for (Eigen::Index i = 0; i < vp.H.rows(); ++i) {
    FieldElement acc = vp.extension.zero();
    for (Eigen::Index j = 0; j < c.size(); ++j) acc += vp.extension.embed(c(j)) * vp.H(i, j);
    if (!acc.is_zero()) return false;
  }
  return true;
}

int min_distance(const PhiCyclicCode& code, std::int64_t bound) {
  const int k = code.k();
  if (k == 0) fail(Errc::kTrivialCode, "the zero code has no minimum distance");
  const Field& field = code.context().field();
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) {
    count *= field.order();
    if (count > bound)
      fail(Errc::kTooLarge, "q^k exceeds the search bound " + std::to_string(bound));
  }
  int best = code.n();
  for (std::int64_t idx = 1; idx < count; ++idx)
    best = std::min(best, weight(encode(code, message_at(field, k, idx))));
  return best;
}

std::vector<PhiCyclicCode> enumerate_codes(const PhiContext& ctx, std::int64_t bound) {
  std::vector<PhiCyclicCode> out;
  for (const auto& g : monic_divisors(ctx.phi(), bound)) out.push_back(code_from_generator(ctx, g));
  return out;
}

bool constant_code_is_phi_cyclic(const PhiContext& ctx) {
  if (ctx.n() < 2) fail(Errc::kInvalidArgument, "constant code criterion needs n >= 2");
  const auto& a = ctx.a();
  const FieldElement b = a[1];
  for (size_t i = 2; i < a.size(); ++i)
    if (a[i] != b) return false;
  return a[0] == b + 1;
}

int independent_column_depth(const FieldMatrix& m, int limit) {
  const int cols = static_cast<int>(m.cols());
  limit = std::min({limit, cols, static_cast<int>(m.rows())});
  for (int d = 1; d <= limit; ++d) {
    std::vector<int> pick(static_cast<size_t>(d));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      FieldMatrix sub(m.rows(), d);
      for (int j = 0; j < d; ++j) sub.col(j) = m.col(pick[static_cast<size_t>(j)]);
      if (rank(sub) < d) return d - 1;
      int i = d - 1;
      while (i >= 0 && pick[static_cast<size_t>(i)] == cols - d + i) --i;
      if (i < 0) break;
      ++pick[static_cast<size_t>(i)];
      for (int j = i + 1; j < d; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return limit;
}

}  // namespace phicyclic
