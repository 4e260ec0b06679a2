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

#include "phicyclic/ntru.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <boost/multiprecision/integer.hpp>

#include "phicyclic/field.hpp"
#include "phicyclic/linalg.hpp"
#include "phicyclic/qlattice.hpp"

namespace phicyclic::ntru {

namespace {

IntVector to_vector(const std::vector<long long>& a) {
  IntVector v(static_cast<Eigen::Index>(a.size()));
  for (size_t i = 0; i < a.size(); ++i) v(static_cast<Eigen::Index>(i)) = a[i];
  return v;
}

// Counts of +s and -s entries, or -1 if some entry is neither 0 nor +-s.
std::pair<int, int> support(const IntVector& v, const BigInt& s, Eigen::Index from) {
  int pos = 0, neg = 0;
  for (Eigen::Index i = from; i < v.size(); ++i) {
    if (v(i) == s) {
      ++pos;
    } else if (v(i) == -s) {
      ++neg;
    } else if (v(i) != 0) {
      return {-1, -1};
    }
  }
  return {pos, neg};
}

bool invertible_mod(const IntMatrix& m, const BigInt& q) {
  return boost::multiprecision::gcd(mod_floor(bareiss_determinant(m), q), q) == 1;
}

}  // namespace

std::vector<std::string> params_violations(const ParamsCandidate& c) {
  std::vector<std::string> out;
  if (!is_prime(c.n)) out.push_back("n = " + std::to_string(c.n) + " is not prime");
  if (c.p <= 1) out.push_back("p must exceed 1");
  if (c.p >= c.q) out.push_back("p must be less than q");
  if (c.p > 0 && c.q > 0 && std::gcd(c.p, c.q) != 1)
    out.push_back("gcd(p, q) = " + std::to_string(std::gcd(c.p, c.q)) + " is not 1");
  if (c.df < 0) out.push_back("d_f must be non-negative");
  const bool shape_ok = c.n >= 1 && static_cast<std::int64_t>(c.a.size()) == c.n;
  if (!shape_ok) out.push_back("a must have exactly n entries");
  if (shape_ok && c.a[0] == 0) out.push_back("a_0 must be nonzero");
  if (shape_ok && c.a[0] != 0 && !is_separable(IntPhiContext(to_vector(c.a)).phi()))
    out.push_back("phi is not separable");
  // d_f < (q/2 - 1)/(4p) - 1/2, cleared of fractions.
  if (c.p > 0 && !(8 * c.p * c.df < c.q - 2 - 4 * c.p))
    out.push_back("d_f = " + std::to_string(c.df) + " violates d_f < (q/2 - 1)/(4p) - 1/2");
  if (2 * c.df + 1 > c.n - 1)
    out.push_back("2 d_f + 1 = " + std::to_string(2 * c.df + 1) + " exceeds n - 1");
  return out;
}

Params::Params(const ParamsCandidate& c)
    : candidate_(c), q_(c.q), p_(c.p), ctx_(to_vector(c.a)) {}

Params params_validate(const ParamsCandidate& candidate) {
  const auto violations = params_violations(candidate);
  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations) msg += (msg.empty() ? "" : "; ") + v;
    throw Error(Errc::kInvalidParams, msg, violations);
  }
  return Params(candidate);
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  if (bound == 0) fail(Errc::kInvalidArgument, "uniform(0)");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t excess = (kMax % bound + 1) % bound;  // 2^64 mod bound
  while (true) {
    const std::uint64_t x = engine_();
    if (excess == 0 || x < kMax - excess + 1) return x % bound;
  }
}

IntVector sample_ternary(int count_pos, int count_neg, int length, const BigInt& scale, Rng& rng,
                         const std::vector<int>& zero_positions) {
  if (count_pos < 0 || count_neg < 0 || length < 0)
    fail(Errc::kInvalidArgument, "counts and length must be non-negative");
  std::vector<int> slots;
  for (int i = 0; i < length; ++i)
    if (std::find(zero_positions.begin(), zero_positions.end(), i) == zero_positions.end())
      slots.push_back(i);
  if (static_cast<size_t>(count_pos) + static_cast<size_t>(count_neg) > slots.size())
    fail(Errc::kInfeasible, std::to_string(count_pos + count_neg) + " nonzero entries in " +
                                std::to_string(slots.size()) + " free positions");
  for (size_t i = slots.size(); i-- > 1;) {
    const auto j = static_cast<size_t>(rng.uniform(i + 1));
    std::swap(slots[i], slots[j]);
  }
  IntVector v = IntVector::Zero(length);
  for (int i = 0; i < count_pos; ++i) v(slots[static_cast<size_t>(i)]) = scale;
  for (int i = 0; i < count_neg; ++i) v(slots[static_cast<size_t>(count_pos + i)]) = -scale;
  return v;
}

IntMatrix KeyPair::N() const { return hnf_basis(params.context(), h, params.q()); }

KeyPair keypair_from(const Params& params, const IntVector& f, const IntVector& g) {
  const IntPhiContext& ctx = params.context();
  ctx.check_length(f);
  ctx.check_length(g);
  const int df = params.df();
  const auto [fp, fn] = support(f, params.p(), 1);
  if (f(0) != 1 || fp != df + 1 || fn != df)
    fail(Errc::kBadShape, "f must be 1 + (d_f+1 entries p, d_f entries -p in positions 1..n-1)");
  const auto [gp, gn] = support(g, params.p(), 0);
  if (gp != df + 1 || gn != df)
    fail(Errc::kBadShape, "g must have d_f+1 entries p and d_f entries -p");

  const IntMatrix hf = ideal_matrix(ctx, f);
  const IntMatrix hg = ideal_matrix(ctx, g);
  const IntMatrix f_inv = inverse_mod(hf, params.q());
  KeyPair key{params, f, g, mod_floor(int_product(f_inv, g), params.q())};

  const IntMatrix identity = IntMatrix::Identity(ctx.n(), ctx.n());
  if (!matrices_equal(mod_floor(hf, params.p()), identity) ||
      !is_zero_matrix(mod_floor(hg, params.p())))
    fail(Errc::kInternalMismatch, "H*(f) = I and H*(g) = 0 (mod p) do not hold");
  if (!matrices_equal(mod_floor(int_product(hf, ideal_matrix(ctx, key.h)), params.q()),
                      mod_floor(hg, params.q())))
    fail(Errc::kInternalMismatch, "H*(f) H*(h) = H*(g) (mod q) does not hold");
  return key;
}

KeyPair keygen(const Params& params, Rng& rng, int max_retries) {
  const int n = params.n(), df = params.df();
  IntVector e1 = IntVector::Zero(n);
  e1(0) = 1;
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    const IntVector f = e1 + sample_ternary(df + 1, df, n, params.p(), rng, {0});
    if (!invertible_mod(ideal_matrix(params.context(), f), params.q())) continue;
    const IntVector g = sample_ternary(df + 1, df, n, params.p(), rng);
    return keypair_from(params, f, g);
  }
  fail(Errc::kMaxRetriesExceeded,
       "no invertible f after " + std::to_string(max_retries) + " draws");
}

void check_plain_vector(const Params& params, const IntVector& v, const std::string& name) {
  if (v.size() != params.n())
    fail(Errc::kBadShape, name + " must have length " + std::to_string(params.n()));
  const auto [pos, neg] = support(v, 1, 0);
  if (pos != params.df() + 1 || neg != params.df())
    fail(Errc::kBadShape, name + " must have exactly " + std::to_string(params.df() + 1) +
                              " entries 1 and " + std::to_string(params.df()) +
                              " entries -1, the rest 0");
}

IntVector sample_plain_vector(const Params& params, Rng& rng) {
  return sample_ternary(params.df() + 1, params.df(), params.n(), 1, rng);
}

Ciphertext encrypt(const PublicKey& key, const IntVector& m, const IntVector& r) {
  check_plain_vector(key.params, m, "m");
  check_plain_vector(key.params, r, "r");
  const IntVector c = mod_floor(m + star(key.params.context(), key.h, r), key.params.q());
  return {key.params.n(), key.params.q(), c};
}

Decryption decrypt_with_trace(const KeyPair& key, const Ciphertext& ct) {
  const Params& params = key.params;
  params.context().check_length(ct.c);
  Decryption out;
  out.pre_reduction = mod_centered(star(params.context(), key.f, ct.c), params.q());
  out.m = out.pre_reduction.unaryExpr(
      [&](const BigInt& v) { return mod_centered_upper(v, params.p()); });
  out.max_abs = 0;
  for (Eigen::Index i = 0; i < out.pre_reduction.size(); ++i)
    out.max_abs = std::max(out.max_abs, BigInt(boost::multiprecision::abs(out.pre_reduction(i))));
  try {
    check_plain_vector(params, out.m, "m");
    out.shape_ok = true;
  } catch (const Error&) {
    out.shape_ok = false;
  }
  return out;
}

IntVector decrypt(const KeyPair& key, const Ciphertext& ct) {
  return decrypt_with_trace(key, ct).m;
}

RoundtripReport roundtrip_check(const KeyPair& key, const IntVector& m, const IntVector& r) {
  const IntPhiContext& ctx = key.params.context();
  RoundtripReport report;
  report.q = key.params.q();
  report.exact = star(ctx, key.f, m) + star(ctx, key.g, r);
  report.max_abs = 0;
  for (Eigen::Index i = 0; i < report.exact.size(); ++i) {
    const BigInt& v = report.exact(i);
    report.max_abs = std::max(report.max_abs, BigInt(boost::multiprecision::abs(v)));
    if (2 * v < -report.q || 2 * v >= report.q) report.wrap = true;
  }
  const IntVector recovered = decrypt(key, encrypt(key.public_key(), m, r));
  report.success = matrices_equal(recovered, m);
  return report;
}

}  // namespace phicyclic::ntru
