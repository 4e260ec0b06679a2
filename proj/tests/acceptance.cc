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

// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exits non-zero if a criterion fails, unless the failure is one of the
// documented unattainable cases and its obstruction was confirmed here.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "phicyclic/errors.hpp"
#include "phicyclic/field.hpp"
#include "phicyclic/idealmat.hpp"
#include "phicyclic/io.hpp"
#include "phicyclic/linalg.hpp"
#include "phicyclic/ntru.hpp"
#include "phicyclic/oracles.hpp"
#include "phicyclic/phicode.hpp"
#include "phicyclic/polyring.hpp"
#include "phicyclic/qlattice.hpp"

namespace {

using namespace phicyclic;
namespace fs = std::filesystem;

struct Verdict {
  bool pass = false;
  std::string detail;
  // Set only when the failure is a confirmed, documented impossibility.
  bool unattainable = false;
  std::vector<std::string> info;
};

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

std::int64_t Power(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Every a-vector over F_q of length n with a_0 != 0, as integer codes.
std::vector<std::vector<long long>> AVectors(std::int64_t q, int n) {
  std::vector<std::vector<long long>> out;
  for (std::int64_t idx = 0; idx < Power(q, n); ++idx) {
    std::vector<long long> a(static_cast<size_t>(n));
    std::int64_t rest = idx;
    for (auto& v : a) {
      v = rest % q;
      rest /= q;
    }
    if (a[0] != 0) out.push_back(a);
  }
  return out;
}

// F_2 with n <= 4 and F_3 with n <= 3.
std::vector<PhiContext> Corpus(bool separable_only) {
  std::vector<PhiContext> out;
  for (auto [q, max_n] : {std::pair<int, int>{2, 4}, {3, 3}})
    for (int n = 1; n <= max_n; ++n)
      for (const auto& a : AVectors(q, n)) {
        PhiContext ctx(Field::prime(q), a);
        if (!separable_only || is_separable(ctx.phi())) out.push_back(ctx);
      }
  return out;
}

std::vector<FieldVector> Messages(const Field& f, int k) {
  std::vector<FieldVector> out;
  for (std::int64_t idx = 0; idx < Power(f.order(), k); ++idx) {
    FieldVector v(k);
    std::int64_t rest = idx;
    for (int i = 0; i < k; ++i) {
      v(i) = f.element(rest % f.order());
      rest /= f.order();
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::int64_t> Codes(const FieldVector& v) {
  std::vector<std::int64_t> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).code());
  return out;
}

Verdict Census() {
  Verdict v;
  int contexts = 0, mismatches = 0;
  for (const PhiContext& ctx : Corpus(true)) {
    ++contexts;
    const auto codes = enumerate_codes(ctx);
    const auto census = oracles::enumerate_ideals_bruteforce(ctx);
    if (static_cast<std::int64_t>(codes.size()) != census.count) ++mismatches;
  }
  v.pass = mismatches == 0 && contexts > 0;
  v.detail = Format("%d separable contexts, %d count mismatches", contexts, mismatches);
  return v;
}

Verdict Closure() {
  Verdict v;
  std::int64_t checked = 0, violations = 0;
  int skipped = 0;
  for (const PhiContext& ctx : Corpus(true))
    for (const auto& code : enumerate_codes(ctx)) {
      if (Power(ctx.field().order(), code.k()) > 10000) {
        ++skipped;
        continue;
      }
      for (const FieldVector& m : Messages(ctx.field(), code.k())) {
        const FieldVector c = encode(code, m);
        ++checked;
        if (!is_codeword(code, tau_apply(ctx, c))) ++violations;
      }
    }
  v.pass = violations == 0 && checked > 0;
  v.detail = Format("%lld codewords shifted, %lld violations, %d codes skipped",
                    static_cast<long long>(checked), static_cast<long long>(violations), skipped);
  return v;
}

Verdict DimensionAndParity() {
  Verdict v;
  int codes = 0, bad_dim = 0, bad_count = 0, bad_parity = 0, fallback = 0;
  for (const PhiContext& ctx : Corpus(false))
    for (const auto& code : enumerate_codes(ctx)) {
      ++codes;
      if (code.k() != ctx.n() - code.g().degree()) ++bad_dim;
      std::set<std::vector<std::int64_t>> words;
      for (const FieldVector& m : Messages(ctx.field(), code.k())) words.insert(Codes(encode(code, m)));
      if (static_cast<std::int64_t>(words.size()) != Power(ctx.field().order(), code.k())) ++bad_count;
      const bool orthogonal =
          code.k() == 0 || code.k() == ctx.n() || is_zero_matrix(FieldMatrix(code.G() * code.H().transpose()));
      if (!orthogonal || rank(code.H()) != ctx.n() - code.k()) ++bad_parity;
      if (code.parity_source() == ParitySource::kKernelFallback) ++fallback;
    }
  v.pass = codes > 0 && bad_dim == 0 && bad_count == 0 && bad_parity == 0;
  v.detail = Format("%d codes: %d dimension, %d codeword-count, %d parity failures", codes, bad_dim,
                    bad_count, bad_parity);
  v.info.push_back(Format("reversed-cofactor parity rows replaced by the kernel fallback in %d of %d codes (%.1f%%)",
                          fallback, codes, 100.0 * fallback / codes));
  return v;
}

Verdict Idempotents() {
  Verdict v;
  int codes = 0, violations = 0;
  for (const PhiContext& ctx : Corpus(true))
    for (const auto& code : enumerate_codes(ctx)) {
      if (code.k() == 0 || code.k() == ctx.n()) continue;
      ++codes;
      const FieldPolynomial d = idempotent(code);
      if (!(ctx.star(d, d) == d)) ++violations;
      for (const FieldVector& m : Messages(ctx.field(), code.k())) {
        const FieldPolynomial c = ctx.to_polynomial(encode(code, m));
        if (!(ctx.star(d, c) == c)) ++violations;
      }
    }
  v.pass = codes > 0 && violations == 0;
  v.detail = Format("%d nontrivial codes, %d violations", codes, violations);
  return v;
}

Verdict Vandermonde() {
  Verdict v;
  const Field f2 = Field::prime(2);
  const PhiContext ctx(f2, {1, 0, 1, 1});  // x^4 + x^3 + x^2 + 1 = (x^3 + x + 1)(x + 1)
  const FieldPolynomial g(f2, {1, 1, 0, 1});
  const PhiCyclicCode code = code_from_generator(ctx, g);
  const VandermondeParity vp = vandermonde_parity(ctx, g);
  int disagreements = 0, members = 0;
  for (const FieldVector& c : Messages(f2, 4)) {
    const bool by_root = maximal_membership(code, c);
    const bool by_division = is_codeword(code, c);
    const bool by_parity = vandermonde_membership(vp, c);
    if (by_root != by_division || by_root != by_parity) ++disagreements;
    members += by_division;
  }
  v.pass = disagreements == 0 && members == 2;
  v.detail = Format("16 vectors, %d codewords, %d disagreements", members, disagreements);
  return v;
}

Verdict IrreducibleCounts() {
  Verdict v;
  int mismatches = 0;
  std::string table;
  for (int q : {2, 3})
    for (int m = 1; m <= 4; ++m) {
      std::int64_t exhaustive = 0;
      for (const auto& p : monic_polynomials(Field::prime(q), m)) exhaustive += is_irreducible(p);
      const BigInt formula = count_irreducible(q, m);
      if (formula != exhaustive) ++mismatches;
      table += Format(" N_%d(%d)=%lld", q, m, static_cast<long long>(exhaustive));
    }
  v.pass = mismatches == 0 && count_irreducible(2, 3) == 2;
  v.detail = Format("%d mismatches;", mismatches) + table;
  return v;
}

struct IntCase {
  IntVector a, f, g;
};

IntCase RandomCase(std::mt19937_64& rng) {
  const int n = std::uniform_int_distribution<int>(2, 6)(rng);
  std::uniform_int_distribution<long long> d(-50, 50);
  IntCase c{IntVector(n), IntVector(n), IntVector(n)};
  for (int i = 0; i < n; ++i) {
    c.a(i) = d(rng);
    c.f(i) = d(rng);
    c.g(i) = d(rng);
  }
  while (c.a(0) == 0) c.a(0) = d(rng);
  return c;
}

Verdict IdealIdentities() {
  Verdict v;
  std::mt19937_64 rng(7001);
  int exact_failures = 0, float_checked = 0, float_failures = 0, excluded = 0;
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    const IntCase c = RandomCase(rng);
    const IntPhiContext ctx(c.a);
    const IntMatrix hf = ideal_matrix(ctx, c.f), hg = ideal_matrix(ctx, c.g);
    bool ok = matrices_equal(int_product(ctx.H(), hf), int_product(hf, ctx.H()));
    ok = ok && matrices_equal(ideal_matrix_by_columns(ctx, c.f), ideal_matrix_by_powers(ctx, c.f));
    ok = ok && matrices_equal(int_product(hf, hg), int_product(hg, hf));
    ok = ok && matrices_equal(ideal_matrix(ctx, star(ctx, c.f, c.g)), int_product(hf, hg));
    const BigInt det = idealmat_det(ctx, c.f);
    const IntPolynomial fp = ctx.to_polynomial(c.f);
    ok = ok && det == (fp.is_zero() ? BigInt(0) : poly_resultant(ctx.phi(), fp));
    exact_failures += !ok;
    if (!is_separable(ctx.phi())) {
      ++excluded;
      continue;
    }
    const auto r = oracles::root_product_check(ctx, c.f, det, 1e-6);
    if (r.product_condition > oracles::kRootConditionCutoff) {
      ++excluded;
      continue;
    }
    ++float_checked;
    float_failures += !r.agree;
    worst = std::max(worst, r.relative_error);
  }
  v.pass = exact_failures == 0 && float_failures == 0 && float_checked > 0;
  v.detail = Format("1000 cases, %d exact failures; float product on %d cases (%d excluded), "
                    "%d beyond 1e-6, worst relative error %.2e",
                    exact_failures, float_checked, excluded, float_failures, worst);
  return v;
}

Verdict InvertibilityCriterion() {
  Verdict v;
  std::mt19937_64 rng(7002);
  const long long primes[] = {3, 5, 7, 29};
  int mismatches = 0, invertible = 0;
  for (int t = 0; t < 500; ++t) {
    const long long q = primes[std::uniform_int_distribution<int>(0, 3)(rng)];
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    std::uniform_int_distribution<long long> d(-3, 3);
    IntVector a(n), f(n);
    for (int i = 0; i < n; ++i) {
      a(i) = d(rng);
      f(i) = d(rng);
    }
    if (a(0) == 0) a(0) = 1;
    const IntPhiContext ctx(a);
    const Field fq = Field::prime(q);
    const FieldPolynomial fbar = reduce_mod(ctx.to_polynomial(f), fq);
    const bool coprime = !fbar.is_zero() && poly_gcd(reduce_mod(ctx.phi(), fq), fbar).degree() == 0;
    bool inverted = true;
    try {
      idealmat_inverse_mod(ctx, f, q);
    } catch (const Error&) {
      inverted = false;
    }
    mismatches += inverted != coprime;
    invertible += inverted;
  }
  v.pass = mismatches == 0;
  v.detail = Format("500 cases (%d invertible), %d mismatches", invertible, mismatches);
  return v;
}

IntVector Stack(const IntVector& a, const IntVector& b) {
  IntVector y(a.size() + b.size());
  y << a, b;
  return y;
}

Verdict LatticeClosure() {
  Verdict v;
  std::mt19937_64 rng(7003);
  const long long moduli[] = {3, 5, 7, 29, 128, 257};
  int violations = 0, members = 0;
  while (members < 1000) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const BigInt q = moduli[std::uniform_int_distribution<int>(0, 5)(rng)];
    std::uniform_int_distribution<long long> small(-3, 3), big(-100, 100);
    IntVector a(n), f(n), g(n), x(n), z(2 * n);
    for (int i = 0; i < n; ++i) {
      a(i) = small(rng);
      f(i) = small(rng);
      g(i) = small(rng);
      x(i) = big(rng);
    }
    for (auto& e : z) e = big(rng);
    if (a(0) == 0) a(0) = 1;
    const ConvLattice lat = build_lattice(IntPhiContext(a), f, g, q);
    if (!lat.has_public_basis()) continue;
    ++members;
    const IntVector y = IntVector(int_product(lat.A_prime(), x)) + q * z;
    if (!lat_member(lat, y) || !lat_member(lat, sigma_apply(lat, y))) ++violations;
    if (!lat_member(lat, Stack(f, g))) ++violations;
    for (int i = 0; i < 2 * n; ++i) {
      IntVector e = IntVector::Zero(2 * n);
      e(i) = q;
      if (!lat_member(lat, e)) ++violations;
    }
  }
  // Primary path against brute force at q = 3, n = 2.
  int compared = 0, disagreements = 0;
  for (long long a0 : {1, 2})
    for (long long a1 : {0, 1, 2})
      for (long long f1 : {0, 1, 2})
        for (long long g0 : {0, 1, 2})
          for (long long g1 : {0, 1, 2}) {
            const ConvLattice lat = build_lattice(IntPhiContext(to_int_vector({a0, a1})),
                                                  to_int_vector({1, f1}), to_int_vector({g0, g1}), 3);
            for (int idx = 0; idx < 81; ++idx) {
              IntVector y(4);
              int rest = idx;
              for (int i = 0; i < 4; ++i) {
                y(i) = rest % 3 - 1;
                rest /= 3;
              }
              ++compared;
              disagreements += lat_member(lat, y) != oracles::lattice_member_bruteforce(lat, y);
            }
          }
  v.pass = violations == 0 && disagreements == 0;
  v.detail = Format("1000 random members, %d closure violations; %d brute-force comparisons, %d disagreements",
                    violations, compared, disagreements);
  return v;
}

Verdict HnfVerification() {
  Verdict v;
  const std::vector<ntru::Params> sets = {
      ntru::params_validate({5, 41, 3, 1, {1, 0, 0, 0, 0}}),
      ntru::params_validate({7, 64, 3, 1, {1, 1, 0, 0, 0, 0, 0}}),
      ntru::params_validate({11, 128, 3, 4, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}}),
      ntru::params_validate({11, 127, 3, 4, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}})};
  int verified = 0, failed = 0, tampers = 0, undetected = 0;
  for (int t = 0; t < 100; ++t) {
    const ntru::Params& params = sets[static_cast<size_t>(t) % sets.size()];
    ntru::Rng rng(static_cast<std::uint64_t>(t));
    const ntru::KeyPair key = ntru::keygen(params, rng);
    const ConvLattice lat = build_lattice(params.context(), key.f, key.g, params.q());
    try {
      verify_basis(lat);
      ++verified;
    } catch (const Error&) {
      ++failed;
    }
    const IntMatrix n = hnf_basis(lat);
    for (Eigen::Index i = 0; i < n.rows(); ++i)
      for (Eigen::Index j = 0; j < n.cols(); ++j) {
        IntMatrix bad = n;
        bad(i, j) += 1;
        ++tampers;
        undetected += check_basis(lat, bad).ok();
      }
  }
  v.pass = verified == 100 && failed == 0 && undetected == 0;
  v.detail = Format("%d/100 bases verified; %d single-entry tampers, %d undetected", verified, tampers,
                    undetected);
  return v;
}

Verdict WorkedExample() {
  Verdict v;
  const ntru::Params params = ntru::params_validate({2, 29, 3, 0, {1, 0}});
  ntru::Rng rng(3);
  const ntru::KeyPair key = ntru::keygen(params, rng);
  const ntru::Ciphertext ct = ntru::encrypt(key.public_key(), to_int_vector({1, 0}), to_int_vector({0, 1}));
  const ntru::Decryption d = ntru::decrypt_with_trace(key, ct);
  const ntru::RoundtripReport r = ntru::roundtrip_check(key, to_int_vector({1, 0}), to_int_vector({0, 1}));
  bool ok = matrices_equal(key.f, to_int_vector({1, 3})) && matrices_equal(key.g, to_int_vector({3, 0}));
  ok = ok && matrices_equal(key.h, to_int_vector({25, 12}));
  ok = ok && matrices_equal(ct.c, to_int_vector({13, 25}));
  ok = ok && matrices_equal(d.m, to_int_vector({1, 0}));
  ok = ok && matrices_equal(d.pre_reduction, to_int_vector({1, 6}));
  ok = ok && matrices_equal(r.exact, to_int_vector({1, 6})) && r.max_abs == 6 && r.bound() == 14.5;
  ok = ok && !r.wrap && r.success;
  v.pass = ok;
  v.detail = "seed 3: f=(1,3) g=(3,0) h=" + io::vector_to_json(key.h).dump() +
             " c=" + io::vector_to_json(ct.c).dump() + " pre-reduction=" +
             io::vector_to_json(d.pre_reduction).dump() + " m=" + io::vector_to_json(d.m).dump() +
             Format(" bound %.1f", r.bound());
  return v;
}

std::vector<long long> AVector(int n, std::initializer_list<std::pair<int, long long>> entries) {
  std::vector<long long> a(static_cast<size_t>(n), 0);
  for (auto [i, value] : entries) a[static_cast<size_t>(i)] = value;
  return a;
}

struct RoundtripStats {
  std::string label;
  int keys = 0, no_wrap = 0, failures_without_wrap = 0, failures_with_wrap = 0;
};

// One keygen, message and blinding vector per seed, all from that seed's rng.
// When `files` is set, the key pair and ciphertext are written there.
RoundtripStats Roundtrips(const std::string& label, const ntru::Params& params, int seeds,
                          const fs::path* files) {
  RoundtripStats s;
  s.label = label;
  for (int seed = 0; seed < seeds; ++seed) {
    ntru::Rng rng(static_cast<std::uint64_t>(seed));
    const ntru::KeyPair key = ntru::keygen(params, rng);
    const IntVector m = ntru::sample_plain_vector(params, rng);
    const IntVector r = ntru::sample_plain_vector(params, rng);
    const ntru::RoundtripReport report = ntru::roundtrip_check(key, m, r);
    ++s.keys;
    if (!report.wrap) {
      ++s.no_wrap;
      s.failures_without_wrap += !report.success;
    } else {
      s.failures_with_wrap += !report.success;
    }
    if (files) {
      const std::string stem = (*files / (label + "_" + std::to_string(seed))).string();
      io::write_file(stem + ".priv.json", io::private_key_to_json(key));
      io::write_file(stem + ".pub.json", io::public_key_to_json(key.public_key()));
      io::write_file(stem + ".ct.json", io::ciphertext_to_json(ntru::encrypt(key.public_key(), m, r)));
    }
  }
  return s;
}

// Keygen attempts for x^11 - 1 at q = 128 with the default retry budget.
struct CirculantAttempt {
  int seeds = 0, exhausted = 0;
  bool parity_obstruction = false;
  std::string first_error;
};

CirculantAttempt AttemptCirculant(const ntru::Params& params, int seeds) {
  CirculantAttempt out;
  // f(1) = 1 + p and phi(1) both even means x + 1 divides f and phi mod 2.
  BigInt phi1 = 0;
  for (const auto& c : params.context().phi().coefficients()) phi1 += c;
  out.parity_obstruction = (1 + params.p()) % 2 == 0 && phi1 % 2 == 0 && params.q() % 2 == 0;
  for (int seed = 0; seed < seeds; ++seed) {
    ++out.seeds;
    ntru::Rng rng(static_cast<std::uint64_t>(seed));
    try {
      ntru::keygen(params, rng);
    } catch (const Error& e) {
      if (e.code() == Errc::kMaxRetriesExceeded) ++out.exhausted;
      if (out.first_error.empty()) out.first_error = e.what();
    }
  }
  return out;
}

const std::vector<long long> kCirculant11 = AVector(11, {{0, 1}});

Verdict ScaleRoundtrip() {
  Verdict v;
  const ntru::Params circulant = ntru::params_validate({11, 128, 3, 4, kCirculant11});
  const CirculantAttempt attempt = AttemptCirculant(circulant, 10);
  const bool no_keys = attempt.exhausted == attempt.seeds;

  const ntru::Params trinomial = ntru::params_validate({11, 128, 3, 4, AVector(11, {{0, 1}, {1, 1}})});
  const ntru::Params top = ntru::params_validate({11, 128, 3, 4, AVector(11, {{0, 1}, {10, 1}})});
  const RoundtripStats s1 = Roundtrips("a=(1,1,0,...,0)", trinomial, 1000, nullptr);
  const RoundtripStats s2 = Roundtrips("a=(1,0,...,0,1)", top, 1000, nullptr);
  const ntru::Params even_top = ntru::params_validate({11, 128, 3, 4, AVector(11, {{0, 2}, {10, 1}})});
  const CirculantAttempt attempt_top = AttemptCirculant(even_top, 3);

  const ntru::Params substitute = ntru::params_validate({11, 127, 3, 4, kCirculant11});
  const RoundtripStats s3 = Roundtrips("circulant-q127", substitute, 1000, nullptr);

  const bool non_circulant_ok = s1.failures_without_wrap == 0 && s2.failures_without_wrap == 0;
  v.pass = !no_keys && non_circulant_ok;
  v.unattainable = no_keys && attempt.parity_obstruction && non_circulant_ok;
  v.detail = Format("x^11-1, q=128: %d/%d seeds exhausted 1000 keygen retries; "
                    "H*(f) is never invertible mod 2 because f(1) = 1+p = 4 and phi(1) = 0",
                    attempt.exhausted, attempt.seeds);
  for (const RoundtripStats* s : {&s1, &s2, &s3})
    v.info.push_back(Format("%s: %d roundtrips, no-wrap rate %.1f%%, failures without wrap %d, "
                            "failures with wrap %d",
                            s->label.c_str(), s->keys, 100.0 * s->no_wrap / s->keys,
                            s->failures_without_wrap, s->failures_with_wrap));
  v.info.push_back(Format("a=(2,0,...,0,1), q=128: %d/%d seeds exhausted keygen (phi(1) = -2 is even, same obstruction)",
                          attempt_top.exhausted, attempt_top.seeds));
  v.info.push_back(s3.no_wrap == s3.keys && s3.failures_without_wrap == 0
                       ? "x^11-1 at q=127 (odd modulus, same n, p, d_f): every roundtrip decrypts without wrap"
                       : "x^11-1 at q=127: some roundtrips wrapped or failed");
  return v;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Verdict Determinism() {
  Verdict v;
  const fs::path root = fs::temp_directory_path() / "phicyclic_acceptance";
  fs::remove_all(root);
  const fs::path run1 = root / "run1", run2 = root / "run2";
  fs::create_directories(run1);
  fs::create_directories(run2);
  const std::vector<std::pair<std::string, ntru::Params>> sets = {
      {"trinomial", ntru::params_validate({11, 128, 3, 4, AVector(11, {{0, 1}, {1, 1}})})},
      {"top", ntru::params_validate({11, 128, 3, 4, AVector(11, {{0, 1}, {10, 1}})})},
      {"circulant-q127", ntru::params_validate({11, 127, 3, 4, kCirculant11})}};
  for (const fs::path* dir : {&run1, &run2})
    for (const auto& [label, params] : sets) Roundtrips(label, params, 1000, dir);

  int files = 0, different = 0;
  for (const auto& entry : fs::directory_iterator(run1)) {
    ++files;
    const fs::path other = run2 / entry.path().filename();
    if (!fs::exists(other) || Slurp(entry.path()) != Slurp(other)) ++different;
  }
  const ntru::Params circulant = ntru::params_validate({11, 128, 3, 4, kCirculant11});
  const CirculantAttempt a = AttemptCirculant(circulant, 3), b = AttemptCirculant(circulant, 3);
  const bool same_failure = a.first_error == b.first_error && a.exhausted == b.exhausted;
  fs::remove_all(root);
  v.pass = files == 9000 && different == 0 && same_failure;
  v.detail = Format("%d key and ciphertext files written twice, %d differ; x^11-1 at q=128 "
                    "produces no files and fails identically on repeat",
                    files, different);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"ideal census", Census},
      {"shift closure", Closure},
      {"dimension and parity", DimensionAndParity},
      {"idempotents", Idempotents},
      {"three membership tests", Vandermonde},
      {"irreducible counts", IrreducibleCounts},
      {"ideal matrix identities", IdealIdentities},
      {"invertibility mod q", InvertibilityCriterion},
      {"lattice closure and membership", LatticeClosure},
      {"basis verification", HnfVerification},
      {"worked NTRU example", WorkedExample},
      {"NTRU roundtrip at scale", ScaleRoundtrip},
      {"determinism", Determinism},
  };
  int unexpected = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("threw: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %s  %s (%.1fs): %s%s\n", i + 1, v.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), secs, v.detail.c_str(),
                !v.pass && v.unattainable ? " [unattainable, obstruction confirmed]" : "");
    for (const auto& line : v.info) std::printf("    info: %s\n", line.c_str());
    std::fflush(stdout);
    if (!v.pass && !v.unattainable) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
