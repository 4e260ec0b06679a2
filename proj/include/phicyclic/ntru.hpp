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

#ifndef PHICYCLIC_NTRU_HPP_
#define PHICYCLIC_NTRU_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "phicyclic/idealmat.hpp"
#include "phicyclic/types.hpp"

namespace phicyclic::ntru {

struct ParamsCandidate {
  std::int64_t n = 0;
  std::int64_t q = 0;
  std::int64_t p = 0;
  std::int64_t df = 0;
  std::vector<long long> a;
};

// Every violated requirement, in a fixed order; empty when valid.
std::vector<std::string> params_violations(const ParamsCandidate& candidate);

class Params {
 public:
  int n() const { return static_cast<int>(candidate_.n); }
  const BigInt& q() const { return q_; }
  const BigInt& p() const { return p_; }
  int df() const { return static_cast<int>(candidate_.df); }
  const std::vector<long long>& a() const { return candidate_.a; }
  const IntPhiContext& context() const { return ctx_; }
  const ParamsCandidate& candidate() const { return candidate_; }

 private:
  friend Params params_validate(const ParamsCandidate& candidate);
  explicit Params(const ParamsCandidate& c);

  ParamsCandidate candidate_;
  BigInt q_;
  BigInt p_;
  IntPhiContext ctx_;
};

// Throws kInvalidParams whose details list every violation.
Params params_validate(const ParamsCandidate& candidate);

// Deterministic sampler: std::mt19937_64 seeded with the 64-bit seed.
// uniform(k) draws x from the engine, rejects x >= 2^64 - (2^64 mod k) and
// returns x mod k.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t uniform(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Positions 0..length-1 minus zero_positions, ascending, are shuffled by
// Fisher-Yates (i from last down to 1, j = uniform(i + 1), swap); the first
// count_pos get +scale and the next count_neg get -scale.
// Throws kInfeasible when the counts do not fit.
IntVector sample_ternary(int count_pos, int count_neg, int length, const BigInt& scale, Rng& rng,
                         const std::vector<int>& zero_positions = {});

struct PublicKey {
  Params params;
  IntVector h;  // entries in [0, q)
};

struct KeyPair {
  Params params;
  IntVector f;
  IntVector g;
  IntVector h;

  PublicKey public_key() const { return {params, h}; }
  // Row basis [[I, H*(h)^T], [0, qI]].
  IntMatrix N() const;
};

inline constexpr int kDefaultMaxRetries = 1000;

// f = e_1 + sample_ternary(df + 1, df, n, p, rng, {0}), redrawn until
// H*(f) is invertible mod q; then g = sample_ternary(df + 1, df, n, p, rng).
// Throws kMaxRetriesExceeded.
KeyPair keygen(const Params& params, Rng& rng, int max_retries = kDefaultMaxRetries);

// Key pair for given f and g. Throws kBadShape or kNotInvertibleModQ.
KeyPair keypair_from(const Params& params, const IntVector& f, const IntVector& g);

struct Ciphertext {
  int n = 0;
  BigInt q;
  IntVector c;  // entries in [0, q)
};

// Throws kBadShape unless v is in {-1,0,1}^n with df + 1 ones and df minus ones.
void check_plain_vector(const Params& params, const IntVector& v, const std::string& name);
// Message or blinding vector drawn from rng.
IntVector sample_plain_vector(const Params& params, Rng& rng);

// c = m + H*(h) r mod q.
Ciphertext encrypt(const PublicKey& key, const IntVector& m, const IntVector& r);

struct Decryption {
  IntVector m;              // centered mod p in (-p/2, p/2]
  IntVector pre_reduction;  // H*(f) c centered mod q in [-q/2, q/2)
  BigInt max_abs;           // largest |entry| of pre_reduction
  bool shape_ok = false;    // m passes check_plain_vector
};

Decryption decrypt_with_trace(const KeyPair& key, const Ciphertext& ct);
IntVector decrypt(const KeyPair& key, const Ciphertext& ct);

struct RoundtripReport {
  IntVector exact;     // H*(f) m + H*(g) r, no reduction
  BigInt max_abs;
  BigInt q;            // the bound is q / 2
  bool wrap = false;   // some entry of `exact` outside [-q/2, q/2)
  bool success = false;
  double bound() const { return q.convert_to<double>() / 2.0; }
};

RoundtripReport roundtrip_check(const KeyPair& key, const IntVector& m, const IntVector& r);

}  // namespace phicyclic::ntru

#endif  // PHICYCLIC_NTRU_HPP_
