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

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "phicyclic/errors.hpp"
#include "phicyclic/field.hpp"
#include "phicyclic/idealmat.hpp"
#include "phicyclic/io.hpp"
#include "phicyclic/linalg.hpp"
#include "phicyclic/ntru.hpp"
#include "phicyclic/phicode.hpp"
#include "phicyclic/polyring.hpp"
#include "phicyclic/qlattice.hpp"

namespace {

using phicyclic::BigInt;
using phicyclic::Errc;
using phicyclic::Field;
using phicyclic::FieldElement;
using phicyclic::IntMatrix;
using phicyclic::IntVector;
using phicyclic::io::Json;
namespace io = phicyclic::io;
namespace ntru = phicyclic::ntru;

// F_q for a prime power q; extensions use the first monic irreducible
// polynomial of the right degree in enumeration order.
Field field_of_order(std::int64_t q) {
  if (q < 2) phicyclic::fail(Errc::kInvalidArgument, "q must be a prime power");
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) phicyclic::fail(Errc::kInvalidArgument, std::to_string(q) + " is not a prime power");
  const Field base = Field::prime(p);
  if (e == 1) return base;
  for (const auto& m : phicyclic::monic_polynomials(base, e))
    if (phicyclic::is_irreducible(m)) return Field::extension(base, m);
  phicyclic::fail(Errc::kInternalMismatch, "no irreducible polynomial found");
}

std::vector<long long> to_longs(const IntVector& v) {
  std::vector<long long> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) > std::numeric_limits<long long>::max() || v(i) < std::numeric_limits<long long>::min())
      phicyclic::fail(Errc::kParseError, "entry out of range");
    out.push_back(v(i).convert_to<long long>());
  }
  return out;
}

Json coefficient_codes(const phicyclic::FieldPolynomial& g) {
  Json out = Json::array();
  for (const auto& c : g.coefficients()) out.push_back(c.code());
  return out;
}

void code_analyze(std::int64_t q, const std::string& a_text, bool as_json, std::int64_t bound) {
  const Field field = field_of_order(q);
  std::vector<FieldElement> a;
  for (long long v : to_longs(io::parse_vector(a_text))) {
    if (field.order() == field.characteristic()) {
      a.push_back(field.from_int(v));
    } else {
      if (v < 0 || v >= field.order())
        phicyclic::fail(Errc::kInvalidArgument, "extension field entries are codes in [0, q)");
      a.push_back(field.element(v));
    }
  }
  const phicyclic::PhiContext ctx(field, a);
  const auto codes = phicyclic::enumerate_codes(ctx, bound);

  Json report{{"q", q}, {"n", ctx.n()}, {"phi", ctx.phi().to_string()},
              {"separable", phicyclic::is_separable(ctx.phi())},
              {"count", codes.size()}, {"codes", Json::array()}};
  for (const auto& code : codes) {
    Json entry{{"g", code.g().to_string()},
               {"g_coefficients", coefficient_codes(code.g())},
               {"k", code.k()},
               {"parity_source", phicyclic::parity_source_name(code.parity_source())},
               {"min_distance", nullptr}};
    try {
      entry["min_distance"] = phicyclic::min_distance(code, bound);
    } catch (const phicyclic::Error& e) {
      if (e.code() != Errc::kTrivialCode && e.code() != Errc::kTooLarge) throw;
    }
    report["codes"].push_back(entry);
  }
  if (as_json) {
    std::cout << io::dump(report);
    return;
  }
  std::cout << "phi = " << report["phi"].get<std::string>() << " over " << field.description()
            << "\ncodes: " << codes.size() << "\n";
  for (const auto& entry : report["codes"]) {
    std::cout << "  g = " << entry["g"].get<std::string>() << "  k = " << entry["k"]
              << "  d = " << (entry["min_distance"].is_null() ? "-" : entry["min_distance"].dump())
              << "  parity = " << entry["parity_source"].get<std::string>() << "\n";
  }
}

struct KeygenArgs {
  std::int64_t n = 0, q = 0, p = 0, df = 0;
  std::string a;
  std::uint64_t seed = 0;
  std::string out_priv, out_pub;
};

void ntru_keygen(const KeygenArgs& args) {
  const ntru::Params params =
      ntru::params_validate({args.n, args.q, args.p, args.df, to_longs(io::parse_vector(args.a))});
  ntru::Rng rng(args.seed);
  const ntru::KeyPair key = ntru::keygen(params, rng);
  io::write_file(args.out_priv, io::private_key_to_json(key));
  if (!args.out_pub.empty()) io::write_file(args.out_pub, io::public_key_to_json(key.public_key()));
}

struct EncryptArgs {
  std::string pub, m, r, out;
  std::optional<std::uint64_t> seed;
};

void ntru_encrypt(const EncryptArgs& args) {
  const ntru::PublicKey key = io::public_key_from_json(io::read_file(args.pub));
  const IntVector m = io::parse_vector(args.m);
  IntVector r;
  if (!args.r.empty()) {
    r = io::parse_vector(args.r);
  } else {
    ntru::Rng rng(*args.seed);
    r = ntru::sample_plain_vector(key.params, rng);
  }
  const Json doc = io::ciphertext_to_json(ntru::encrypt(key, m, r));
  if (args.out.empty()) {
    std::cout << io::dump(doc);
  } else {
    io::write_file(args.out, doc);
  }
}

void ntru_decrypt(const std::string& priv, const std::string& ct_path) {
  const ntru::KeyPair key = io::private_key_from_json(io::read_file(priv));
  const ntru::Ciphertext ct = io::ciphertext_from_json(io::read_file(ct_path));
  if (ct.n != key.params.n() || ct.q != key.params.q())
    phicyclic::fail(Errc::kParseError, "ciphertext parameters do not match the key");
  const ntru::Decryption d = ntru::decrypt_with_trace(key, ct);
  const Json out{{"m", io::vector_to_json(d.m)},
                 {"pre_reduction", io::vector_to_json(d.pre_reduction)},
                 {"margin", io::int_to_json(d.max_abs)},
                 {"bound", key.params.q().convert_to<double>() / 2.0},
                 {"shape_ok", d.shape_ok}};
  std::cout << io::dump(out);
  if (!d.shape_ok)
    std::cerr << "warning: decrypted vector has the wrong support counts; "
                 "wrong key or corrupted ciphertext\n";
}

void lattice_check(const std::string& key_path, const std::string& vector_text) {
  const Json doc = io::read_file(key_path);
  const IntVector y = io::parse_vector(vector_text);
  Json out;
  if (doc.is_object() && doc.contains("type") && doc["type"] == "ntru-private-key") {
    const ntru::KeyPair key = io::private_key_from_json(doc);
    const auto lat = phicyclic::build_lattice(key.params.context(), key.f, key.g, key.params.q());
    out = Json{{"member", phicyclic::lat_member(lat, y)}, {"path", "private"}};
  } else {
    const ntru::PublicKey key = io::public_key_from_json(doc);
    out = Json{{"member", phicyclic::lat_member_public(key.params.context(), key.h,
                                                      key.params.q(), y)},
               {"path", "public"}};
  }
  std::cout << io::dump(out);
}

void idealmat(const std::string& a_text, const std::string& f_text, std::optional<std::int64_t> q) {
  const phicyclic::IntPhiContext ctx(io::parse_vector(a_text));
  const IntVector f = io::parse_vector(f_text);
  Json out{{"matrix", io::matrix_to_json(phicyclic::ideal_matrix(ctx, f))},
           {"det", io::int_to_json(phicyclic::idealmat_det(ctx, f))}};
  if (q) {
    try {
      const IntMatrix k = phicyclic::idealmat_inverse_mod(ctx, f, *q);
      out["q"] = *q;
      out["invertible_mod_q"] = true;
      out["inverse_mod_q"] = io::matrix_to_json(k);
    } catch (const phicyclic::Error& e) {
      if (e.code() != Errc::kNotInvertibleModQ) throw;
      out["q"] = *q;
      out["invertible_mod_q"] = false;
    }
  }
  std::cout << io::dump(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phi-cyclic codes, ideal matrices and generalized NTRU"};
  app.require_subcommand(1);
  std::function<void()> action;

  auto* code = app.add_subcommand("code", "phi-cyclic codes");
  code->require_subcommand(1);
  auto* analyze = code->add_subcommand("analyze", "list every phi-cyclic code of a context");
  std::int64_t code_q = 0, code_bound = phicyclic::kDefaultSearchBound;
  std::string code_a;
  bool code_json = false;
  analyze->add_option("--q", code_q, "field order (prime power)")->required();
  analyze->add_option("--a", code_a, "a_0,...,a_{n-1}")->required();
  analyze->add_flag("--json", code_json, "emit JSON");
  analyze->add_option("--bound", code_bound, "search bound for divisors and distances");
  analyze->callback([&] { action = [&] { code_analyze(code_q, code_a, code_json, code_bound); }; });

  auto* nt = app.add_subcommand("ntru", "generalized NTRU");
  nt->require_subcommand(1);
  KeygenArgs kg;
  auto* keygen = nt->add_subcommand("keygen", "generate a key pair");
  keygen->add_option("--n", kg.n)->required();
  keygen->add_option("--q", kg.q)->required();
  keygen->add_option("--p", kg.p)->required();
  keygen->add_option("--df", kg.df)->required();
  keygen->add_option("--a", kg.a, "a_0,...,a_{n-1}")->required();
  keygen->add_option("--seed", kg.seed, "64-bit unsigned seed")->required();
  keygen->add_option("--out-priv", kg.out_priv)->required();
  keygen->add_option("--out-pub", kg.out_pub);
  keygen->callback([&] { action = [&] { ntru_keygen(kg); }; });

  EncryptArgs enc;
  auto* encrypt = nt->add_subcommand("encrypt", "encrypt a ternary message");
  encrypt->add_option("--pub", enc.pub, "public or private key file")->required();
  encrypt->add_option("--m", enc.m, "message as a JSON array")->required();
  auto* r_opt = encrypt->add_option("--r", enc.r, "blinding vector as a JSON array");
  auto* seed_opt = encrypt->add_option("--seed", enc.seed, "draw r from this seed");
  r_opt->excludes(seed_opt);
  encrypt->add_option("--out", enc.out, "ciphertext file (default: stdout)");
  encrypt->callback([&] {
    if (enc.r.empty() && !enc.seed) throw CLI::RequiredError("--r or --seed");
    action = [&] { ntru_encrypt(enc); };
  });

  std::string dec_priv, dec_ct;
  auto* decrypt = nt->add_subcommand("decrypt", "decrypt and report the margin");
  decrypt->add_option("--priv", dec_priv)->required();
  decrypt->add_option("--ct", dec_ct)->required();
  decrypt->callback([&] { action = [&] { ntru_decrypt(dec_priv, dec_ct); }; });

  auto* lattice = app.add_subcommand("lattice", "q-ary lattice queries");
  lattice->require_subcommand(1);
  std::string lat_key, lat_vec;
  auto* check = lattice->add_subcommand("check", "lattice membership of a vector");
  check->add_option("--key", lat_key, "public or private key file")->required();
  check->add_option("--vector", lat_vec, "vector of length 2n")->required();
  check->callback([&] { action = [&] { lattice_check(lat_key, lat_vec); }; });

  std::string im_a, im_f;
  std::optional<std::int64_t> im_q;
  auto* im = app.add_subcommand("idealmat", "ideal matrix, determinant and inverse");
  im->add_option("--a", im_a)->required();
  im->add_option("--f", im_f)->required();
  im->add_option("--q", im_q);
  im->callback([&] { action = [&] { idealmat(im_a, im_f, im_q); }; });

  CLI11_PARSE(app, argc, argv);
  try {
    action();
  } catch (const phicyclic::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& d : e.details()) std::cerr << "  - " << d << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
