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

#include "phicyclic/io.hpp"

#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "phicyclic/errors.hpp"

namespace phicyclic::io {

namespace {

constexpr std::int64_t kMaxExact = (std::int64_t{1} << 53) - 1;

[[noreturn]] void parse_fail(const std::string& message) { fail(Errc::kParseError, message); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_fail(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

void check_header(const Json& j, const std::string& type) {
  if (!j.is_object()) parse_fail("document is not a JSON object");
  const Json& version = field(j, "version");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    parse_fail("unsupported format version");
  const Json& t = field(j, "type");
  if (!t.is_string() || t.get<std::string>() != type)
    parse_fail("expected a document of type \"" + type + "\"");
}

std::int64_t small_int(const Json& j, const char* name) {
  const BigInt v = int_from_json(field(j, name));
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    parse_fail(std::string("\"") + name + "\" out of range");
  return v.convert_to<std::int64_t>();
}

void check_residues(const IntVector& v, int n, const BigInt& q, const std::string& name) {
  if (v.size() != n) parse_fail("\"" + name + "\" must have length " + std::to_string(n));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) < 0 || v(i) >= q) parse_fail("\"" + name + "\" entries must lie in [0, q)");
}

template <typename T>
T guarded(const std::function<T()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.code() == Errc::kParseError) throw;
    parse_fail(e.what());
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
}

}  // namespace

Json int_to_json(const BigInt& v) {
  if (v >= -kMaxExact && v <= kMaxExact) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

BigInt int_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      parse_fail("\"" + s + "\" is not a decimal integer");
    return BigInt(s);
  }
  parse_fail("expected an integer, got " + j.dump());
}

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(int_to_json(v(i)));
  return out;
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("expected an array, got " + j.dump());
  IntVector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = int_from_json(j[i]);
  return v;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i).transpose()));
  return out;
}

Json params_to_json(const ntru::Params& params) {
  const auto& c = params.candidate();
  Json a = Json::array();
  for (long long v : c.a) a.push_back(int_to_json(v));
  return Json{{"n", c.n}, {"q", c.q}, {"p", c.p}, {"df", c.df}, {"a", a}};
}

ntru::Params params_from_json(const Json& j) {
  return guarded<ntru::Params>([&] {
    ntru::ParamsCandidate c;
    c.n = small_int(j, "n");
    c.q = small_int(j, "q");
    c.p = small_int(j, "p");
    c.df = small_int(j, "df");
    const IntVector a = vector_from_json(field(j, "a"));
    for (Eigen::Index i = 0; i < a.size(); ++i) c.a.push_back(a(i).convert_to<long long>());
    return ntru::params_validate(c);
  });
}

Json private_key_to_json(const ntru::KeyPair& key) {
  return Json{{"version", kFormatVersion},
              {"type", "ntru-private-key"},
              {"params", params_to_json(key.params)},
              {"public", {{"h", vector_to_json(key.h)}}},
              {"private", {{"f", vector_to_json(key.f)}, {"g", vector_to_json(key.g)}}}};
}

ntru::KeyPair private_key_from_json(const Json& j) {
  check_header(j, "ntru-private-key");
  return guarded<ntru::KeyPair>([&] {
    const ntru::Params params = params_from_json(field(j, "params"));
    const Json& priv = field(j, "private");
    ntru::KeyPair key = ntru::keypair_from(params, vector_from_json(field(priv, "f")),
                                           vector_from_json(field(priv, "g")));
    const IntVector h = vector_from_json(field(field(j, "public"), "h"));
    if (!matrices_equal(h, key.h)) parse_fail("stored h does not match f and g");
    return key;
  });
}

Json public_key_to_json(const ntru::PublicKey& key) {
  return Json{{"version", kFormatVersion},
              {"type", "ntru-public-key"},
              {"params", params_to_json(key.params)},
              {"public", {{"h", vector_to_json(key.h)}}}};
}

ntru::PublicKey public_key_from_json(const Json& j) {
  if (j.is_object() && j.contains("type") && j["type"] == "ntru-private-key")
    return private_key_from_json(j).public_key();
  check_header(j, "ntru-public-key");
  return guarded<ntru::PublicKey>([&] {
    const ntru::Params params = params_from_json(field(j, "params"));
    const IntVector h = vector_from_json(field(field(j, "public"), "h"));
    check_residues(h, params.n(), params.q(), "h");
    return ntru::PublicKey{params, h};
  });
}

Json ciphertext_to_json(const ntru::Ciphertext& ct) {
  return Json{{"version", kFormatVersion},
              {"type", "ntru-ciphertext"},
              {"n", ct.n},
              {"q", int_to_json(ct.q)},
              {"c", vector_to_json(ct.c)}};
}

ntru::Ciphertext ciphertext_from_json(const Json& j) {
  check_header(j, "ntru-ciphertext");
  return guarded<ntru::Ciphertext>([&] {
    ntru::Ciphertext ct;
    ct.n = static_cast<int>(small_int(j, "n"));
    ct.q = int_from_json(field(j, "q"));
    if (ct.n < 1 || ct.q < 2) parse_fail("invalid n or q");
    ct.c = vector_from_json(field(j, "c"));
    check_residues(ct.c, ct.n, ct.q, "c");
    return ct;
  });
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::kInvalidArgument, "cannot write " + path);
  out << dump(j);
  if (!out) fail(Errc::kInvalidArgument, "write to " + path + " failed");
}

IntVector parse_vector(const std::string& text) {
  const size_t first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') return vector_from_json(parse(text));
  return vector_from_json(parse("[" + text + "]"));
}

}  // namespace phicyclic::io
