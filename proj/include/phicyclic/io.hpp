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

#ifndef PHICYCLIC_IO_HPP_
#define PHICYCLIC_IO_HPP_

#include <string>

#include <json.hpp>

#include "phicyclic/ntru.hpp"
#include "phicyclic/types.hpp"

// JSON documents for keys and ciphertexts. Every document carries
// "version": 1 and a "type" tag. Integers within +-(2^53 - 1) are JSON
// numbers; larger ones are decimal strings. All failures are kParseError.
namespace phicyclic::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

Json int_to_json(const BigInt& v);
BigInt int_from_json(const Json& j);
Json vector_to_json(const IntVector& v);
IntVector vector_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& m);

Json params_to_json(const ntru::Params& params);
ntru::Params params_from_json(const Json& j);

Json private_key_to_json(const ntru::KeyPair& key);
// Rebuilds the key from f and g and checks the stored h against it.
ntru::KeyPair private_key_from_json(const Json& j);

Json public_key_to_json(const ntru::PublicKey& key);
// Accepts public and private key documents.
ntru::PublicKey public_key_from_json(const Json& j);

Json ciphertext_to_json(const ntru::Ciphertext& ct);
ntru::Ciphertext ciphertext_from_json(const Json& j);

// Two-space indentation and a trailing newline.
std::string dump(const Json& j);
Json parse(const std::string& text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

// "[1,-2,3]" as JSON, or a bare comma-separated list "1,-2,3".
IntVector parse_vector(const std::string& text);

}  // namespace phicyclic::io

#endif  // PHICYCLIC_IO_HPP_
