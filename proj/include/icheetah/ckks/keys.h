/*
 * Copyright 2026 The icheetah Authors.
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

#ifndef ICHEETAH_CKKS_KEYS_H_
#define ICHEETAH_CKKS_KEYS_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "icheetah/ckks/context.h"
#include "icheetah/ckks/poly.h"
#include "icheetah/ckks/prng.h"

namespace icheetah::ckks {

struct SecretKey {
  std::vector<std::int8_t> coeffs;  // ternary
  Poly ntt;                         // s, full level, NTT form
  Poly square_ntt;                  // s^2, full level, NTT form
  Poly square;                      // s^2, full level, coefficient form

  // Rebuilds the derived polynomials from `coeffs`.
  static SecretKey FromTernary(const Context& ctx, std::vector<std::int8_t> coeffs);
  int hamming_weight() const;
};

// pk = (-a*s + e, a), held in NTT form with Shoup companions for the fixed
// multiplicands used by every encryption.
struct PublicKey {
  Poly p0;
  Poly p1;
  std::vector<std::uint64_t> p0_shoup;
  std::vector<std::uint64_t> p1_shoup;
  // SHA-256 over the serialized public key file.
  Digest fingerprint{};

  static PublicKey FromNtt(const Context& ctx, Poly p0_ntt, Poly p1_ntt);
};

// evk_j = (-a_j*s + e_j + 2^(16j) * s^2, a_j), NTT form, one pair per digit.
struct RelinKey {
  std::vector<std::pair<Poly, Poly>> digits;
  Digest params_digest{};
};

struct KeySet {
  ContextPtr context;
  std::optional<SecretKey> secret;
  PublicKey public_key;
  std::optional<RelinKey> relin;
  std::optional<Seed> seed;

  const SecretKey& secret_key() const;
  const RelinKey& relin_key() const;
  const Digest& fingerprint() const { return public_key.fingerprint; }
};

// Deterministic when `seed` is given; otherwise seeded from OS entropy (the
// seed used is recorded in the result either way).
KeySet GenerateKeys(const ContextPtr& context, std::optional<Seed> seed = {});

}  // namespace icheetah::ckks

#endif  // ICHEETAH_CKKS_KEYS_H_
