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

// Shared key material for tests: one seeded key set per parameter preset,
// generated on first use.

#ifndef ICHEETAH_TESTS_SUPPORT_FIXTURES_H_
#define ICHEETAH_TESTS_SUPPORT_FIXTURES_H_

#include <memory>
#include <string>

#include "icheetah/ckks/decryptor.h"
#include "icheetah/ckks/encoder.h"
#include "icheetah/ckks/encryptor.h"
#include "icheetah/ckks/evaluator.h"
#include "icheetah/ckks/keys.h"
#include "icheetah/ckks/serialization.h"
#include "icheetah/common/bytes.h"

namespace icheetah::testing {

struct Crypto {
  ckks::ContextPtr ctx;
  ckks::KeySet keys;
  ckks::Encoder encoder;
  ckks::Encryptor encryptor;
  ckks::Decryptor decryptor;
  ckks::Evaluator evaluator;

  Crypto(const ckks::CkksParams& params, std::uint64_t seed)
      : ctx(ckks::Context::Create(params)),
        keys(ckks::GenerateKeys(ctx, ckks::Prng::SeedFromU64(seed))),
        encoder(ctx),
        encryptor(ctx, keys.public_key),
        decryptor(ctx, keys.secret_key()),
        evaluator(ctx) {}

  ckks::Ciphertext Enc(double v, ckks::Prng& prng) const {
    return encryptor.Encrypt(
        encoder.EncodeScalar(v, ctx->max_level(), ctx->default_scale()), prng);
  }
  double Dec(const ckks::Ciphertext& ct) const { return decryptor.DecryptScalar(ct); }
};

inline const Crypto& DefaultCrypto() {
  static const Crypto* crypto = new Crypto(ckks::CkksParams::Default(), 1234);
  return *crypto;
}

inline const Crypto& ToyCrypto() {
  static const Crypto* crypto = new Crypto(ckks::CkksParams::ToyInsecure(), 99);
  return *crypto;
}

inline Bytes CiphertextBytes(const ckks::Ciphertext& ct) {
  ByteWriter w;
  ckks::WriteCiphertext(w, ct);
  return w.Take();
}

}  // namespace icheetah::testing

#endif  // ICHEETAH_TESTS_SUPPORT_FIXTURES_H_
