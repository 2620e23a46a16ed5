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

#ifndef ICHEETAH_CKKS_ENCRYPTOR_H_
#define ICHEETAH_CKKS_ENCRYPTOR_H_

#include "icheetah/ckks/ciphertext.h"
#include "icheetah/ckks/context.h"
#include "icheetah/ckks/keys.h"
#include "icheetah/ckks/prng.h"
#include "icheetah/ckks/sampling.h"

namespace icheetah::ckks {

// Public-key encryption: ct = (v*pk0 + m + e0, v*pk1 + e1) with ternary v
// and Gaussian e0, e1. When constructed with the secret key it also offers
// symmetric encryption ct = (-a*s + m + e, a), whose noise is e alone. Const
// and thread-safe; randomness comes from the caller's Prng.
class Encryptor {
 public:
  Encryptor(ContextPtr context, const PublicKey& public_key);
  Encryptor(ContextPtr context, const PublicKey& public_key, const SecretKey& secret_key);

  Ciphertext Encrypt(const Plaintext& pt, Prng& prng) const;
  Ciphertext EncryptZero(int level, double scale, Prng& prng) const;
  // KeyMismatchError without a secret key.
  Ciphertext EncryptSymmetric(const Plaintext& pt, Prng& prng) const;
  bool has_secret_key() const { return secret_key_ != nullptr; }

  const Context& context() const { return *context_; }
  const ContextPtr& context_ptr() const { return context_; }
  const PublicKey& public_key() const { return *public_key_; }

 private:
  ContextPtr context_;
  const PublicKey* public_key_;
  const SecretKey* secret_key_ = nullptr;
  GaussianSampler gaussian_;
};

}  // namespace icheetah::ckks

#endif  // ICHEETAH_CKKS_ENCRYPTOR_H_
