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

#ifndef ICHEETAH_CKKS_DECRYPTOR_H_
#define ICHEETAH_CKKS_DECRYPTOR_H_

#include "icheetah/ckks/ciphertext.h"
#include "icheetah/ckks/context.h"
#include "icheetah/ckks/keys.h"

namespace icheetah::ckks {

class Decryptor {
 public:
  Decryptor(ContextPtr context, const SecretKey& secret_key);

  // m + e' = c0 + c1*s (+ c2*s^2 for a degree-2 ciphertext).
  Plaintext Decrypt(const Ciphertext& ct) const;

  // Coefficient 0 of c0 + c1*s (+ c2*s^2), lifted to (-Q/2, Q/2]. O(N) per
  // limb: no transforms. This is the slot-average view of the plaintext, so
  // it decodes scalar encodings exactly.
  i128 DecryptConstantCoefficient(const Ciphertext& ct) const;
  double DecryptScalar(const Ciphertext& ct) const;

 private:
  void CheckCiphertext(const Ciphertext& ct) const;

  ContextPtr context_;
  const SecretKey* secret_key_;
};

}  // namespace icheetah::ckks

#endif  // ICHEETAH_CKKS_DECRYPTOR_H_
