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

#ifndef ICHEETAH_CACHE_PIXEL_ENCRYPTOR_H_
#define ICHEETAH_CACHE_PIXEL_ENCRYPTOR_H_

#include <cstdint>
#include <span>

#include "icheetah/cache/caches.h"
#include "icheetah/ckks/encoder.h"
#include "icheetah/ckks/encryptor.h"
#include "icheetah/ckks/evaluator.h"

namespace icheetah::cache {

// For each i >= 1 with coins[i - 1] set: ct <- ct + powers[i], then subtract
// powers[i - 1] r times. The plaintext is unchanged since r^i - r * r^(i-1) = 0.
void ApplyRadixIdentities(const ckks::Evaluator& evaluator, const RadixCache& cache,
                          std::span<const std::uint8_t> coins, ckks::Ciphertext& ct);

// Same, with each coin an independent fair bit from `prng`.
// UnsupportedError for a single-power cache.
ckks::Ciphertext RandomizeRadix(const ckks::Evaluator& evaluator,
                                const ckks::Ciphertext& ct, const RadixCache& cache,
                                ckks::Prng& prng);

// Sum of digit_j copies of powers[j]; level-neutral.
ckks::Ciphertext ComposeRadix(const ckks::Evaluator& evaluator, const RadixCache& cache,
                              int p);

// Per-pixel encryption under one caching strategy. Holds references to the
// cache and keys, which must outlive it. Thread-safe given one PRNG per thread.
class PixelEncryptor {
 public:
  PixelEncryptor(const ckks::Encryptor& encryptor, const PixelCache& cache);

  ckks::Ciphertext Encrypt(int p, ckks::Prng& prng) const;

  // Adds the configured number of (optionally monomial-rotated) pool zeros.
  void AddPoolZeros(ckks::Ciphertext& ct, ckks::Prng& prng) const;

  const PixelCache& cache() const { return *cache_; }
  const CacheStrategy& strategy() const { return cache_->strategy; }
  const ckks::Encryptor& encryptor() const { return *encryptor_; }

 private:
  ckks::Ciphertext EncryptFresh(int p, ckks::Prng& prng) const;

  const ckks::Encryptor* encryptor_;
  const PixelCache* cache_;
  ckks::Encoder encoder_;
  ckks::Evaluator evaluator_;
};

}  // namespace icheetah::cache

#endif  // ICHEETAH_CACHE_PIXEL_ENCRYPTOR_H_
