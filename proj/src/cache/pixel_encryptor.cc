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

#include "icheetah/cache/pixel_encryptor.h"

#include <string>
#include <vector>

#include "icheetah/common/error.h"

namespace icheetah::cache {

void ApplyRadixIdentities(const ckks::Evaluator& evaluator, const RadixCache& cache,
                          std::span<const std::uint8_t> coins, ckks::Ciphertext& ct) {
  if (cache.powers.size() < 2) {
    throw UnsupportedError("radix randomization needs at least two cached powers");
  }
  if (coins.size() + 1 != cache.powers.size()) {
    throw DimensionError("one coin per radix power above r^0 is required");
  }
  for (std::size_t i = 1; i < cache.powers.size(); ++i) {
    if (!coins[i - 1]) continue;
    evaluator.AddInPlace(ct, cache.powers[i]);
    for (int t = 0; t < cache.radix; ++t) evaluator.SubInPlace(ct, cache.powers[i - 1]);
  }
}

ckks::Ciphertext RandomizeRadix(const ckks::Evaluator& evaluator,
                                const ckks::Ciphertext& ct, const RadixCache& cache,
                                ckks::Prng& prng) {
  if (cache.powers.size() < 2) {
    throw UnsupportedError("radix randomization needs at least two cached powers");
  }
  std::vector<std::uint8_t> coins(cache.powers.size() - 1);
  for (auto& c : coins) c = prng.NextBit() ? 1 : 0;
  ckks::Ciphertext out = ct;
  ApplyRadixIdentities(evaluator, cache, coins, out);
  return out;
}

ckks::Ciphertext ComposeRadix(const ckks::Evaluator& evaluator, const RadixCache& cache,
                              int p) {
  const std::vector<int> digits = RadixDecompose(p, cache.radix);
  if (digits.size() > cache.powers.size()) {
    throw DimensionError("radix cache has too few powers for " + std::to_string(p));
  }
  std::optional<ckks::Ciphertext> acc;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    for (int d = 0; d < digits[j]; ++d) {
      if (acc) {
        evaluator.AddInPlace(*acc, cache.powers[j]);
      } else {
        acc = cache.powers[j];
      }
    }
  }
  if (!acc) {
    // p = 0: the zero ciphertext Enc(1) - Enc(1).
    acc = evaluator.Sub(cache.powers[0], cache.powers[0]);
  }
  return std::move(*acc);
}

PixelEncryptor::PixelEncryptor(const ckks::Encryptor& encryptor, const PixelCache& cache)
    : encryptor_(&encryptor),
      cache_(&cache),
      encoder_(encryptor.context_ptr()),
      evaluator_(encryptor.context_ptr()) {
  const CacheStrategy& s = cache.strategy;
  s.Validate();
  switch (s.tag) {
    case StrategyTag::kNone:
      break;
    case StrategyTag::kRadix:
      if (!cache.radix) throw ParameterError("radix strategy needs a radix cache");
      if (cache.radix->radix != s.radix) throw ParameterError("radix cache built for another radix");
      break;
    case StrategyTag::kScan:
    case StrategyTag::kFull:
      if (!cache.values) throw ParameterError("value strategy needs a value cache");
      break;
  }
  if (s.uses_pool() && (!cache.pool || cache.pool->empty())) {
    throw PoolError("strategy needs a non-empty zero pool");
  }
}

ckks::Ciphertext PixelEncryptor::EncryptFresh(int p, ckks::Prng& prng) const {
  const ckks::Context& ctx = encryptor_->context();
  return encryptor_->Encrypt(
      encoder_.EncodeScalar(static_cast<double>(p), ctx.max_level(), ctx.default_scale()),
      prng);
}

void PixelEncryptor::AddPoolZeros(ckks::Ciphertext& ct, ckks::Prng& prng) const {
  const CacheStrategy& s = cache_->strategy;
  const ZeroPool& pool = *cache_->pool;
  const std::size_t two_n = 2 * encryptor_->context().ring_degree();
  for (int d = 0; d < s.zero_draws; ++d) {
    const ckks::Ciphertext& z = pool.element(pool.DrawIndex(prng));
    if (s.rotate_zeros) {
      evaluator_.AddMonomialProductInPlace(ct, z, prng.UniformBelow(two_n));
    } else {
      evaluator_.AddInPlace(ct, z);
    }
  }
}

ckks::Ciphertext PixelEncryptor::Encrypt(int p, ckks::Prng& prng) const {
  if (p < 0 || p > 255) throw DomainError("pixel value " + std::to_string(p) + " outside [0, 255]");
  const CacheStrategy& s = cache_->strategy;
  switch (s.tag) {
    case StrategyTag::kNone:
      return EncryptFresh(p, prng);
    case StrategyTag::kRadix: {
      ckks::Ciphertext ct = ComposeRadix(evaluator_, *cache_->radix, p);
      if (s.randomness) {
        if (cache_->radix->powers.size() >= 2) {
          ct = RandomizeRadix(evaluator_, ct, *cache_->radix, prng);
        }
        if (s.radix_zero_pool) AddPoolZeros(ct, prng);
      }
      return ct;
    }
    case StrategyTag::kScan:
    case StrategyTag::kFull: {
      if (!cache_->values->contains(p)) {
        if (s.tag == StrategyTag::kScan && s.fallback_fresh) return EncryptFresh(p, prng);
        throw CacheMissError("pixel value " + std::to_string(p) + " is not in the cache");
      }
      ckks::Ciphertext ct = cache_->values->at(p);
      if (s.randomness) AddPoolZeros(ct, prng);
      return ct;
    }
  }
  throw ParameterError("unknown strategy");
}

}  // namespace icheetah::cache
