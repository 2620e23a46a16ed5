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

// Precomputed ciphertext tables: encryptions of radix powers, encryptions of
// pixel values, and the pool of encrypted zeros used for re-randomization.
// All tables are immutable once built and safe to share across threads.

#ifndef ICHEETAH_CACHE_CACHES_H_
#define ICHEETAH_CACHE_CACHES_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "icheetah/cache/strategy.h"
#include "icheetah/ckks/ciphertext.h"
#include "icheetah/ckks/encryptor.h"
#include "icheetah/ckks/prng.h"

namespace icheetah::cache {

inline constexpr int kPixelValues = 256;

// Base-r digits of p, least significant first; [0] for p = 0.
std::vector<int> RadixDecompose(int p, int radix);

// Number of powers r^0..r^k with r^k <= 255.
int RadixPowerCount(int radix);

struct RadixCache {
  int radix = 2;
  std::vector<ckks::Ciphertext> powers;  // Enc(r^i)
};

struct ValueCache {
  std::vector<std::optional<ckks::Ciphertext>> entries =
      std::vector<std::optional<ckks::Ciphertext>>(kPixelValues);

  bool contains(int p) const;
  const ckks::Ciphertext& at(int p) const;  // CacheMissError when absent
  std::vector<int> coverage() const;
  std::size_t size() const;
};

class ZeroPool {
 public:
  ZeroPool() = default;
  explicit ZeroPool(std::vector<ckks::Ciphertext> zeros);
  ZeroPool(const ZeroPool& other);
  ZeroPool& operator=(const ZeroPool& other);
  ZeroPool(ZeroPool&& other) noexcept;
  ZeroPool& operator=(ZeroPool&& other) noexcept;

  std::size_t size() const { return zeros_.size(); }
  bool empty() const { return zeros_.empty(); }
  const ckks::Ciphertext& element(std::size_t i) const { return zeros_.at(i); }
  const std::vector<ckks::Ciphertext>& elements() const { return zeros_; }

  // Uniform index with replacement; counts the draw. PoolError when empty.
  std::size_t DrawIndex(ckks::Prng& prng) const;
  // Copy of a uniformly drawn element.
  ckks::Ciphertext Draw(ckks::Prng& prng) const;
  std::uint64_t draw_count() const { return draws_.load(std::memory_order_relaxed); }

 private:
  std::vector<ckks::Ciphertext> zeros_;
  mutable std::atomic<std::uint64_t> draws_{0};
};

// Every builder derives one PRNG stream per table entry from `seed`, so the
// tables are identical for any worker count. Entries are encrypted
// symmetrically when `encryptor` holds the secret key, else under the public
// key.
RadixCache BuildRadixCache(const ckks::Encryptor& encryptor, int radix,
                           const ckks::Seed& seed, int workers = 1);
ValueCache BuildFullCache(const ckks::Encryptor& encryptor, const ckks::Seed& seed,
                          int workers = 1);
// Caches the values observed in `pixels` (the top_k most frequent when
// top_k > 0). DomainError when `pixels` is empty.
ValueCache BuildScanCache(std::span<const std::uint8_t> pixels,
                          const ckks::Encryptor& encryptor, const ckks::Seed& seed,
                          int workers = 1, int top_k = 0);
ZeroPool BuildZeroPool(const ckks::Encryptor& encryptor, std::size_t size,
                       const ckks::Seed& seed, int workers = 1);

// The tables one strategy needs.
struct PixelCache {
  CacheStrategy strategy;
  std::optional<RadixCache> radix;
  std::optional<ValueCache> values;
  std::optional<ZeroPool> pool;
};

// `pixels` is only read by the scan strategy.
PixelCache BuildPixelCache(const CacheStrategy& strategy,
                           const ckks::Encryptor& encryptor,
                           std::span<const std::uint8_t> pixels,
                           const ckks::Seed& seed, int workers = 1);

}  // namespace icheetah::cache

#endif  // ICHEETAH_CACHE_CACHES_H_
