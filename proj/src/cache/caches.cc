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

#include "icheetah/cache/caches.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "icheetah/ckks/encoder.h"
#include "icheetah/common/error.h"
#include "icheetah/common/parallel.h"

namespace icheetah::cache {

namespace {

constexpr std::uint64_t kRadixStream = 0x100;
constexpr std::uint64_t kValueStream = 0x1000;
constexpr std::uint64_t kPoolStream = 0x100000;

ckks::Ciphertext EncryptValue(const ckks::Encryptor& encryptor, double value,
                              const ckks::Seed& seed, std::uint64_t stream) {
  const ckks::Context& ctx = encryptor.context();
  ckks::Encoder encoder(encryptor.context_ptr());
  ckks::Prng prng(seed, stream);
  const ckks::Plaintext pt = encoder.EncodeScalar(value, ctx.max_level(), ctx.default_scale());
  return encryptor.has_secret_key() ? encryptor.EncryptSymmetric(pt, prng)
                                    : encryptor.Encrypt(pt, prng);
}

}  // namespace

std::vector<int> RadixDecompose(int p, int radix) {
  if (p < 0 || p > 255) throw DomainError("pixel value " + std::to_string(p) + " outside [0, 255]");
  if (radix < 2) throw ParameterError("radix must be at least 2");
  std::vector<int> digits;
  do {
    digits.push_back(p % radix);
    p /= radix;
  } while (p > 0);
  return digits;
}

int RadixPowerCount(int radix) {
  if (radix < 2) throw ParameterError("radix must be at least 2");
  int count = 1;
  for (long long power = radix; power <= 255; power *= radix) ++count;
  return count;
}

bool ValueCache::contains(int p) const {
  return p >= 0 && p < kPixelValues && entries[static_cast<std::size_t>(p)].has_value();
}

const ckks::Ciphertext& ValueCache::at(int p) const {
  if (!contains(p)) {
    throw CacheMissError("pixel value " + std::to_string(p) + " is not cached");
  }
  return *entries[static_cast<std::size_t>(p)];
}

std::vector<int> ValueCache::coverage() const {
  std::vector<int> out;
  for (int p = 0; p < kPixelValues; ++p) {
    if (contains(p)) out.push_back(p);
  }
  return out;
}

std::size_t ValueCache::size() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.has_value(); }));
}

ZeroPool::ZeroPool(std::vector<ckks::Ciphertext> zeros) : zeros_(std::move(zeros)) {}

ZeroPool::ZeroPool(const ZeroPool& other)
    : zeros_(other.zeros_), draws_(other.draw_count()) {}

ZeroPool& ZeroPool::operator=(const ZeroPool& other) {
  zeros_ = other.zeros_;
  draws_ = other.draw_count();
  return *this;
}

ZeroPool::ZeroPool(ZeroPool&& other) noexcept
    : zeros_(std::move(other.zeros_)), draws_(other.draw_count()) {}

ZeroPool& ZeroPool::operator=(ZeroPool&& other) noexcept {
  zeros_ = std::move(other.zeros_);
  draws_ = other.draw_count();
  return *this;
}

std::size_t ZeroPool::DrawIndex(ckks::Prng& prng) const {
  if (zeros_.empty()) throw PoolError("zero pool is empty");
  draws_.fetch_add(1, std::memory_order_relaxed);
  return static_cast<std::size_t>(prng.UniformBelow(zeros_.size()));
}

ckks::Ciphertext ZeroPool::Draw(ckks::Prng& prng) const { return zeros_[DrawIndex(prng)]; }

RadixCache BuildRadixCache(const ckks::Encryptor& encryptor, int radix,
                           const ckks::Seed& seed, int workers) {
  RadixCache cache;
  cache.radix = radix;
  const int count = RadixPowerCount(radix);
  cache.powers.resize(static_cast<std::size_t>(count));
  ParallelFor(0, cache.powers.size(), workers, [&](std::size_t i) {
    double power = 1;
    for (std::size_t j = 0; j < i; ++j) power *= radix;
    cache.powers[i] = EncryptValue(encryptor, power, seed, kRadixStream + i);
  });
  return cache;
}

ValueCache BuildFullCache(const ckks::Encryptor& encryptor, const ckks::Seed& seed,
                          int workers) {
  ValueCache cache;
  ParallelFor(0, kPixelValues, workers, [&](std::size_t p) {
    cache.entries[p] = EncryptValue(encryptor, static_cast<double>(p), seed, kValueStream + p);
  });
  return cache;
}

ValueCache BuildScanCache(std::span<const std::uint8_t> pixels,
                          const ckks::Encryptor& encryptor, const ckks::Seed& seed,
                          int workers, int top_k) {
  if (pixels.empty()) throw DomainError("cannot scan an empty image");
  std::array<std::size_t, kPixelValues> histogram{};
  for (std::uint8_t v : pixels) ++histogram[v];
  std::vector<int> values;
  for (int p = 0; p < kPixelValues; ++p) {
    if (histogram[static_cast<std::size_t>(p)] > 0) values.push_back(p);
  }
  if (top_k > 0 && static_cast<std::size_t>(top_k) < values.size()) {
    std::stable_sort(values.begin(), values.end(), [&](int a, int b) {
      return histogram[static_cast<std::size_t>(a)] > histogram[static_cast<std::size_t>(b)];
    });
    values.resize(static_cast<std::size_t>(top_k));
  }
  ValueCache cache;
  ParallelFor(0, values.size(), workers, [&](std::size_t i) {
    const auto p = static_cast<std::size_t>(values[i]);
    cache.entries[p] = EncryptValue(encryptor, static_cast<double>(p), seed, kValueStream + p);
  });
  return cache;
}

ZeroPool BuildZeroPool(const ckks::Encryptor& encryptor, std::size_t size,
                       const ckks::Seed& seed, int workers) {
  if (size == 0) throw PoolError("zero pool size must be positive");
  std::vector<ckks::Ciphertext> zeros(size);
  ParallelFor(0, size, workers, [&](std::size_t z) {
    zeros[z] = EncryptValue(encryptor, 0.0, seed, kPoolStream + z);
  });
  return ZeroPool(std::move(zeros));
}

PixelCache BuildPixelCache(const CacheStrategy& strategy,
                           const ckks::Encryptor& encryptor,
                           std::span<const std::uint8_t> pixels,
                           const ckks::Seed& seed, int workers) {
  strategy.Validate();
  PixelCache cache;
  cache.strategy = strategy;
  switch (strategy.tag) {
    case StrategyTag::kNone:
      break;
    case StrategyTag::kRadix:
      cache.radix = BuildRadixCache(encryptor, strategy.radix, seed, workers);
      break;
    case StrategyTag::kScan:
      cache.values = BuildScanCache(pixels, encryptor, seed, workers, strategy.top_k);
      break;
    case StrategyTag::kFull:
      cache.values = BuildFullCache(encryptor, seed, workers);
      break;
  }
  if (strategy.uses_pool()) {
    cache.pool = BuildZeroPool(encryptor, strategy.pool_size, seed, workers);
  }
  return cache;
}

}  // namespace icheetah::cache
