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

#include "icheetah/cache/cache_file.h"

#include <algorithm>
#include <string>
#include <vector>

#include "icheetah/ckks/serialization.h"
#include "icheetah/common/error.h"

namespace icheetah::cache {

Bytes SerializePixelCache(const PixelCache& cache, const ckks::Digest& fingerprint) {
  ByteWriter w;
  w.PutMagic("ICHC");
  w.PutU16(kCacheFormatVersion);
  w.PutU8(static_cast<std::uint8_t>(cache.strategy.tag));
  w.PutU8(static_cast<std::uint8_t>(cache.radix ? cache.radix->radix : cache.strategy.radix));
  if (cache.radix) {
    w.PutU16(static_cast<std::uint16_t>(cache.radix->powers.size()));
    std::uint32_t power = 1;
    for (const auto& ct : cache.radix->powers) {
      w.PutU16(static_cast<std::uint16_t>(power));
      ckks::WriteCiphertext(w, ct);
      power *= static_cast<std::uint32_t>(cache.radix->radix);
    }
  } else if (cache.values) {
    const std::vector<int> cov = cache.values->coverage();
    w.PutU16(static_cast<std::uint16_t>(cov.size()));
    for (int p : cov) {
      w.PutU16(static_cast<std::uint16_t>(p));
      ckks::WriteCiphertext(w, cache.values->at(p));
    }
  } else {
    w.PutU16(0);
  }
  const std::size_t pool = cache.pool ? cache.pool->size() : 0;
  w.PutU32(static_cast<std::uint32_t>(pool));
  for (std::size_t i = 0; i < pool; ++i) ckks::WriteCiphertext(w, cache.pool->element(i));
  w.PutBytes(fingerprint);
  return w.Take();
}

PixelCache ParsePixelCache(std::span<const std::uint8_t> bytes, const ckks::Context& ctx,
                           const ckks::Digest& expected_fingerprint) {
  ByteReader r(bytes);
  r.ExpectMagic("ICHC");
  const std::uint16_t version = r.GetU16();
  if (version != kCacheFormatVersion) {
    throw FormatError("unsupported cache file version " + std::to_string(version));
  }
  PixelCache cache;
  cache.strategy.tag = StrategyFromByte(r.GetU8());
  cache.strategy.radix = r.GetU8();
  const std::uint16_t count = r.GetU16();
  switch (cache.strategy.tag) {
    case StrategyTag::kNone:
      if (count != 0) throw FormatError("baseline cache must have no entries");
      break;
    case StrategyTag::kRadix: {
      if (cache.strategy.radix < 2) throw FormatError("radix below 2");
      if (count != RadixPowerCount(cache.strategy.radix)) {
        throw FormatError("radix cache entry count does not match the radix");
      }
      RadixCache rc;
      rc.radix = cache.strategy.radix;
      std::uint32_t power = 1;
      for (std::uint16_t i = 0; i < count; ++i) {
        if (r.GetU16() != power) throw FormatError("radix record out of order");
        rc.powers.push_back(ckks::ReadCiphertext(r, ctx));
        power *= static_cast<std::uint32_t>(rc.radix);
      }
      cache.radix = std::move(rc);
      break;
    }
    case StrategyTag::kScan:
    case StrategyTag::kFull: {
      if (count > kPixelValues) throw FormatError("more than 256 value records");
      if (cache.strategy.tag == StrategyTag::kFull && count != kPixelValues) {
        throw FormatError("full cache must hold all 256 values");
      }
      ValueCache vc;
      for (std::uint16_t i = 0; i < count; ++i) {
        const std::uint16_t p = r.GetU16();
        if (p >= kPixelValues || vc.contains(p)) throw FormatError("bad value record");
        vc.entries[p] = ckks::ReadCiphertext(r, ctx);
      }
      cache.values = std::move(vc);
      break;
    }
  }
  const std::uint32_t pool = r.GetU32();
  if (pool > 0) {
    std::vector<ckks::Ciphertext> zeros;
    zeros.reserve(std::min<std::size_t>(pool, r.remaining()));
    for (std::uint32_t i = 0; i < pool; ++i) zeros.push_back(ckks::ReadCiphertext(r, ctx));
    cache.pool = ZeroPool(std::move(zeros));
    cache.strategy.pool_size = pool;
  }
  auto fp = r.GetBytes(expected_fingerprint.size());
  r.ExpectEnd();
  if (!std::equal(fp.begin(), fp.end(), expected_fingerprint.begin())) {
    throw KeyMismatchError("cache file was built with different keys");
  }
  return cache;
}

void SavePixelCache(const std::filesystem::path& path, const PixelCache& cache,
                    const ckks::Digest& fingerprint) {
  WriteFileAtomic(path, SerializePixelCache(cache, fingerprint));
}

PixelCache LoadPixelCache(const std::filesystem::path& path, const ckks::Context& ctx,
                          const ckks::Digest& expected_fingerprint) {
  return ParsePixelCache(ReadFileBytes(path), ctx, expected_fingerprint);
}

}  // namespace icheetah::cache
