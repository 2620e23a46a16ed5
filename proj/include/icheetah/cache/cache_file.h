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

// Cache persistence. Layout, little-endian:
//   "ICHC", u16 version, u8 strategy tag, u8 radix, u16 entry count,
//   entry count x (u16 value, ciphertext blob),
//   u32 pool size, pool size x ciphertext blob,
//   32-byte public key fingerprint.
// Radix records carry r^i as their value.

#ifndef ICHEETAH_CACHE_CACHE_FILE_H_
#define ICHEETAH_CACHE_CACHE_FILE_H_

#include <cstdint>
#include <filesystem>
#include <span>

#include "icheetah/cache/caches.h"
#include "icheetah/ckks/context.h"
#include "icheetah/common/bytes.h"

namespace icheetah::cache {

inline constexpr std::uint16_t kCacheFormatVersion = 1;

Bytes SerializePixelCache(const PixelCache& cache, const ckks::Digest& fingerprint);

// Restores tag and radix into the returned strategy; every other strategy
// field keeps its default. FormatError on malformed input, KeyMismatchError
// when the fingerprint differs from `expected_fingerprint`.
PixelCache ParsePixelCache(std::span<const std::uint8_t> bytes, const ckks::Context& ctx,
                           const ckks::Digest& expected_fingerprint);

void SavePixelCache(const std::filesystem::path& path, const PixelCache& cache,
                    const ckks::Digest& fingerprint);
PixelCache LoadPixelCache(const std::filesystem::path& path, const ckks::Context& ctx,
                          const ckks::Digest& expected_fingerprint);

}  // namespace icheetah::cache

#endif  // ICHEETAH_CACHE_CACHE_FILE_H_
