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

#ifndef ICHEETAH_CACHE_STRATEGY_H_
#define ICHEETAH_CACHE_STRATEGY_H_

#include <cstddef>
#include <cstdint>
#include <string>

namespace icheetah::cache {

enum class StrategyTag : std::uint8_t { kNone = 0, kRadix = 1, kScan = 2, kFull = 3 };

std::string StrategyName(StrategyTag tag);
// "none", "radix", "scan" or "full"; ParameterError otherwise.
StrategyTag ParseStrategy(const std::string& name);
// Validates a serialized tag byte; FormatError when unknown.
StrategyTag StrategyFromByte(std::uint8_t tag);

inline constexpr std::size_t kDefaultPoolSize = 1024;

// ICHEETAH_POOL_SIZE when set to a positive integer, else 1024.
std::size_t DefaultPoolSize();

struct CacheStrategy {
  StrategyTag tag = StrategyTag::kFull;
  int radix = 2;
  std::size_t pool_size = DefaultPoolSize();
  bool randomness = true;

  // Radix path: also add pool zeros after the power-identity randomization.
  bool radix_zero_pool = false;
  // Pool zeros added per randomized pixel.
  int zero_draws = 2;
  // Multiply each drawn zero by a uniformly random signed monomial X^k,
  // k in [0, 2N). With zero_draws = 1 and this off, a pixel is exactly
  // c_p + z_i.
  bool rotate_zeros = true;
  // Scan path: cache only the k most frequent values (0 caches all observed).
  int top_k = 0;
  // Scan path: encrypt uncached values freshly instead of failing.
  bool fallback_fresh = false;

  bool uses_pool() const;
  // Throws ParameterError on out-of-range fields.
  void Validate() const;
};

}  // namespace icheetah::cache

#endif  // ICHEETAH_CACHE_STRATEGY_H_
