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

#include "icheetah/cache/strategy.h"

#include <cstdlib>
#include <exception>

#include "icheetah/common/error.h"

namespace icheetah::cache {

std::string StrategyName(StrategyTag tag) {
  switch (tag) {
    case StrategyTag::kNone:
      return "none";
    case StrategyTag::kRadix:
      return "radix";
    case StrategyTag::kScan:
      return "scan";
    case StrategyTag::kFull:
      return "full";
  }
  return "unknown";
}

StrategyTag ParseStrategy(const std::string& name) {
  if (name == "none" || name == "baseline") return StrategyTag::kNone;
  if (name == "radix") return StrategyTag::kRadix;
  if (name == "scan") return StrategyTag::kScan;
  if (name == "full") return StrategyTag::kFull;
  throw ParameterError("unknown strategy '" + name + "'");
}

StrategyTag StrategyFromByte(std::uint8_t tag) {
  if (tag > 3) throw FormatError("unknown strategy tag " + std::to_string(tag));
  return static_cast<StrategyTag>(tag);
}

std::size_t DefaultPoolSize() {
  if (const char* env = std::getenv("ICHEETAH_POOL_SIZE")) {
    try {
      const long long n = std::stoll(env);
      if (n > 0) return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
    }
  }
  return kDefaultPoolSize;
}

bool CacheStrategy::uses_pool() const {
  if (!randomness) return false;
  if (tag == StrategyTag::kScan || tag == StrategyTag::kFull) return true;
  return tag == StrategyTag::kRadix && radix_zero_pool;
}

void CacheStrategy::Validate() const {
  if (tag == StrategyTag::kNone) return;
  if (tag == StrategyTag::kRadix && (radix < 2 || radix > 255)) {
    throw ParameterError("radix must lie in [2, 255]");
  }
  if (pool_size < 1) throw ParameterError("pool size must be at least 1");
  if (zero_draws < 1) throw ParameterError("zero draws must be at least 1");
  if (top_k < 0 || top_k > 256) throw ParameterError("top-k must lie in [0, 256]");
}

}  // namespace icheetah::cache
