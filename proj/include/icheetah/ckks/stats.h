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

// Process-wide operation counters. The caching layer is audited with these:
// a cache hit must not run a fresh RLWE encryption, and encrypted-domain
// processing must never decrypt.

#ifndef ICHEETAH_CKKS_STATS_H_
#define ICHEETAH_CKKS_STATS_H_

#include <cstdint>

namespace icheetah::ckks::stats {

struct Counters {
  std::uint64_t fresh_encryptions = 0;
  std::uint64_t decryptions = 0;
};

Counters Snapshot();

void CountEncryption();
void CountDecryption();

}  // namespace icheetah::ckks::stats

#endif  // ICHEETAH_CKKS_STATS_H_
