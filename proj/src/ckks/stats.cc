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

#include "icheetah/ckks/stats.h"

#include <atomic>

namespace icheetah::ckks::stats {

namespace {
std::atomic<std::uint64_t> g_encryptions{0};
std::atomic<std::uint64_t> g_decryptions{0};
}  // namespace

Counters Snapshot() {
  return {g_encryptions.load(std::memory_order_relaxed),
          g_decryptions.load(std::memory_order_relaxed)};
}

void CountEncryption() { g_encryptions.fetch_add(1, std::memory_order_relaxed); }
void CountDecryption() { g_decryptions.fetch_add(1, std::memory_order_relaxed); }

}  // namespace icheetah::ckks::stats
