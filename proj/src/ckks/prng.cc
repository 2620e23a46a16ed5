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

#include "icheetah/ckks/prng.h"

#include <sodium.h>

#include <cstring>

#include "icheetah/common/error.h"

namespace icheetah::ckks {

namespace {

void EnsureSodium() {
  static const bool ready = [] { return sodium_init() >= 0; }();
  if (!ready) throw Error(ErrorCode::kUnsupported, "libsodium failed to initialize");
}

constexpr std::size_t kBlockBytes = 64;

}  // namespace

Prng::Prng(const Seed& key, std::uint64_t stream) : key_(key) {
  EnsureSodium();
  for (int i = 0; i < 8; ++i) nonce_[i] = static_cast<std::uint8_t>(stream >> (8 * i));
}

Prng Prng::FromEntropy() { return Prng(RandomSeed()); }

Seed Prng::RandomSeed() {
  EnsureSodium();
  Seed seed;
  randombytes_buf(seed.data(), seed.size());
  return seed;
}

Seed Prng::SeedFromU64(std::uint64_t value) {
  Seed seed{};
  for (int i = 0; i < 8; ++i) seed[i] = static_cast<std::uint8_t>(value >> (8 * i));
  return seed;
}

void Prng::Refill() {
  static const std::array<std::uint8_t, kBufferSize> kZeros{};
  crypto_stream_chacha20_ietf_xor_ic(buffer_.data(), kZeros.data(), kBufferSize,
                                     nonce_.data(), block_counter_, key_.data());
  block_counter_ += static_cast<std::uint32_t>(kBufferSize / kBlockBytes);
  pos_ = 0;
}

std::uint8_t Prng::NextByte() {
  if (pos_ == kBufferSize) Refill();
  return buffer_[pos_++];
}

std::uint32_t Prng::NextU32() {
  if (kBufferSize - pos_ < 4) Refill();
  std::uint32_t v;
  std::memcpy(&v, buffer_.data() + pos_, 4);
  pos_ += 4;
  return v;
}

std::uint64_t Prng::NextU64() {
  if (kBufferSize - pos_ < 8) Refill();
  std::uint64_t v;
  std::memcpy(&v, buffer_.data() + pos_, 8);
  pos_ += 8;
  return v;
}

std::uint64_t Prng::UniformBelow(std::uint64_t bound) {
  if (bound == 0) throw DomainError("empty sampling range");
  // Reject the top partial bucket.
  const std::uint64_t limit = max() - max() % bound;
  for (;;) {
    const std::uint64_t v = NextU64();
    if (v < limit) return v % bound;
  }
}

double Prng::NextDouble() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

Seed Prng::NextSeed() {
  Seed s;
  for (auto& b : s) b = NextByte();
  return s;
}

}  // namespace icheetah::ckks
