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

#ifndef ICHEETAH_CKKS_PRNG_H_
#define ICHEETAH_CKKS_PRNG_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>

namespace icheetah::ckks {

using Seed = std::array<std::uint8_t, 32>;

// ChaCha20 keystream generator (libsodium). A (key, stream) pair identifies
// an independent, reproducible sequence; per-cell streams let parallel
// encryption produce the same bytes regardless of the worker count.
//
// Not thread-safe; each worker owns its own instance.
class Prng {
 public:
  using result_type = std::uint64_t;

  explicit Prng(const Seed& key, std::uint64_t stream = 0);

  // Keyed from the operating system's entropy source.
  static Prng FromEntropy();
  static Seed RandomSeed();
  // Little-endian `value` in the first eight bytes, zero elsewhere.
  static Seed SeedFromU64(std::uint64_t value);

  std::uint64_t NextU64();
  std::uint32_t NextU32();
  std::uint8_t NextByte();
  bool NextBit() { return (NextByte() & 1) != 0; }
  // Uniform in [0, bound) by rejection.
  std::uint64_t UniformBelow(std::uint64_t bound);
  // Uniform in [0, 1) with 53 random bits.
  double NextDouble();
  Seed NextSeed();

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return NextU64(); }

 private:
  void Refill();

  static constexpr std::size_t kBufferSize = 4096;

  Seed key_;
  std::array<std::uint8_t, 12> nonce_{};
  std::uint32_t block_counter_ = 0;
  std::array<std::uint8_t, kBufferSize> buffer_{};
  std::size_t pos_ = kBufferSize;
};

}  // namespace icheetah::ckks

#endif  // ICHEETAH_CKKS_PRNG_H_
