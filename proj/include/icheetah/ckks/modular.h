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

// Word-sized modular arithmetic for NTT-friendly primes below 2^62.

#ifndef ICHEETAH_CKKS_MODULAR_H_
#define ICHEETAH_CKKS_MODULAR_H_

#include <cstdint>
#include <vector>

namespace icheetah::ckks {

using u128 = unsigned __int128;
using i128 = __int128;

class Modulus {
 public:
  Modulus() = default;
  explicit Modulus(std::uint64_t value);

  std::uint64_t value() const { return value_; }
  int bit_count() const { return bit_count_; }

  std::uint64_t Add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= value_ ? s - value_ : s;
  }
  std::uint64_t Sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + value_ - b;
  }
  std::uint64_t Neg(std::uint64_t a) const { return a == 0 ? 0 : value_ - a; }

  // Barrett reduction of a full 128-bit value.
  std::uint64_t Reduce(u128 x) const {
    const std::uint64_t lo = static_cast<std::uint64_t>(x);
    const std::uint64_t hi = static_cast<std::uint64_t>(x >> 64);
    const u128 lo_r0 = static_cast<u128>(lo) * ratio_lo_;
    const u128 lo_r1 = static_cast<u128>(lo) * ratio_hi_ + (lo_r0 >> 64);
    const u128 hi_r0 = static_cast<u128>(hi) * ratio_lo_;
    const u128 mid = (lo_r1 >> 64) + (hi_r0 >> 64) +
                     ((static_cast<u128>(static_cast<std::uint64_t>(lo_r1)) +
                       static_cast<std::uint64_t>(hi_r0)) >> 64);
    const std::uint64_t q_hat = hi * ratio_hi_ + static_cast<std::uint64_t>(mid);
    std::uint64_t r = lo - q_hat * value_;
    while (r >= value_) r -= value_;
    return r;
  }
  std::uint64_t Reduce(std::uint64_t x) const { return x % value_; }

  std::uint64_t Mul(std::uint64_t a, std::uint64_t b) const {
    return Reduce(static_cast<u128>(a) * b);
  }

  // floor(w * 2^64 / q), the companion of a fixed multiplicand w.
  std::uint64_t ShoupPrecompute(std::uint64_t w) const {
    return static_cast<std::uint64_t>((static_cast<u128>(w) << 64) / value_);
  }
  std::uint64_t MulShoup(std::uint64_t x, std::uint64_t w,
                         std::uint64_t w_shoup) const {
    const std::uint64_t q_hat =
        static_cast<std::uint64_t>((static_cast<u128>(x) * w_shoup) >> 64);
    std::uint64_t r = x * w - q_hat * value_;
    return r >= value_ ? r - value_ : r;
  }

  std::uint64_t Pow(std::uint64_t base, std::uint64_t exp) const;
  // Requires gcd(a, q) = 1.
  std::uint64_t Inverse(std::uint64_t a) const;

  // Maps a signed integer into [0, q).
  std::uint64_t FromSigned(std::int64_t v) const {
    const auto q = static_cast<std::int64_t>(value_);
    std::int64_t r = v % q;
    return static_cast<std::uint64_t>(r < 0 ? r + q : r);
  }
  std::uint64_t FromSigned128(i128 v) const;

 private:
  std::uint64_t value_ = 0;
  int bit_count_ = 0;
  std::uint64_t ratio_hi_ = 0;  // floor(2^128 / q), high word
  std::uint64_t ratio_lo_ = 0;  // low word
};

// Deterministic Miller-Rabin for 64-bit inputs.
bool IsPrime(std::uint64_t n);

// Returns `count` distinct primes p == 1 (mod 2N), each below `upper`,
// scanning downward from the largest candidate.
std::vector<std::uint64_t> FindNttPrimesBelow(std::uint64_t upper,
                                              std::uint64_t ring_degree,
                                              int count);

// A generator of the order-2N subgroup of Z_q^*, i.e. a primitive 2N-th root.
std::uint64_t FindPrimitiveRoot(std::uint64_t two_n, const Modulus& q);

}  // namespace icheetah::ckks

#endif  // ICHEETAH_CKKS_MODULAR_H_
