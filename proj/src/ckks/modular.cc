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

#include "icheetah/ckks/modular.h"

#include <bit>

#include "icheetah/common/error.h"

namespace icheetah::ckks {

Modulus::Modulus(std::uint64_t value) : value_(value) {
  if (value < 2 || value >= (std::uint64_t{1} << 62)) {
    throw ParameterError("modulus must lie in [2, 2^62)");
  }
  bit_count_ = std::bit_width(value);
  // floor(2^128 / q) computed as floor((2^128 - 1) / q); equal unless q is a
  // power of two, which an odd prime never is.
  const u128 ratio = ~static_cast<u128>(0) / value;
  ratio_hi_ = static_cast<std::uint64_t>(ratio >> 64);
  ratio_lo_ = static_cast<std::uint64_t>(ratio);
}

std::uint64_t Modulus::Pow(std::uint64_t base, std::uint64_t exp) const {
  std::uint64_t result = 1 % value_;
  base %= value_;
  while (exp > 0) {
    if (exp & 1) result = Mul(result, base);
    base = Mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t Modulus::Inverse(std::uint64_t a) const {
  i128 t = 0, new_t = 1;
  i128 r = value_, new_r = a % value_;
  while (new_r != 0) {
    const i128 quotient = r / new_r;
    const i128 tmp_t = t - quotient * new_t;
    t = new_t;
    new_t = tmp_t;
    const i128 tmp_r = r - quotient * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (r != 1) throw ParameterError("value is not invertible");
  if (t < 0) t += value_;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t Modulus::FromSigned128(i128 v) const {
  const i128 q = value_;
  i128 r = v % q;
  if (r < 0) r += q;
  return static_cast<std::uint64_t>(r);
}

namespace {

std::uint64_t MulModSlow(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t PowModSlow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = MulModSlow(r, b, m);
    b = MulModSlow(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = PowModSlow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = MulModSlow(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> FindNttPrimesBelow(std::uint64_t upper,
                                              std::uint64_t ring_degree,
                                              int count) {
  const std::uint64_t step = 2 * ring_degree;
  std::vector<std::uint64_t> primes;
  if (upper <= step) throw ParameterError("prime bound too small");
  std::uint64_t candidate = ((upper - 1) / step) * step + 1;
  if (candidate >= upper) candidate -= step;
  while (static_cast<int>(primes.size()) < count) {
    if (candidate <= step) throw ParameterError("ran out of NTT primes");
    if (IsPrime(candidate)) primes.push_back(candidate);
    candidate -= step;
  }
  return primes;
}

std::uint64_t FindPrimitiveRoot(std::uint64_t two_n, const Modulus& q) {
  const std::uint64_t p = q.value();
  if ((p - 1) % two_n != 0) {
    throw ParameterError("prime is not 1 mod 2N");
  }
  const std::uint64_t cofactor = (p - 1) / two_n;
  // two_n is a power of two, so x has order exactly two_n iff
  // x^(two_n / 2) == -1.
  for (std::uint64_t g = 2; g < p; ++g) {
    const std::uint64_t x = q.Pow(g, cofactor);
    if (q.Pow(x, two_n / 2) == p - 1) return x;
  }
  throw ParameterError("no primitive 2N-th root found");
}

}  // namespace icheetah::ckks
