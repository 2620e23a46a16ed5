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

#include "icheetah/ckks/ntt.h"

#include <bit>

#include "icheetah/common/error.h"

namespace icheetah::ckks {

namespace {

std::size_t BitReverse(std::size_t x, int bits) {
  std::size_t r = 0;
  for (int i = 0; i < bits; ++i) {
    r = (r << 1) | ((x >> i) & 1);
  }
  return r;
}

}  // namespace

NttTables::NttTables(std::size_t ring_degree, const Modulus& modulus)
    : n_(ring_degree), modulus_(modulus) {
  if (!std::has_single_bit(n_) || n_ < 2) {
    throw ParameterError("ring degree must be a power of two");
  }
  const int log_n = std::countr_zero(n_);
  psi_ = FindPrimitiveRoot(2 * n_, modulus_);
  const std::uint64_t psi_inv = modulus_.Inverse(psi_);

  root_powers_.resize(n_);
  inv_root_powers_.resize(n_);
  root_powers_shoup_.resize(n_);
  inv_root_powers_shoup_.resize(n_);
  std::uint64_t power = 1;
  std::uint64_t inv_power = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j = BitReverse(i, log_n);
    root_powers_[j] = power;
    inv_root_powers_[j] = inv_power;
    power = modulus_.Mul(power, psi_);
    inv_power = modulus_.Mul(inv_power, psi_inv);
  }
  for (std::size_t i = 0; i < n_; ++i) {
    root_powers_shoup_[i] = modulus_.ShoupPrecompute(root_powers_[i]);
    inv_root_powers_shoup_[i] = modulus_.ShoupPrecompute(inv_root_powers_[i]);
  }
  inv_n_ = modulus_.Inverse(n_ % modulus_.value());
  inv_n_shoup_ = modulus_.ShoupPrecompute(inv_n_);
}

void NttTables::Forward(std::span<std::uint64_t> a) const {
  const std::uint64_t q = modulus_.value();
  const std::uint64_t two_q = 2 * q;
  // Lazy reduction: values stay in [0, 4q) between stages.
  std::size_t t = n_;
  for (std::size_t m = 1; m < n_; m <<= 1) {
    t >>= 1;
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint64_t w = root_powers_[m + i];
      const std::uint64_t w_shoup = root_powers_shoup_[m + i];
      std::uint64_t* x = a.data() + 2 * i * t;
      std::uint64_t* y = x + t;
      for (std::size_t j = 0; j < t; ++j) {
        std::uint64_t u = x[j];
        if (u >= two_q) u -= two_q;
        const std::uint64_t q_hat = static_cast<std::uint64_t>(
            (static_cast<u128>(y[j]) * w_shoup) >> 64);
        const std::uint64_t v = y[j] * w - q_hat * q;  // in [0, 2q)
        x[j] = u + v;
        y[j] = u + two_q - v;
      }
    }
  }
  for (auto& v : a) {
    if (v >= two_q) v -= two_q;
    if (v >= q) v -= q;
  }
}

void NttTables::Inverse(std::span<std::uint64_t> a) const {
  const std::uint64_t q = modulus_.value();
  const std::uint64_t two_q = 2 * q;
  std::size_t t = 1;
  for (std::size_t m = n_ >> 1; m >= 1; m >>= 1) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint64_t w = inv_root_powers_[m + i];
      const std::uint64_t w_shoup = inv_root_powers_shoup_[m + i];
      std::uint64_t* x = a.data() + 2 * i * t;
      std::uint64_t* y = x + t;
      for (std::size_t j = 0; j < t; ++j) {
        const std::uint64_t u = x[j];
        const std::uint64_t v = y[j];
        std::uint64_t sum = u + v;
        if (sum >= two_q) sum -= two_q;
        x[j] = sum;
        const std::uint64_t diff = u + two_q - v;
        const std::uint64_t q_hat = static_cast<std::uint64_t>(
            (static_cast<u128>(diff) * w_shoup) >> 64);
        y[j] = diff * w - q_hat * q;
      }
    }
    t <<= 1;
  }
  for (auto& v : a) {
    v = modulus_.MulShoup(v, inv_n_, inv_n_shoup_);
  }
}

std::vector<std::uint64_t> NegacyclicMultiplySchoolbook(
    std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
    const Modulus& modulus) {
  if (a.size() != b.size()) throw DimensionError("operand lengths differ");
  const std::size_t n = a.size();
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t prod = modulus.Mul(a[i], b[j]);
      const std::size_t k = i + j;
      if (k < n) {
        out[k] = modulus.Add(out[k], prod);
      } else {
        out[k - n] = modulus.Sub(out[k - n], prod);
      }
    }
  }
  return out;
}

}  // namespace icheetah::ckks
