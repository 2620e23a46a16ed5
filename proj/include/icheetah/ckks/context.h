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

#ifndef ICHEETAH_CKKS_CONTEXT_H_
#define ICHEETAH_CKKS_CONTEXT_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "icheetah/ckks/modular.h"
#include "icheetah/ckks/ntt.h"
#include "icheetah/ckks/params.h"
#include "icheetah/ckks/poly.h"

namespace icheetah::ckks {

using Digest = std::array<std::uint8_t, 32>;

// Relinearization decomposes c2 in base 2^16.
inline constexpr int kRelinDigitBits = 16;

// Validated parameters plus every precomputed table derived from them.
// Immutable after construction and safe to share across threads.
class Context {
 public:
  static std::shared_ptr<const Context> Create(const CkksParams& params);

  const CkksParams& params() const { return params_; }
  std::size_t ring_degree() const { return params_.ring_degree; }
  int max_level() const { return params_.max_level(); }
  double default_scale() const { return params_.scale(); }

  const Modulus& modulus(std::size_t i) const { return moduli_[i]; }
  const NttTables& ntt(std::size_t i) const { return ntt_[i]; }

  // Q_level = q_0 * ... * q_level.
  u128 modulus_product(int level) const { return levels_[level].product; }
  double modulus_product_double(int level) const;
  int relin_digit_count(int level) const { return levels_[level].digits; }

  // CRT-lifts coefficient `index` of `poly` (at `level`) to (-Q/2, Q/2].
  i128 CenteredCoefficient(const Poly& poly, std::size_t index, int level) const;
  // Same, from explicit residues r_0..r_level.
  i128 CenteredFromResidues(std::span<const std::uint64_t> residues,
                            int level) const;
  u128 ReconstructFromResidues(std::span<const std::uint64_t> residues,
                               int level) const;

  // q_level^{-1} mod q_i, for i < level.
  std::uint64_t inv_last_prime(int level, std::size_t i) const {
    return levels_[level].inv_last[i];
  }
  std::uint64_t inv_last_prime_shoup(int level, std::size_t i) const {
    return levels_[level].inv_last_shoup[i];
  }

  // SHA-256 over the serialized parameter header.
  const Digest& params_digest() const { return digest_; }

  void ToNtt(Poly& poly) const;
  void FromNtt(Poly& poly) const;

 private:
  explicit Context(const CkksParams& params);

  struct LevelData {
    u128 product = 0;
    std::vector<u128> punctured;              // Q_level / q_i
    std::vector<std::uint64_t> punctured_inv; // (Q_level / q_i)^{-1} mod q_i
    std::vector<std::uint64_t> punctured_inv_shoup;
    std::vector<std::uint64_t> inv_last;
    std::vector<std::uint64_t> inv_last_shoup;
    int digits = 0;
  };

  CkksParams params_;
  std::vector<Modulus> moduli_;
  std::vector<NttTables> ntt_;
  std::vector<LevelData> levels_;
  Digest digest_{};
};

using ContextPtr = std::shared_ptr<const Context>;

}  // namespace icheetah::ckks

#endif  // ICHEETAH_CKKS_CONTEXT_H_
