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

#ifndef ICHEETAH_CKKS_NTT_H_
#define ICHEETAH_CKKS_NTT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "icheetah/ckks/modular.h"

namespace icheetah::ckks {

// Negacyclic number-theoretic transform over Z_q[X]/(X^N + 1).
//
// Forward is Cooley-Tukey with the 2N-th root folded into the twiddles, so no
// separate pre-multiplication by psi^i is needed; output is in bit-reversed
// order. Inverse is Gentleman-Sande and includes the N^{-1} factor. Pointwise
// products of two forward transforms correspond to negacyclic convolution.
class NttTables {
 public:
  NttTables(std::size_t ring_degree, const Modulus& modulus);

  void Forward(std::span<std::uint64_t> values) const;
  void Inverse(std::span<std::uint64_t> values) const;

  const Modulus& modulus() const { return modulus_; }
  std::size_t ring_degree() const { return n_; }
  std::uint64_t psi() const { return psi_; }

 private:
  std::size_t n_;
  Modulus modulus_;
  std::uint64_t psi_;
  std::vector<std::uint64_t> root_powers_;      // psi^bitrev(i)
  std::vector<std::uint64_t> root_powers_shoup_;
  std::vector<std::uint64_t> inv_root_powers_;  // psi^-(bitrev(i))
  std::vector<std::uint64_t> inv_root_powers_shoup_;
  std::uint64_t inv_n_;
  std::uint64_t inv_n_shoup_;
};

// O(N^2) schoolbook negacyclic product, the reference the transform is
// checked against.
std::vector<std::uint64_t> NegacyclicMultiplySchoolbook(
    std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
    const Modulus& modulus);

}  // namespace icheetah::ckks

#endif  // ICHEETAH_CKKS_NTT_H_
