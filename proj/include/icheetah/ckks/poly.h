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

#ifndef ICHEETAH_CKKS_POLY_H_
#define ICHEETAH_CKKS_POLY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace icheetah::ckks {

// An element of Z_Q[X]/(X^N + 1) in residue-number-system form: one limb of N
// residues per active chain prime, stored limb-major.
class Poly {
 public:
  Poly() = default;
  Poly(std::size_t ring_degree, std::size_t limb_count, bool ntt_form = false)
      : ring_degree_(ring_degree),
        limb_count_(limb_count),
        ntt_form_(ntt_form),
        data_(ring_degree * limb_count, 0) {}

  std::size_t ring_degree() const { return ring_degree_; }
  std::size_t limb_count() const { return limb_count_; }
  bool is_ntt() const { return ntt_form_; }
  void set_ntt(bool ntt_form) { ntt_form_ = ntt_form; }

  std::span<std::uint64_t> limb(std::size_t i) {
    return {data_.data() + i * ring_degree_, ring_degree_};
  }
  std::span<const std::uint64_t> limb(std::size_t i) const {
    return {data_.data() + i * ring_degree_, ring_degree_};
  }
  std::span<std::uint64_t> data() { return data_; }
  std::span<const std::uint64_t> data() const { return data_; }

  // Keeps the first `limb_count` limbs.
  void Truncate(std::size_t limb_count) {
    limb_count_ = limb_count;
    data_.resize(ring_degree_ * limb_count);
  }

  bool operator==(const Poly& other) const = default;

 private:
  std::size_t ring_degree_ = 0;
  std::size_t limb_count_ = 0;
  bool ntt_form_ = false;
  std::vector<std::uint64_t> data_;
};

}  // namespace icheetah::ckks

#endif  // ICHEETAH_CKKS_POLY_H_
