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

#ifndef ICHEETAH_CKKS_ENCODER_H_
#define ICHEETAH_CKKS_ENCODER_H_

#include <complex>
#include <span>
#include <vector>

#include "icheetah/ckks/ciphertext.h"
#include "icheetah/ckks/context.h"

namespace icheetah::ckks {

// Canonical-embedding encoder. Slot j is the evaluation at zeta^(5^j) for a
// primitive 2N-th root of unity zeta; there are N/2 slots.
class Encoder {
 public:
  explicit Encoder(ContextPtr context);

  std::size_t slot_count() const { return context_->ring_degree() / 2; }

  // Constant polynomial round(value * scale): the value lands in every slot.
  Plaintext EncodeScalar(double value, int level, double scale) const;
  // Inverse embedding of the conjugate-extended vector. Shorter inputs are
  // zero-padded.
  Plaintext EncodeVector(std::span<const std::complex<double>> values,
                         int level, double scale) const;

  std::vector<std::complex<double>> Decode(const Plaintext& pt) const;
  // Real part of the slot average, which equals coefficient 0 / scale. Exact
  // for scalar encodings and O(limbs) to compute.
  double DecodeScalar(const Plaintext& pt) const;

  const Context& context() const { return *context_; }

 private:
  // zeta^t for t in [0, 2N)
  std::complex<double> Root(std::size_t t) const { return roots_[t % roots_.size()]; }

  ContextPtr context_;
  std::vector<std::complex<double>> roots_;
  std::vector<std::size_t> slot_exponents_;  // 5^j mod 2N
};

// Scales a real value to the nearest integer, rounding half away from zero.
// Throws EncodingOverflowError when |value * scale| >= Q_level / 2.
i128 ScaleToInteger(const Context& ctx, double value, double scale, int level);

}  // namespace icheetah::ckks

#endif  // ICHEETAH_CKKS_ENCODER_H_
