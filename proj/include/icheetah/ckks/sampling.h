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

#ifndef ICHEETAH_CKKS_SAMPLING_H_
#define ICHEETAH_CKKS_SAMPLING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "icheetah/ckks/context.h"
#include "icheetah/ckks/poly.h"
#include "icheetah/ckks/prng.h"

namespace icheetah::ckks {

// Centered discrete Gaussian by inverse-CDF lookup, truncated at 6 sigma.
class GaussianSampler {
 public:
  explicit GaussianSampler(double stddev);

  std::int64_t Sample(Prng& prng) const;
  int bound() const { return bound_; }

 private:
  int bound_;
  // cdf_[k] = P(X <= k - bound) scaled to 2^64; the last entry saturates.
  std::vector<std::uint64_t> cdf_;
};

// Uniform over {-1, 0, 1}.
void SampleTernary(Prng& prng, std::span<std::int8_t> out);

void SampleGaussian(Prng& prng, const GaussianSampler& sampler,
                    std::span<std::int64_t> out);

// Spreads a small signed polynomial over the first `limbs` RNS limbs.
template <typename T>
Poly LiftSigned(const Context& ctx, std::span<const T> coeffs, std::size_t limbs) {
  Poly p(ctx.ring_degree(), limbs);
  for (std::size_t i = 0; i < limbs; ++i) {
    const Modulus& q = ctx.modulus(i);
    auto dst = p.limb(i);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      dst[k] = q.FromSigned(static_cast<std::int64_t>(coeffs[k]));
    }
  }
  return p;
}

// Uniform element of R_{Q_level} in coefficient form.
Poly SampleUniformPoly(const Context& ctx, std::size_t limbs, Prng& prng);

}  // namespace icheetah::ckks

#endif  // ICHEETAH_CKKS_SAMPLING_H_
