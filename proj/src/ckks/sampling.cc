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

#include "icheetah/ckks/sampling.h"

#include <algorithm>
#include <cmath>

#include "icheetah/common/error.h"

namespace icheetah::ckks {

GaussianSampler::GaussianSampler(double stddev) {
  if (!(stddev > 0)) throw ParameterError("gaussian stddev must be positive");
  bound_ = static_cast<int>(std::floor(6.0 * stddev));
  std::vector<long double> weights;
  long double total = 0;
  for (int x = -bound_; x <= bound_; ++x) {
    const long double w =
        std::exp(-static_cast<long double>(x) * x / (2.0L * stddev * stddev));
    weights.push_back(w);
    total += w;
  }
  cdf_.resize(weights.size());
  long double running = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    running += weights[k];
    const long double scaled = running / total * 18446744073709551616.0L;
    cdf_[k] = scaled >= 18446744073709551615.0L
                  ? ~std::uint64_t{0}
                  : static_cast<std::uint64_t>(scaled);
  }
  cdf_.back() = ~std::uint64_t{0};
}

std::int64_t GaussianSampler::Sample(Prng& prng) const {
  const std::uint64_t u = prng.NextU64();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto index = std::min<std::ptrdiff_t>(it - cdf_.begin(),
                                              static_cast<std::ptrdiff_t>(cdf_.size()) - 1);
  return static_cast<std::int64_t>(index) - bound_;
}

void SampleTernary(Prng& prng, std::span<std::int8_t> out) {
  for (auto& v : out) {
    std::uint8_t b;
    do {
      b = prng.NextByte();
    } while (b == 255);
    v = static_cast<std::int8_t>(b % 3) - 1;
  }
}

void SampleGaussian(Prng& prng, const GaussianSampler& sampler,
                    std::span<std::int64_t> out) {
  for (auto& v : out) v = sampler.Sample(prng);
}

Poly SampleUniformPoly(const Context& ctx, std::size_t limbs, Prng& prng) {
  Poly p(ctx.ring_degree(), limbs);
  for (std::size_t i = 0; i < limbs; ++i) {
    const std::uint64_t q = ctx.modulus(i).value();
    for (auto& v : p.limb(i)) v = prng.UniformBelow(q);
  }
  return p;
}

}  // namespace icheetah::ckks
