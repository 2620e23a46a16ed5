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

#include "icheetah/ckks/params.h"

#include <bit>
#include <cmath>
#include <set>

#include "icheetah/ckks/modular.h"
#include "icheetah/common/error.h"

namespace icheetah::ckks {

CkksParams CkksParams::Default() {
  CkksParams p;
  p.ring_degree = 4096;
  p.modulus_chain = {86982123521ull, 86981885953ull, 86981705729ull};
  p.log2_scale = 36;
  p.noise_stddev = 3.2;
  p.security_level = 128;
  p.name = "default";
  return p;
}

CkksParams CkksParams::ToyInsecure() {
  CkksParams p;
  p.ring_degree = 16;
  p.modulus_chain = {1048193ull, 1048129ull};
  p.log2_scale = 10;
  p.noise_stddev = 3.2;
  p.security_level = 0;
  p.name = "toy-insecure";
  return p;
}

CkksParams CkksParams::FromPreset(const std::string& preset) {
  if (preset == "default") return Default();
  if (preset == "toy" || preset == "toy-insecure") return ToyInsecure();
  throw ParameterError("unknown parameter preset \"" + preset + "\"");
}

double CkksParams::scale() const { return std::ldexp(1.0, log2_scale); }

double CkksParams::log2_modulus() const {
  double bits = 0;
  for (std::uint64_t q : modulus_chain) bits += std::log2(static_cast<double>(q));
  return bits;
}

void CkksParams::Validate() const {
  if (!std::has_single_bit(ring_degree) || ring_degree < 8) {
    throw ParameterError("ring degree must be a power of two >= 8, got " +
                         std::to_string(ring_degree));
  }
  if (modulus_chain.empty()) throw ParameterError("empty modulus chain");
  if (modulus_chain.size() > 255) throw ParameterError("modulus chain too long");
  if (log2_scale < 1 || log2_scale > 62) {
    throw ParameterError("log2 scale out of range");
  }
  if (!(noise_stddev > 0)) throw ParameterError("noise stddev must be positive");
  std::set<std::uint64_t> seen;
  for (std::uint64_t q : modulus_chain) {
    if (q >= (std::uint64_t{1} << 62)) throw ParameterError("prime above 2^62");
    if (!IsPrime(q)) {
      throw ParameterError(std::to_string(q) + " is not prime");
    }
    if (q % (2 * ring_degree) != 1) {
      throw ParameterError(std::to_string(q) + " is not 1 mod 2N");
    }
    if (!seen.insert(q).second) throw ParameterError("duplicate chain prime");
    if (std::ldexp(1.0, log2_scale) >= static_cast<double>(q)) {
      throw ParameterError("scaling factor must be below every chain prime");
    }
  }
  if (log2_modulus() < 2.0 * log2_scale + 16.0) {
    throw ParameterError(
        "modulus chain too small: need at least scale^2 * 2^16");
  }
}

bool CkksParams::operator==(const CkksParams& other) const {
  return ring_degree == other.ring_degree &&
         modulus_chain == other.modulus_chain &&
         log2_scale == other.log2_scale &&
         noise_stddev == other.noise_stddev;
}

}  // namespace icheetah::ckks
