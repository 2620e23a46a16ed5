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

#ifndef ICHEETAH_CKKS_PARAMS_H_
#define ICHEETAH_CKKS_PARAMS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace icheetah::ckks {

struct CkksParams {
  std::size_t ring_degree = 4096;
  // q_0 ... q_L. Rescaling drops primes from the back.
  std::vector<std::uint64_t> modulus_chain;
  int log2_scale = 36;
  double noise_stddev = 3.2;
  // Informational only; no lattice estimator is run.
  int security_level = 128;
  std::string name;

  // N = 2^12, three ~36.3-bit primes (Q ~ 2^109), scale 2^36.
  static CkksParams Default();
  // N = 16, two 20-bit primes, scale 2^10. Offers no security at all.
  static CkksParams ToyInsecure();
  // "default" or "toy"; anything else is a ParameterError.
  static CkksParams FromPreset(const std::string& preset);

  // Throws ParameterError when any structural invariant fails.
  void Validate() const;

  int max_level() const { return static_cast<int>(modulus_chain.size()) - 1; }
  double scale() const;
  // Sum of log2(q_i).
  double log2_modulus() const;

  bool operator==(const CkksParams& other) const;
};

}  // namespace icheetah::ckks

#endif  // ICHEETAH_CKKS_PARAMS_H_
