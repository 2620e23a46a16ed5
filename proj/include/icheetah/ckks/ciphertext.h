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

#ifndef ICHEETAH_CKKS_CIPHERTEXT_H_
#define ICHEETAH_CKKS_CIPHERTEXT_H_

#include <vector>

#include "icheetah/ckks/poly.h"

namespace icheetah::ckks {

struct Plaintext {
  Poly poly;  // coefficient form, level + 1 limbs
  double scale = 1.0;
  int level = 0;
  // Only coefficient 0 may be nonzero; enables O(limbs) plain operations.
  bool constant = false;
};

// Two parts after encryption or relinearization, three right after a
// ciphertext-ciphertext product. Parts are kept in coefficient form.
struct Ciphertext {
  std::vector<Poly> parts;
  double scale = 1.0;
  int level = 0;

  int degree() const { return static_cast<int>(parts.size()) - 1; }
  std::size_t limb_count() const {
    return parts.empty() ? 0 : parts.front().limb_count();
  }
  bool operator==(const Ciphertext& other) const = default;
};

}  // namespace icheetah::ckks

#endif  // ICHEETAH_CKKS_CIPHERTEXT_H_
