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

#ifndef ICHEETAH_CKKS_EVALUATOR_H_
#define ICHEETAH_CKKS_EVALUATOR_H_

#include <cstddef>

#include "icheetah/ckks/ciphertext.h"
#include "icheetah/ckks/context.h"
#include "icheetah/ckks/keys.h"

namespace icheetah::ckks {

// Scales agree when their ratio is within this relative distance of 1.
inline constexpr double kScaleTolerance = 0x1.0p-20;

// Homomorphic operations. Stateless beyond the shared context; every method
// is const and thread-safe.
class Evaluator {
 public:
  explicit Evaluator(ContextPtr context);

  // Operands must share level and scale; a degree-1 operand is treated as
  // having a zero third part.
  Ciphertext Add(const Ciphertext& a, const Ciphertext& b) const;
  Ciphertext Sub(const Ciphertext& a, const Ciphertext& b) const;
  void AddInPlace(Ciphertext& a, const Ciphertext& b) const;
  void SubInPlace(Ciphertext& a, const Ciphertext& b) const;
  void NegateInPlace(Ciphertext& a) const;

  // acc += X^k * z. For an encryption of zero, X^k * z is again a valid
  // encryption of zero (ephemeral X^k * v, errors X^k * e).
  void AddMonomialProductInPlace(Ciphertext& acc, const Ciphertext& z,
                                 std::size_t k) const;

  Ciphertext AddPlain(const Ciphertext& a, const Plaintext& pt) const;
  void AddPlainInPlace(Ciphertext& a, const Plaintext& pt) const;
  // Result scale is a.scale * pt.scale; the caller rescales.
  Ciphertext MulPlain(const Ciphertext& a, const Plaintext& pt) const;
  void MulPlainInPlace(Ciphertext& a, const Plaintext& pt) const;

  // Degree-1 operands only; returns a degree-2 ciphertext.
  Ciphertext Mul(const Ciphertext& a, const Ciphertext& b) const;
  Ciphertext Square(const Ciphertext& a) const;

  // Degree-1 input is returned unchanged.
  Ciphertext Relinearize(const Ciphertext& ct, const RelinKey& rlk) const;

  // Drops q_level and divides the scale by it.
  Ciphertext Rescale(const Ciphertext& ct) const;
  void RescaleInPlace(Ciphertext& ct) const;

  const Context& context() const { return *context_; }

 private:
  void CheckCompatible(const Ciphertext& a, const Ciphertext& b) const;
  void CheckScaleFits(double scale, int level) const;

  ContextPtr context_;
};

}  // namespace icheetah::ckks

#endif  // ICHEETAH_CKKS_EVALUATOR_H_
