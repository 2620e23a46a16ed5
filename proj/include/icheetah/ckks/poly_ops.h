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

// Limb-wise ring arithmetic on Poly. Operands must agree on limb count and
// representation; the first `limbs` limbs are processed when given.

#ifndef ICHEETAH_CKKS_POLY_OPS_H_
#define ICHEETAH_CKKS_POLY_OPS_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "icheetah/ckks/context.h"
#include "icheetah/ckks/poly.h"

namespace icheetah::ckks {

void AddInPlace(const Context& ctx, Poly& a, const Poly& b);
void SubInPlace(const Context& ctx, Poly& a, const Poly& b);
void NegateInPlace(const Context& ctx, Poly& a);

// a <- a * b, pointwise; both in NTT form.
void MulPointwiseInPlace(const Context& ctx, Poly& a, const Poly& b);
// acc <- acc + a * b, pointwise; all in NTT form.
void MulAccumulate(const Context& ctx, Poly& acc, const Poly& a, const Poly& b);

// a <- a * c for a constant given as one residue per limb.
void MulScalarInPlace(const Context& ctx, Poly& a,
                      std::span<const std::uint64_t> residues);

// acc <- acc + X^k * b in coefficient form, k in [0, 2N).
void AddMonomialProductInPlace(const Context& ctx, Poly& acc, const Poly& b,
                               std::size_t k);

}  // namespace icheetah::ckks

#endif  // ICHEETAH_CKKS_POLY_OPS_H_
