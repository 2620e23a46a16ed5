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

#include "icheetah/ckks/context.h"

#include <bit>
#include <cmath>

#include "icheetah/ckks/serialization.h"
#include "icheetah/common/error.h"

namespace icheetah::ckks {

namespace {

int BitWidth128(u128 x) {
  const auto hi = static_cast<std::uint64_t>(x >> 64);
  if (hi != 0) return 64 + std::bit_width(hi);
  return std::bit_width(static_cast<std::uint64_t>(x));
}

}  // namespace

std::shared_ptr<const Context> Context::Create(const CkksParams& params) {
  params.Validate();
  if (params.log2_modulus() > 120) {
    throw ParameterError("modulus chain product must stay below 2^120");
  }
  return std::shared_ptr<const Context>(new Context(params));
}

Context::Context(const CkksParams& params) : params_(params) {
  const std::size_t limbs = params_.modulus_chain.size();
  moduli_.reserve(limbs);
  ntt_.reserve(limbs);
  for (std::uint64_t q : params_.modulus_chain) {
    moduli_.emplace_back(q);
    ntt_.emplace_back(params_.ring_degree, moduli_.back());
  }
  levels_.resize(limbs);
  for (std::size_t level = 0; level < limbs; ++level) {
    LevelData& d = levels_[level];
    d.product = 1;
    for (std::size_t i = 0; i <= level; ++i) d.product *= moduli_[i].value();
    for (std::size_t i = 0; i <= level; ++i) {
      const Modulus& q = moduli_[i];
      const u128 punctured = d.product / q.value();
      d.punctured.push_back(punctured);
      const std::uint64_t inv =
          q.Inverse(static_cast<std::uint64_t>(punctured % q.value()));
      d.punctured_inv.push_back(inv);
      d.punctured_inv_shoup.push_back(q.ShoupPrecompute(inv));
    }
    if (level > 0) {
      for (std::size_t i = 0; i < level; ++i) {
        const Modulus& q = moduli_[i];
        const std::uint64_t inv =
            q.Inverse(moduli_[level].value() % q.value());
        d.inv_last.push_back(inv);
        d.inv_last_shoup.push_back(q.ShoupPrecompute(inv));
      }
    }
    d.digits = (BitWidth128(d.product) + kRelinDigitBits - 1) / kRelinDigitBits;
  }
  digest_ = Sha256(SerializeParamsHeader(params_));
}

double Context::modulus_product_double(int level) const {
  return static_cast<double>(levels_[level].product);
}

u128 Context::ReconstructFromResidues(std::span<const std::uint64_t> residues,
                                      int level) const {
  const LevelData& d = levels_[level];
  u128 acc = 0;
  for (int i = 0; i <= level; ++i) {
    const Modulus& q = moduli_[i];
    const std::uint64_t t =
        q.MulShoup(residues[i], d.punctured_inv[i], d.punctured_inv_shoup[i]);
    acc += static_cast<u128>(t) * d.punctured[i];
    if (acc >= d.product) acc -= d.product;
  }
  return acc;
}

i128 Context::CenteredFromResidues(std::span<const std::uint64_t> residues,
                                   int level) const {
  const u128 x = ReconstructFromResidues(residues, level);
  const u128 q = levels_[level].product;
  if (x > q / 2) return -static_cast<i128>(q - x);
  return static_cast<i128>(x);
}

i128 Context::CenteredCoefficient(const Poly& poly, std::size_t index,
                                  int level) const {
  std::uint64_t residues[256];
  for (int i = 0; i <= level; ++i) residues[i] = poly.limb(i)[index];
  return CenteredFromResidues({residues, static_cast<std::size_t>(level) + 1},
                              level);
}

void Context::ToNtt(Poly& poly) const {
  if (poly.is_ntt()) return;
  for (std::size_t i = 0; i < poly.limb_count(); ++i) ntt_[i].Forward(poly.limb(i));
  poly.set_ntt(true);
}

void Context::FromNtt(Poly& poly) const {
  if (!poly.is_ntt()) return;
  for (std::size_t i = 0; i < poly.limb_count(); ++i) ntt_[i].Inverse(poly.limb(i));
  poly.set_ntt(false);
}

}  // namespace icheetah::ckks
