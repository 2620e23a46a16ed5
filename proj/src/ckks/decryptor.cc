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

#include "icheetah/ckks/decryptor.h"

#include "icheetah/ckks/poly_ops.h"
#include "icheetah/ckks/stats.h"
#include "icheetah/common/error.h"

namespace icheetah::ckks {

Decryptor::Decryptor(ContextPtr context, const SecretKey& secret_key)
    : context_(std::move(context)), secret_key_(&secret_key) {}

void Decryptor::CheckCiphertext(const Ciphertext& ct) const {
  if (ct.parts.size() < 2 || ct.parts.size() > 3) {
    throw FormatError("cannot decrypt a ciphertext with " +
                      std::to_string(ct.parts.size()) + " parts");
  }
  if (ct.level < 0 || ct.level > context_->max_level()) {
    throw LevelError("ciphertext level outside the modulus chain");
  }
  for (const Poly& p : ct.parts) {
    if (p.limb_count() != static_cast<std::size_t>(ct.level) + 1 ||
        p.ring_degree() != context_->ring_degree()) {
      throw FormatError("ciphertext part shape does not match its level");
    }
  }
}

Plaintext Decryptor::Decrypt(const Ciphertext& ct) const {
  CheckCiphertext(ct);
  const Context& ctx = *context_;
  const std::size_t limbs = static_cast<std::size_t>(ct.level) + 1;

  Poly s = secret_key_->ntt;
  s.Truncate(limbs);
  Poly acc = ct.parts[1];
  ctx.ToNtt(acc);
  MulPointwiseInPlace(ctx, acc, s);
  if (ct.parts.size() == 3) {
    Poly s2 = secret_key_->square_ntt;
    s2.Truncate(limbs);
    Poly c2 = ct.parts[2];
    ctx.ToNtt(c2);
    MulAccumulate(ctx, acc, c2, s2);
  }
  ctx.FromNtt(acc);
  AddInPlace(ctx, acc, ct.parts[0]);
  stats::CountDecryption();

  Plaintext pt;
  pt.poly = std::move(acc);
  pt.scale = ct.scale;
  pt.level = ct.level;
  return pt;
}

i128 Decryptor::DecryptConstantCoefficient(const Ciphertext& ct) const {
  CheckCiphertext(ct);
  const Context& ctx = *context_;
  const std::size_t n = ctx.ring_degree();
  const std::vector<std::int8_t>& s = secret_key_->coeffs;
  std::uint64_t residues[256];
  for (int i = 0; i <= ct.level; ++i) {
    const Modulus& q = ctx.modulus(i);
    const std::uint64_t qv = q.value();
    // coef0(c1 * s) = c1[0] s[0] - sum_{k>=1} c1[k] s[N-k]
    auto c1 = ct.parts[1].limb(i);
    std::uint64_t plus = 0, minus = 0;
    auto accumulate = [&](std::uint64_t x, int sign) {
      if (sign > 0) {
        plus += x;
        if (plus >= qv) plus -= qv;
      } else if (sign < 0) {
        minus += x;
        if (minus >= qv) minus -= qv;
      }
    };
    accumulate(c1[0], s[0]);
    for (std::size_t k = 1; k < n; ++k) accumulate(c1[k], -s[n - k]);
    std::uint64_t r = q.Add(ct.parts[0].limb(i)[0], q.Sub(plus, minus));
    if (ct.parts.size() == 3) {
      auto c2 = ct.parts[2].limb(i);
      auto s2 = secret_key_->square.limb(i);
      std::uint64_t t = q.Mul(c2[0], s2[0]);
      for (std::size_t k = 1; k < n; ++k) t = q.Sub(t, q.Mul(c2[k], s2[n - k]));
      r = q.Add(r, t);
    }
    residues[i] = r;
  }
  stats::CountDecryption();
  return ctx.CenteredFromResidues({residues, static_cast<std::size_t>(ct.level) + 1},
                                  ct.level);
}

double Decryptor::DecryptScalar(const Ciphertext& ct) const {
  return static_cast<double>(DecryptConstantCoefficient(ct)) / ct.scale;
}

}  // namespace icheetah::ckks
