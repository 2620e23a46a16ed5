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

#include "icheetah/ckks/encryptor.h"

#include <algorithm>
#include <vector>

#include "icheetah/ckks/encoder.h"
#include "icheetah/ckks/stats.h"
#include "icheetah/common/error.h"

namespace icheetah::ckks {
namespace {

void CheckPlaintext(const Context& ctx, const Plaintext& pt) {
  if (pt.level < 0 || pt.level > ctx.max_level()) {
    throw LevelError("plaintext level outside the modulus chain");
  }
  const std::size_t limbs = static_cast<std::size_t>(pt.level) + 1;
  if (pt.poly.limb_count() != limbs || pt.poly.ring_degree() != ctx.ring_degree()) {
    throw LevelError("plaintext limb count does not match its level");
  }
}

}  // namespace

Encryptor::Encryptor(ContextPtr context, const PublicKey& public_key)
    : context_(std::move(context)),
      public_key_(&public_key),
      gaussian_(context_->params().noise_stddev) {}

Encryptor::Encryptor(ContextPtr context, const PublicKey& public_key,
                     const SecretKey& secret_key)
    : Encryptor(std::move(context), public_key) {
  secret_key_ = &secret_key;
}

Ciphertext Encryptor::Encrypt(const Plaintext& pt, Prng& prng) const {
  const Context& ctx = *context_;
  CheckPlaintext(ctx, pt);
  const std::size_t limbs = static_cast<std::size_t>(pt.level) + 1;
  const std::size_t n = ctx.ring_degree();

  std::vector<std::int8_t> v(n);
  SampleTernary(prng, v);
  std::vector<std::int64_t> e0(n), e1(n);
  SampleGaussian(prng, gaussian_, e0);
  SampleGaussian(prng, gaussian_, e1);

  Ciphertext ct;
  ct.level = pt.level;
  ct.scale = pt.scale;
  ct.parts.assign(2, Poly(n, limbs));
  std::vector<std::uint64_t> v_ntt(n);
  for (std::size_t i = 0; i < limbs; ++i) {
    const Modulus& q = ctx.modulus(i);
    const std::uint64_t qv = q.value();
    for (std::size_t k = 0; k < n; ++k) v_ntt[k] = q.FromSigned(v[k]);
    ctx.ntt(i).Forward(v_ntt);
    auto c0 = ct.parts[0].limb(i);
    auto c1 = ct.parts[1].limb(i);
    auto pk0 = public_key_->p0.limb(i);
    auto pk1 = public_key_->p1.limb(i);
    const std::uint64_t* pk0_shoup = public_key_->p0_shoup.data() + i * n;
    const std::uint64_t* pk1_shoup = public_key_->p1_shoup.data() + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      c0[k] = q.MulShoup(v_ntt[k], pk0[k], pk0_shoup[k]);
      c1[k] = q.MulShoup(v_ntt[k], pk1[k], pk1_shoup[k]);
    }
    ctx.ntt(i).Inverse(c0);
    ctx.ntt(i).Inverse(c1);
    auto m = pt.poly.limb(i);
    for (std::size_t k = 0; k < n; ++k) {
      c0[k] = q.Add(q.Add(c0[k], q.FromSigned(e0[k])), m[k]);
      const std::uint64_t s = c1[k] + q.FromSigned(e1[k]);
      c1[k] = s >= qv ? s - qv : s;
    }
  }
  stats::CountEncryption();
  return ct;
}

Ciphertext Encryptor::EncryptSymmetric(const Plaintext& pt, Prng& prng) const {
  if (secret_key_ == nullptr) throw KeyMismatchError("symmetric encryption needs the secret key");
  const Context& ctx = *context_;
  CheckPlaintext(ctx, pt);
  const std::size_t limbs = static_cast<std::size_t>(pt.level) + 1;
  const std::size_t n = ctx.ring_degree();

  Ciphertext ct;
  ct.level = pt.level;
  ct.scale = pt.scale;
  ct.parts.assign(2, Poly(n, limbs));
  ct.parts[1] = SampleUniformPoly(ctx, limbs, prng);
  std::vector<std::int64_t> e(n);
  SampleGaussian(prng, gaussian_, e);
  std::vector<std::uint64_t> as(n);
  for (std::size_t i = 0; i < limbs; ++i) {
    const Modulus& q = ctx.modulus(i);
    auto a = ct.parts[1].limb(i);
    auto s = secret_key_->ntt.limb(i);
    std::copy(a.begin(), a.end(), as.begin());
    ctx.ntt(i).Forward(as);
    for (std::size_t k = 0; k < n; ++k) as[k] = q.Mul(as[k], s[k]);
    ctx.ntt(i).Inverse(as);
    auto c0 = ct.parts[0].limb(i);
    auto m = pt.poly.limb(i);
    for (std::size_t k = 0; k < n; ++k) {
      c0[k] = q.Add(q.Sub(q.FromSigned(e[k]), as[k]), m[k]);
    }
  }
  stats::CountEncryption();
  return ct;
}

Ciphertext Encryptor::EncryptZero(int level, double scale, Prng& prng) const {
  Encoder encoder(context_);
  return Encrypt(encoder.EncodeScalar(0.0, level, scale), prng);
}

}  // namespace icheetah::ckks
