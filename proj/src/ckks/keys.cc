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

#include "icheetah/ckks/keys.h"

#include <algorithm>

#include "icheetah/ckks/poly_ops.h"
#include "icheetah/ckks/sampling.h"
#include "icheetah/ckks/serialization.h"
#include "icheetah/common/error.h"

namespace icheetah::ckks {

SecretKey SecretKey::FromTernary(const Context& ctx, std::vector<std::int8_t> coeffs) {
  if (coeffs.size() != ctx.ring_degree()) {
    throw DimensionError("secret key length differs from ring degree");
  }
  for (std::int8_t c : coeffs) {
    if (c < -1 || c > 1) throw FormatError("secret key is not ternary");
  }
  SecretKey sk;
  sk.coeffs = std::move(coeffs);
  const std::size_t limbs = ctx.params().modulus_chain.size();
  sk.ntt = LiftSigned<std::int8_t>(ctx, sk.coeffs, limbs);
  ctx.ToNtt(sk.ntt);
  sk.square_ntt = sk.ntt;
  MulPointwiseInPlace(ctx, sk.square_ntt, sk.ntt);
  sk.square = sk.square_ntt;
  ctx.FromNtt(sk.square);
  return sk;
}

int SecretKey::hamming_weight() const {
  return static_cast<int>(std::count_if(coeffs.begin(), coeffs.end(),
                                        [](std::int8_t c) { return c != 0; }));
}

PublicKey PublicKey::FromNtt(const Context& ctx, Poly p0_ntt, Poly p1_ntt) {
  PublicKey pk;
  pk.p0 = std::move(p0_ntt);
  pk.p1 = std::move(p1_ntt);
  pk.p0_shoup.resize(pk.p0.data().size());
  pk.p1_shoup.resize(pk.p1.data().size());
  const std::size_t n = ctx.ring_degree();
  for (std::size_t i = 0; i < pk.p0.limb_count(); ++i) {
    const Modulus& q = ctx.modulus(i);
    for (std::size_t k = 0; k < n; ++k) {
      pk.p0_shoup[i * n + k] = q.ShoupPrecompute(pk.p0.limb(i)[k]);
      pk.p1_shoup[i * n + k] = q.ShoupPrecompute(pk.p1.limb(i)[k]);
    }
  }
  pk.fingerprint = Sha256(SerializePublicKey(ctx, pk));
  return pk;
}

const SecretKey& KeySet::secret_key() const {
  if (!secret) throw KeyMismatchError("secret key not loaded");
  return *secret;
}

const RelinKey& KeySet::relin_key() const {
  if (!relin) throw KeyMismatchError("relinearization key not loaded");
  return *relin;
}

namespace {

// Returns (-a*s + e + extra, a) in NTT form; `extra` is NTT form or null.
std::pair<Poly, Poly> RlweSample(const Context& ctx, const SecretKey& sk,
                                 const GaussianSampler& gauss, Prng& prng,
                                 const Poly* extra) {
  const std::size_t limbs = ctx.params().modulus_chain.size();
  const std::size_t n = ctx.ring_degree();
  Poly a = SampleUniformPoly(ctx, limbs, prng);
  std::vector<std::int64_t> e(n);
  SampleGaussian(prng, gauss, e);
  Poly b = LiftSigned<std::int64_t>(ctx, e, limbs);
  ctx.ToNtt(a);
  ctx.ToNtt(b);
  Poly as = a;
  MulPointwiseInPlace(ctx, as, sk.ntt);
  SubInPlace(ctx, b, as);
  if (extra != nullptr) AddInPlace(ctx, b, *extra);
  return {std::move(b), std::move(a)};
}

}  // namespace

KeySet GenerateKeys(const ContextPtr& context, std::optional<Seed> seed) {
  if (!context) throw ParameterError("null context");
  const Context& ctx = *context;
  const Seed used = seed.value_or(Prng::RandomSeed());
  Prng prng(used, 0);
  const std::size_t n = ctx.ring_degree();
  const std::size_t limbs = ctx.params().modulus_chain.size();
  const GaussianSampler gauss(ctx.params().noise_stddev);

  std::vector<std::int8_t> s(n);
  do {
    SampleTernary(prng, s);
  } while (std::all_of(s.begin(), s.end(), [](std::int8_t c) { return c == 0; }));

  KeySet keys;
  keys.context = context;
  keys.seed = used;
  keys.secret = SecretKey::FromTernary(ctx, std::move(s));

  auto [p0, p1] = RlweSample(ctx, *keys.secret, gauss, prng, nullptr);
  keys.public_key = PublicKey::FromNtt(ctx, std::move(p0), std::move(p1));

  RelinKey rlk;
  rlk.params_digest = ctx.params_digest();
  const int digits = ctx.relin_digit_count(ctx.max_level());
  for (int j = 0; j < digits; ++j) {
    // 2^(16j) * s^2
    Poly gadget = keys.secret->square_ntt;
    std::vector<std::uint64_t> factor(limbs);
    for (std::size_t i = 0; i < limbs; ++i) {
      factor[i] = ctx.modulus(i).Pow(2, static_cast<std::uint64_t>(kRelinDigitBits) * j);
    }
    MulScalarInPlace(ctx, gadget, factor);
    rlk.digits.push_back(RlweSample(ctx, *keys.secret, gauss, prng, &gadget));
  }
  keys.relin = std::move(rlk);
  return keys;
}

}  // namespace icheetah::ckks
