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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "icheetah/ckks/decryptor.h"
#include "icheetah/ckks/encoder.h"
#include "icheetah/ckks/encryptor.h"
#include "icheetah/ckks/evaluator.h"
#include "icheetah/ckks/keys.h"
#include "icheetah/ckks/serialization.h"
#include "icheetah/common/bytes.h"
#include "icheetah/common/error.h"

namespace icheetah::ckks {
namespace {

Bytes CiphertextBytes(const Ciphertext& ct) {
  ByteWriter w;
  WriteCiphertext(w, ct);
  return w.Take();
}

// Largest centered coefficient of decrypt(ct) minus round(value * scale) at
// coefficient 0: the raw noise magnitude before scaling.
double NoiseMagnitude(const Context& ctx, const Decryptor& dec, const Ciphertext& ct,
                      double value) {
  Plaintext pt = dec.Decrypt(ct);
  double worst = 0;
  for (std::size_t k = 0; k < ctx.ring_degree(); ++k) {
    double c = static_cast<double>(ctx.CenteredCoefficient(pt.poly, k, pt.level));
    if (k == 0) c -= std::round(value * ct.scale);
    worst = std::max(worst, std::fabs(c));
  }
  return worst;
}

class SchemeTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    ctx_ = Context::Create(CkksParams::Default());
    keys_ = new KeySet(GenerateKeys(ctx_, Prng::SeedFromU64(42)));
  }
  static void TearDownTestSuite() {
    delete keys_;
    keys_ = nullptr;
    ctx_.reset();
  }

  Ciphertext Enc(double v, int level = -1) {
    if (level < 0) level = ctx_->max_level();
    return encryptor_.Encrypt(encoder_.EncodeScalar(v, level, ctx_->default_scale()), prng_);
  }
  double Dec(const Ciphertext& ct) { return decryptor_.DecryptScalar(ct); }

  static ContextPtr ctx_;
  static KeySet* keys_;
  Encoder encoder_{ctx_};
  Encryptor encryptor_{ctx_, keys_->public_key};
  Decryptor decryptor_{ctx_, keys_->secret_key()};
  Evaluator evaluator_{ctx_};
  Prng prng_{Prng::SeedFromU64(9)};
};

ContextPtr SchemeTest::ctx_;
KeySet* SchemeTest::keys_ = nullptr;

TEST(KeygenTest, SeededKeygenIsBitIdentical) {
  auto ctx = Context::Create(CkksParams::ToyInsecure());
  const Seed seed = Prng::SeedFromU64(0);
  KeySet a = GenerateKeys(ctx, seed);
  KeySet b = GenerateKeys(ctx, seed);
  EXPECT_EQ(SerializeSecretKey(*ctx, a.secret_key()), SerializeSecretKey(*ctx, b.secret_key()));
  EXPECT_EQ(SerializePublicKey(*ctx, a.public_key), SerializePublicKey(*ctx, b.public_key));
  EXPECT_EQ(SerializeRelinKey(*ctx, a.relin_key()), SerializeRelinKey(*ctx, b.relin_key()));
  KeySet c = GenerateKeys(ctx, Prng::SeedFromU64(1));
  EXPECT_NE(SerializePublicKey(*ctx, a.public_key), SerializePublicKey(*ctx, c.public_key));
  EXPECT_GT(a.secret_key().hamming_weight(), 0);
}

TEST(KeygenTest, InvalidParamsAreRejected) {
  CkksParams p = CkksParams::ToyInsecure();
  p.ring_degree = 15;
  EXPECT_THROW(Context::Create(p), ParameterError);
  p = CkksParams::ToyInsecure();
  p.ring_degree = 4;
  EXPECT_THROW(Context::Create(p), ParameterError);
  p = CkksParams::ToyInsecure();
  p.modulus_chain[1] = p.modulus_chain[0];
  EXPECT_THROW(Context::Create(p), ParameterError);
  p = CkksParams::ToyInsecure();
  p.modulus_chain[0] = 1048573;  // prime, but not 1 mod 32
  EXPECT_THROW(Context::Create(p), ParameterError);
  p = CkksParams::Default();
  p.log2_scale = 40;  // exceeds every ~36-bit chain prime
  EXPECT_THROW(Context::Create(p), ParameterError);
  EXPECT_THROW(CkksParams::FromPreset("huge"), ParameterError);
}

TEST_F(SchemeTest, PublicKeyRelationHoldsWithSmallError) {
  // pk0 + pk1 * s must be the small keygen error.
  Poly t = keys_->public_key.p1;
  const SecretKey& sk = keys_->secret_key();
  for (std::size_t i = 0; i < 3; ++i) {
    const Modulus& q = ctx_->modulus(i);
    auto tl = t.limb(i);
    auto p0 = keys_->public_key.p0.limb(i);
    auto s = sk.ntt.limb(i);
    for (std::size_t k = 0; k < tl.size(); ++k) tl[k] = q.Add(q.Mul(tl[k], s[k]), p0[k]);
  }
  ctx_->FromNtt(t);
  for (std::size_t k = 0; k < ctx_->ring_degree(); ++k) {
    const i128 e = ctx_->CenteredCoefficient(t, k, ctx_->max_level());
    ASSERT_LE(static_cast<double>(e < 0 ? -e : e), 6 * 3.2 + 1);
  }
}

TEST_F(SchemeTest, FreshZeroNoiseIsWithinBound) {
  const double bound = 64 * 3.2 * std::sqrt(4096.0);
  for (int t = 0; t < 5; ++t) {
    Ciphertext z = encryptor_.EncryptZero(ctx_->max_level(), ctx_->default_scale(), prng_);
    EXPECT_LT(NoiseMagnitude(*ctx_, decryptor_, z, 0.0), bound);
    EXPECT_NEAR(Dec(z), 0.0, 1e-6);
  }
}

TEST_F(SchemeTest, SymmetricEncryptionNoiseIsTheGaussianAlone) {
  const Encryptor sym(ctx_, keys_->public_key, keys_->secret_key());
  EXPECT_TRUE(sym.has_secret_key());
  for (int level = 0; level <= ctx_->max_level(); ++level) {
    const double scale = level == 0 ? std::ldexp(1.0, 20) : ctx_->default_scale();
    Ciphertext ct = sym.EncryptSymmetric(encoder_.EncodeScalar(42, level, scale), prng_);
    EXPECT_EQ(ct.level, level);
    // Truncation of the sampler bounds every coefficient.
    EXPECT_LE(NoiseMagnitude(*ctx_, decryptor_, ct, 42), std::ceil(6 * 3.2));
  }
  Ciphertext a = sym.EncryptSymmetric(encoder_.EncodeScalar(5, 2, ctx_->default_scale()), prng_);
  Ciphertext b = sym.EncryptSymmetric(encoder_.EncodeScalar(5, 2, ctx_->default_scale()), prng_);
  EXPECT_NE(CiphertextBytes(a), CiphertextBytes(b));
  EXPECT_NEAR(Dec(evaluator_.Add(a, Enc(3))), 8, 1e-6);
  EXPECT_THROW(encryptor_.EncryptSymmetric(encoder_.EncodeScalar(1, 2, ctx_->default_scale()),
                                           prng_),
               KeyMismatchError);
}

TEST_F(SchemeTest, RoundTripEveryPixelValue) {
  for (int v = 0; v < 256; ++v) {
    EXPECT_LT(std::fabs(Dec(Enc(v)) - v), 0.5) << v;
  }
  EXPECT_NEAR(Dec(Enc(200)), 200, 0.5);
  EXPECT_NEAR(Dec(Enc(7)), 7, 0.01);
}

TEST_F(SchemeTest, FastScalarPathAgreesWithFullDecryption) {
  Ciphertext ct = Enc(123.25);
  Plaintext pt = decryptor_.Decrypt(ct);
  EXPECT_EQ(ctx_->CenteredCoefficient(pt.poly, 0, pt.level),
            decryptor_.DecryptConstantCoefficient(ct));
  Ciphertext sq = evaluator_.Mul(ct, ct);
  Plaintext pt2 = decryptor_.Decrypt(sq);
  EXPECT_EQ(ctx_->CenteredCoefficient(pt2.poly, 0, pt2.level),
            decryptor_.DecryptConstantCoefficient(sq));
}

TEST_F(SchemeTest, EncryptionIsProbabilistic) {
  std::set<Bytes> seen;
  for (int t = 0; t < 100; ++t) {
    Ciphertext ct = Enc(77);
    EXPECT_NEAR(Dec(ct), 77, 0.01);
    seen.insert(CiphertextBytes(ct));
  }
  EXPECT_EQ(seen.size(), 100u);
}

TEST_F(SchemeTest, EncryptRejectsBadLevel) {
  Plaintext pt = encoder_.EncodeScalar(1, 1, ctx_->default_scale());
  pt.level = 2;
  EXPECT_THROW(encryptor_.Encrypt(pt, prng_), LevelError);
  pt.level = 5;
  EXPECT_THROW(encryptor_.Encrypt(pt, prng_), LevelError);
}

TEST_F(SchemeTest, DecryptRejectsUnknownDegree) {
  Ciphertext ct = Enc(1);
  ct.parts.push_back(ct.parts[0]);
  ct.parts.push_back(ct.parts[0]);
  EXPECT_THROW(decryptor_.Decrypt(ct), FormatError);
  ct.parts.resize(1);
  EXPECT_THROW(decryptor_.Decrypt(ct), FormatError);
}

TEST_F(SchemeTest, AdditiveHomomorphism) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int x = static_cast<int>(rng() % 256), y = static_cast<int>(rng() % 256);
    Ciphertext a = Enc(x), b = Enc(y);
    EXPECT_NEAR(Dec(evaluator_.Add(a, b)), x + y, 0.01);
    EXPECT_NEAR(Dec(evaluator_.Sub(a, b)), x - y, 0.01);
  }
  Ciphertext a = Enc(31);
  EXPECT_NEAR(Dec(evaluator_.Sub(a, a)), 0.0, 0.01);
}

TEST_F(SchemeTest, AddRejectsMismatchedLevelAndScale) {
  Ciphertext a = Enc(3);
  Ciphertext b = Enc(4, 1);
  EXPECT_THROW(evaluator_.Add(a, b), LevelError);
  Ciphertext c = Enc(4);
  c.scale *= 1.001;
  EXPECT_THROW(evaluator_.Add(a, c), ScaleError);
  Ciphertext d = Enc(4);
  d.scale *= 1 + 1e-9;
  EXPECT_NO_THROW(evaluator_.Add(a, d));
}

TEST_F(SchemeTest, AddNoiseIsBoundedBySumOfOperandNoise) {
  for (int t = 0; t < 10; ++t) {
    Ciphertext a = Enc(10 + t), b = Enc(100 - t);
    const double ea = NoiseMagnitude(*ctx_, decryptor_, a, 10 + t);
    const double eb = NoiseMagnitude(*ctx_, decryptor_, b, 100 - t);
    const double es = NoiseMagnitude(*ctx_, decryptor_, evaluator_.Add(a, b), 110);
    // Message rounding contributes at most one unit.
    EXPECT_LE(es, ea + eb + 1.0);
  }
}

TEST_F(SchemeTest, PlainOperations) {
  const double scale = ctx_->default_scale();
  Ciphertext a = Enc(100);
  EXPECT_NEAR(Dec(evaluator_.AddPlain(a, encoder_.EncodeScalar(50, 2, scale))), 150, 0.01);

  Ciphertext m = evaluator_.MulPlain(Enc(9), encoder_.EncodeScalar(1.0 / 9.0, 2, scale));
  Ciphertext r = evaluator_.Rescale(m);
  EXPECT_EQ(r.level, 1);
  EXPECT_NEAR(Dec(r), 1.0, 0.001);
  EXPECT_DOUBLE_EQ(r.scale, scale * scale / static_cast<double>(ctx_->modulus(2).value()));

  Ciphertext z = evaluator_.Rescale(evaluator_.MulPlain(Enc(9), encoder_.EncodeScalar(0, 2, scale)));
  EXPECT_NEAR(Dec(z), 0.0, 1e-3);
}

TEST_F(SchemeTest, NonConstantPlaintextMultiplication) {
  const double scale = ctx_->default_scale();
  std::vector<std::complex<double>> v(ctx_->ring_degree() / 2, {3.0, 0.0});
  Plaintext pt = encoder_.EncodeVector(v, 2, scale);
  Ciphertext r = evaluator_.Rescale(evaluator_.MulPlain(Enc(7), pt));
  EXPECT_NEAR(Dec(r), 21.0, 0.01);
  Ciphertext s = evaluator_.AddPlain(Enc(7), pt);
  EXPECT_NEAR(Dec(s), 10.0, 0.01);
}

TEST_F(SchemeTest, MulPlainRejectsScaleOverflow) {
  Ciphertext a = Enc(1, 1);
  EXPECT_THROW(evaluator_.MulPlain(a, encoder_.EncodeScalar(1, 1, std::ldexp(1.0, 40))),
               ScaleError);
}

TEST_F(SchemeTest, CiphertextMultiplication) {
  Ciphertext a = Enc(3), b = Enc(4);
  Ciphertext d2 = evaluator_.Mul(a, b);
  ASSERT_EQ(d2.degree(), 2);
  const double direct = Dec(d2);
  EXPECT_NEAR(direct, 12, 0.1);
  Ciphertext d1 = evaluator_.Relinearize(d2, keys_->relin_key());
  ASSERT_EQ(d1.degree(), 1);
  EXPECT_NEAR(Dec(d1), direct, 0.05);
  EXPECT_NEAR(Dec(d1), 12, 0.05);

  Ciphertext five = Enc(5);
  Ciphertext sq = evaluator_.Rescale(evaluator_.Relinearize(evaluator_.Square(five), keys_->relin_key()));
  EXPECT_NEAR(Dec(sq), 25, 0.1);
  EXPECT_NEAR(Dec(evaluator_.Mul(Enc(200), Enc(0))), 0, 0.1);
  EXPECT_THROW(evaluator_.Mul(d2, Enc(1)), UnsupportedError);
}

TEST_F(SchemeTest, MultiplicativeHomomorphism) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    const int x = static_cast<int>(rng() % 256), y = static_cast<int>(rng() % 256);
    Ciphertext p = evaluator_.Rescale(
        evaluator_.Relinearize(evaluator_.Mul(Enc(x), Enc(y)), keys_->relin_key()));
    EXPECT_NEAR(Dec(p), x * y, 0.1);
  }
}

TEST_F(SchemeTest, RelinearizeContracts) {
  Ciphertext a = Enc(3);
  EXPECT_EQ(evaluator_.Relinearize(a, keys_->relin_key()), a);
  auto toy = Context::Create(CkksParams::ToyInsecure());
  KeySet other = GenerateKeys(toy, Prng::SeedFromU64(1));
  EXPECT_THROW(evaluator_.Relinearize(evaluator_.Mul(a, a), other.relin_key()),
               KeyMismatchError);
}

TEST_F(SchemeTest, RescaleAtLevelZeroIsExhausted) {
  Ciphertext a =
      encryptor_.Encrypt(encoder_.EncodeScalar(3, 0, std::ldexp(1.0, 20)), prng_);
  EXPECT_NEAR(Dec(a), 3.0, 1e-3);
  EXPECT_THROW(evaluator_.Rescale(a), LevelError);
}

TEST_F(SchemeTest, RescalePreservesValueAtLevelOne) {
  Ciphertext m = evaluator_.MulPlain(Enc(50, 1), encoder_.EncodeScalar(2.0, 1, std::ldexp(1.0, 20)));
  Ciphertext r = evaluator_.Rescale(m);
  EXPECT_EQ(r.level, 0);
  EXPECT_NEAR(Dec(r), 100.0, 100.0 * std::ldexp(1.0, -10));
}

TEST_F(SchemeTest, MonomialRotatedZeroStaysZero) {
  Ciphertext z = encryptor_.EncryptZero(2, ctx_->default_scale(), prng_);
  for (std::size_t k : {0u, 1u, 4095u, 4096u, 8191u}) {
    Ciphertext acc = Enc(42);
    evaluator_.AddMonomialProductInPlace(acc, z, k);
    EXPECT_NEAR(Dec(acc), 42.0, 0.01) << k;
  }
}

}  // namespace
}  // namespace icheetah::ckks
