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

#include "icheetah/ckks/encoder.h"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "icheetah/ckks/ntt.h"
#include "icheetah/common/error.h"

namespace icheetah::ckks {
namespace {

using Complex = std::complex<double>;

class ToyEncoderTest : public ::testing::Test {
 protected:
  ContextPtr ctx_ = Context::Create(CkksParams::ToyInsecure());
  Encoder encoder_{ctx_};
};

TEST(EncoderTest, ScalarZeroIsZeroPolynomial) {
  auto ctx = Context::Create(CkksParams::Default());
  Encoder encoder(ctx);
  Plaintext pt = encoder.EncodeScalar(0.0, ctx->max_level(), ctx->default_scale());
  for (auto v : pt.poly.data()) EXPECT_EQ(v, 0u);
  EXPECT_EQ(encoder.DecodeScalar(pt), 0.0);
}

TEST(EncoderTest, ScalarRoundTrips) {
  auto ctx = Context::Create(CkksParams::Default());
  Encoder encoder(ctx);
  const double scale = ctx->default_scale();
  for (double v : {127.0, 5.0, -3.25, 255.0}) {
    Plaintext pt = encoder.EncodeScalar(v, ctx->max_level(), scale);
    EXPECT_NEAR(encoder.DecodeScalar(pt), v, 1e-6);
    // The constant occupies every slot.
    for (const Complex& z : encoder.Decode(pt)) {
      EXPECT_NEAR(z.real(), v, 1e-6);
      EXPECT_NEAR(z.imag(), 0.0, 1e-6);
    }
  }
}

TEST(EncoderTest, ScalarCoefficientIsRoundedProduct) {
  auto ctx = Context::Create(CkksParams::Default());
  Encoder encoder(ctx);
  Plaintext pt = encoder.EncodeScalar(-1.5, 0, 2.0 + 1.0 / 3.0);
  // round(-3.5) = -4 (half away from zero).
  EXPECT_EQ(pt.poly.limb(0)[0], ctx->modulus(0).value() - 4);
  for (std::size_t k = 1; k < ctx->ring_degree(); ++k) EXPECT_EQ(pt.poly.limb(0)[k], 0u);
}

TEST(EncoderTest, ScalarOverflowIsRejected) {
  auto ctx = Context::Create(CkksParams::Default());
  Encoder encoder(ctx);
  EXPECT_THROW(encoder.EncodeScalar(std::ldexp(1.0, 80), ctx->max_level(),
                                    ctx->default_scale()),
               EncodingOverflowError);
  // A single ~36-bit prime cannot hold 2^10 at scale 2^36.
  EXPECT_THROW(encoder.EncodeScalar(1024.0, 0, ctx->default_scale()),
               EncodingOverflowError);
}

TEST_F(ToyEncoderTest, VectorRoundTrips) {
  std::vector<Complex> v = {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}, {7, 0}, {8, 0}};
  Plaintext pt = encoder_.EncodeVector(v, ctx_->max_level(), std::ldexp(1.0, 20));
  auto out = encoder_.Decode(pt);
  ASSERT_EQ(out.size(), 8u);
  for (std::size_t j = 0; j < v.size(); ++j) {
    EXPECT_NEAR(out[j].real(), v[j].real(), 1e-5);
    EXPECT_NEAR(out[j].imag(), 0.0, 1e-5);
  }
}

TEST_F(ToyEncoderTest, ComplexVectorRoundTripsAtDefault) {
  auto ctx = Context::Create(CkksParams::Default());
  Encoder encoder(ctx);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-10, 10);
  std::vector<Complex> v(64);
  for (auto& z : v) z = {dist(rng), dist(rng)};
  Plaintext pt = encoder.EncodeVector(v, ctx->max_level(), ctx->default_scale());
  auto out = encoder.Decode(pt);
  for (std::size_t j = 0; j < v.size(); ++j) EXPECT_LT(std::abs(out[j] - v[j]), 1e-5);
  for (std::size_t j = v.size(); j < out.size(); ++j) EXPECT_LT(std::abs(out[j]), 1e-5);
}

TEST_F(ToyEncoderTest, PaddingZerosEncodeToZero) {
  std::vector<Complex> zeros(3);
  Plaintext pt = encoder_.EncodeVector(zeros, 1, 1024.0);
  for (auto v : pt.poly.data()) EXPECT_EQ(v, 0u);
  Plaintext empty = encoder_.EncodeVector({}, 1, 1024.0);
  for (auto v : empty.poly.data()) EXPECT_EQ(v, 0u);
}

TEST_F(ToyEncoderTest, TooLongVectorIsDimensionError) {
  std::vector<Complex> v(9);
  EXPECT_THROW(encoder_.EncodeVector(v, 1, 1024.0), DimensionError);
}

// Encode two vectors, multiply the polynomials by the schoolbook negacyclic
// product per limb, and decode at the product scale: slots multiply.
TEST_F(ToyEncoderTest, NegacyclicConvolutionMultipliesSlots) {
  std::vector<Complex> a = {{1.5, 0}, {-2, 0}, {3, 0}, {0.5, 0}, {1, 0}, {2, 0}, {-1, 0}, {4, 0}};
  std::vector<Complex> b = {{2, 0}, {1, 0}, {-0.5, 0}, {3, 0}, {1, 0}, {-2, 0}, {2.5, 0}, {1, 0}};
  const double scale = 4096.0;
  Plaintext pa = encoder_.EncodeVector(a, 1, scale);
  Plaintext pb = encoder_.EncodeVector(b, 1, scale);
  Plaintext prod{Poly(16, 2), scale * scale, 1, false};
  for (std::size_t i = 0; i < 2; ++i) {
    auto c = NegacyclicMultiplySchoolbook(pa.poly.limb(i), pb.poly.limb(i), ctx_->modulus(i));
    std::copy(c.begin(), c.end(), prod.poly.limb(i).begin());
  }
  auto out = encoder_.Decode(prod);
  for (std::size_t j = 0; j < a.size(); ++j) {
    // Rounding error at scale 2^12 is about 2^-12 per coefficient.
    EXPECT_NEAR(out[j].real(), (a[j] * b[j]).real(), 0.05) << j;
  }
}

}  // namespace
}  // namespace icheetah::ckks
