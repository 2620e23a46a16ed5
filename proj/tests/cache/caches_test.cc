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

#include "icheetah/cache/caches.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "icheetah/common/error.h"
#include "support/fixtures.h"

namespace icheetah::cache {
namespace {

using icheetah::testing::CiphertextBytes;
using icheetah::testing::DefaultCrypto;

const ckks::Seed kSeed = ckks::Prng::SeedFromU64(5);

TEST(RadixCacheTest, PowersDecryptToRadixPowers) {
  const auto& c = DefaultCrypto();
  RadixCache r2 = BuildRadixCache(c.encryptor, 2, kSeed);
  ASSERT_EQ(r2.powers.size(), 8u);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(c.Dec(r2.powers[i]), std::ldexp(1.0, static_cast<int>(i)), 0.01);
  }
  EXPECT_NEAR(c.Dec(r2.powers[3]), 8.0, 0.01);
  RadixCache r16 = BuildRadixCache(c.encryptor, 16, kSeed);
  ASSERT_EQ(r16.powers.size(), 2u);
  EXPECT_NEAR(c.Dec(r16.powers[1]), 16.0, 0.01);
}

TEST(ValueCacheTest, SecretKeyBuildsCarryOnlyGaussianNoise) {
  const auto& c = icheetah::testing::ToyCrypto();
  const ckks::Encryptor sym(c.ctx, c.keys.public_key, c.keys.secret_key());
  const ValueCache full = BuildFullCache(sym, kSeed);
  const double bound = std::ceil(6 * 3.2) / c.ctx->default_scale();
  for (int p = 0; p < kPixelValues; ++p) EXPECT_LE(std::abs(c.Dec(full.at(p)) - p), bound) << p;
  const RadixCache radix = BuildRadixCache(sym, 10, kSeed);
  EXPECT_LE(std::abs(c.Dec(radix.powers[2]) - 100), bound);
  const ZeroPool pool = BuildZeroPool(sym, 4, kSeed);
  for (const auto& z : pool.elements()) EXPECT_LE(std::abs(c.Dec(z)), bound);
}

TEST(ScanCacheTest, UniformImageCachesOneValue) {
  const auto& c = DefaultCrypto();
  std::vector<std::uint8_t> pixels(64, 90);
  ValueCache vc = BuildScanCache(pixels, c.encryptor, kSeed);
  EXPECT_EQ(vc.size(), 1u);
  EXPECT_EQ(vc.coverage(), std::vector<int>{90});
  EXPECT_NEAR(c.Dec(vc.at(90)), 90.0, 0.01);
  EXPECT_THROW(vc.at(91), CacheMissError);
}

TEST(ScanCacheTest, CoverageEqualsHistogramSupport) {
  const auto& c = DefaultCrypto();
  std::mt19937 rng(8);
  std::vector<std::uint8_t> pixels(300);
  for (auto& p : pixels) p = static_cast<std::uint8_t>(rng() % 40 * 5);
  std::set<int> support(pixels.begin(), pixels.end());
  ValueCache vc = BuildScanCache(pixels, c.encryptor, kSeed, 2);
  EXPECT_EQ(vc.coverage(), std::vector<int>(support.begin(), support.end()));
  for (int p : vc.coverage()) EXPECT_NEAR(c.Dec(vc.at(p)), p, 0.01);
}

TEST(ScanCacheTest, AllValuesGiveFullCoverage) {
  const auto& c = DefaultCrypto();
  std::vector<std::uint8_t> pixels(512);
  for (std::size_t i = 0; i < pixels.size(); ++i) pixels[i] = static_cast<std::uint8_t>(i % 256);
  ValueCache scan = BuildScanCache(pixels, c.encryptor, kSeed);
  ValueCache full = BuildFullCache(c.encryptor, kSeed);
  EXPECT_EQ(scan.size(), 256u);
  EXPECT_EQ(scan.coverage(), full.coverage());
}

TEST(ScanCacheTest, TopKKeepsMostFrequent) {
  const auto& c = DefaultCrypto();
  std::vector<std::uint8_t> pixels = {7, 7, 7, 3, 3, 200, 9, 9, 9, 9};
  ValueCache vc = BuildScanCache(pixels, c.encryptor, kSeed, 1, 2);
  EXPECT_EQ(vc.coverage(), (std::vector<int>{7, 9}));
}

TEST(ScanCacheTest, EmptyImageIsDomainError) {
  const auto& c = DefaultCrypto();
  std::vector<std::uint8_t> none;
  EXPECT_THROW(BuildScanCache(none, c.encryptor, kSeed), DomainError);
}

TEST(FullCacheTest, AllValuesPresentAndCorrect) {
  const auto& c = DefaultCrypto();
  ValueCache vc = BuildFullCache(c.encryptor, kSeed, 3);
  EXPECT_EQ(vc.size(), 256u);
  EXPECT_NEAR(c.Dec(vc.at(255)), 255.0, 0.01);
  for (int p = 0; p < 256; ++p) EXPECT_NEAR(c.Dec(vc.at(p)), p, 0.01);
}

TEST(FullCacheTest, DifferentSeedsGiveDistinctBytesEqualValues) {
  const auto& c = DefaultCrypto();
  ValueCache a = BuildFullCache(c.encryptor, ckks::Prng::SeedFromU64(1));
  ValueCache b = BuildFullCache(c.encryptor, ckks::Prng::SeedFromU64(2));
  for (int p : {0, 17, 255}) {
    EXPECT_NE(CiphertextBytes(a.at(p)), CiphertextBytes(b.at(p)));
    EXPECT_EQ(std::lround(c.Dec(a.at(p))), std::lround(c.Dec(b.at(p))));
  }
}

TEST(FullCacheTest, BuildIsIndependentOfWorkerCount) {
  const auto& c = DefaultCrypto();
  ValueCache a = BuildFullCache(c.encryptor, kSeed, 1);
  ValueCache b = BuildFullCache(c.encryptor, kSeed, 4);
  for (int p = 0; p < 256; ++p) ASSERT_EQ(a.at(p), b.at(p));
}

TEST(ZeroPoolTest, ElementsDecryptToZeroAndAreDistinct) {
  const auto& c = DefaultCrypto();
  ZeroPool pool = BuildZeroPool(c.encryptor, 32, kSeed);
  std::set<Bytes> seen;
  for (const auto& z : pool.elements()) {
    EXPECT_NEAR(c.Dec(z), 0.0, 1e-3);
    seen.insert(CiphertextBytes(z));
  }
  EXPECT_EQ(seen.size(), 32u);
}

TEST(ZeroPoolTest, DrawsAreUniform) {
  const auto& c = DefaultCrypto();
  ZeroPool pool = BuildZeroPool(c.encryptor, 16, kSeed);
  ckks::Prng prng(ckks::Prng::SeedFromU64(77));
  std::vector<int> counts(16, 0);
  const int draws = 10000;
  for (int t = 0; t < draws; ++t) ++counts[pool.DrawIndex(prng)];
  EXPECT_EQ(pool.draw_count(), static_cast<std::uint64_t>(draws));
  const double expected = draws / 16.0;
  double chi2 = 0;
  for (int n : counts) {
    EXPECT_GT(n, 0.7 * expected);
    EXPECT_LT(n, 1.3 * expected);
    chi2 += (n - expected) * (n - expected) / expected;
  }
  // 99.9th percentile of chi-square with 15 degrees of freedom.
  EXPECT_LT(chi2, 37.7);
}

TEST(ZeroPoolTest, DrawCopiesWithoutMutatingThePool) {
  const auto& c = DefaultCrypto();
  ZeroPool pool = BuildZeroPool(c.encryptor, 1, kSeed);
  const Bytes before = CiphertextBytes(pool.element(0));
  ckks::Prng prng(ckks::Prng::SeedFromU64(3));
  for (int t = 0; t < 5; ++t) {
    ckks::Ciphertext z = pool.Draw(prng);
    EXPECT_EQ(CiphertextBytes(z), before);
    EXPECT_NEAR(c.Dec(z), 0.0, 1e-3);
    z.parts[0].limb(0)[0] ^= 1;
  }
  EXPECT_EQ(CiphertextBytes(pool.element(0)), before);
}

TEST(ZeroPoolTest, EmptyPoolIsPoolError) {
  ZeroPool empty;
  ckks::Prng prng(ckks::Prng::SeedFromU64(3));
  EXPECT_THROW(empty.Draw(prng), PoolError);
  const auto& c = DefaultCrypto();
  EXPECT_THROW(BuildZeroPool(c.encryptor, 0, kSeed), PoolError);
}

}  // namespace
}  // namespace icheetah::cache
