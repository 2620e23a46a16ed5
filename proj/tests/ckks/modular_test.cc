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

#include "icheetah/ckks/modular.h"

#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "icheetah/ckks/params.h"

namespace icheetah::ckks {
namespace {

TEST(ModulusTest, BarrettReductionMatchesRemainder) {
  std::mt19937_64 rng(7);
  for (std::uint64_t qv : CkksParams::Default().modulus_chain) {
    const Modulus q(qv);
    for (int t = 0; t < 20000; ++t) {
      const std::uint64_t a = rng() % qv;
      const std::uint64_t b = rng() % qv;
      const u128 product = static_cast<u128>(a) * b;
      EXPECT_EQ(q.Mul(a, b), static_cast<std::uint64_t>(product % qv));
      const u128 wide = (static_cast<u128>(rng()) << 64) | rng();
      EXPECT_EQ(q.Reduce(wide), static_cast<std::uint64_t>(wide % qv));
    }
  }
}

TEST(ModulusTest, ShoupMultiplicationMatchesRemainder) {
  std::mt19937_64 rng(11);
  const Modulus q(1048193);
  for (int t = 0; t < 20000; ++t) {
    const std::uint64_t w = rng() % q.value();
    const std::uint64_t x = rng() % q.value();
    EXPECT_EQ(q.MulShoup(x, w, q.ShoupPrecompute(w)),
              static_cast<std::uint64_t>(static_cast<u128>(x) * w % q.value()));
  }
}

TEST(ModulusTest, AddSubNegInverse) {
  const Modulus q(86982123521ULL);
  const std::uint64_t a = 86982123520ULL;
  EXPECT_EQ(q.Add(a, 5), 4u);
  EXPECT_EQ(q.Sub(4, 5), a);
  EXPECT_EQ(q.Neg(0), 0u);
  EXPECT_EQ(q.Neg(1), a);
  for (std::uint64_t x : {std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{12345678}, a}) {
    EXPECT_EQ(q.Mul(x, q.Inverse(x)), 1u);
  }
  EXPECT_EQ(q.FromSigned(-1), a);
  EXPECT_EQ(q.FromSigned128(-static_cast<i128>(q.value()) * 3 - 2), a - 1);
}

TEST(PrimeTest, MillerRabinAgreesWithTrialDivision) {
  auto trial = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(IsPrime(n), trial(n)) << n;
  for (std::uint64_t n = 1048000; n < 1049000; ++n) EXPECT_EQ(IsPrime(n), trial(n)) << n;
}

TEST(PrimeTest, DefaultChainPrimesAreNttFriendly) {
  const CkksParams p = CkksParams::Default();
  ASSERT_EQ(p.modulus_chain.size(), 3u);
  for (std::uint64_t q : p.modulus_chain) {
    EXPECT_TRUE(IsPrime(q));
    EXPECT_EQ(q % (2 * p.ring_degree), 1u);
    EXPECT_GT(q, std::uint64_t{1} << p.log2_scale);
  }
  EXPECT_NEAR(p.log2_modulus(), 109.0, 0.5);
  EXPECT_EQ(FindNttPrimesBelow(std::uint64_t{1} << 20, 16, 2),
            CkksParams::ToyInsecure().modulus_chain);
}

TEST(PrimeTest, PrimitiveRootHasExactOrder) {
  const Modulus q(1048193);
  const std::uint64_t psi = FindPrimitiveRoot(32, q);
  EXPECT_EQ(q.Pow(psi, 16), q.value() - 1);
  EXPECT_EQ(q.Pow(psi, 32), 1u);
}

}  // namespace
}  // namespace icheetah::ckks
