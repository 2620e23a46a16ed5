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

// Checked-in toy-parameter files: keys from seed 2026 and an encryption of
// golden/toy_4x2.bmp (full strategy, pool of 4, seed 7).

#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "icheetah/ckks/keys.h"
#include "icheetah/ckks/params.h"
#include "icheetah/ckks/serialization.h"
#include "icheetah/common/bytes.h"
#include "icheetah/common/error.h"
#include "icheetah/image/cipher_image.h"
#include "icheetah/image/pipeline.h"
#include "icheetah/image/raster.h"

namespace icheetah {
namespace {

namespace fs = std::filesystem;

const fs::path kGolden = fs::path(ICHEETAH_TEST_DATA_DIR) / "golden";
const fs::path kKeys = kGolden / "keys";

std::uint16_t U16(const Bytes& b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}
std::uint32_t U32(const Bytes& b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) | (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) |
         (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

TEST(GoldenKeysTest, HeaderLayout) {
  const Bytes pub = ReadFileBytes(kKeys / ckks::kPublicKeyFile);
  EXPECT_EQ(std::string(pub.begin(), pub.begin() + 4), "ICHK");
  EXPECT_EQ(U16(pub, 4), ckks::kKeyFormatVersion);
  EXPECT_EQ(U32(pub, 6), 16u);
  EXPECT_EQ(pub[10], 2);
  EXPECT_EQ(ckks::PeekKeyParams(pub), ckks::CkksParams::ToyInsecure());
  // Secret body: one signed byte per coefficient.
  const Bytes sec = ReadFileBytes(kKeys / ckks::kSecretKeyFile);
  EXPECT_EQ(sec.size(), ckks::SerializeParamsHeader(ckks::CkksParams::ToyInsecure()).size() + 16);
}

TEST(GoldenKeysTest, ParseAndReserializeIsByteExact) {
  const ckks::KeySet keys = ckks::LoadKeySet(kKeys);
  const ckks::Context& ctx = *keys.context;
  EXPECT_EQ(ckks::SerializeSecretKey(ctx, keys.secret_key()),
            ReadFileBytes(kKeys / ckks::kSecretKeyFile));
  EXPECT_EQ(ckks::SerializePublicKey(ctx, keys.public_key),
            ReadFileBytes(kKeys / ckks::kPublicKeyFile));
  EXPECT_EQ(ckks::SerializeRelinKey(ctx, keys.relin_key()),
            ReadFileBytes(kKeys / ckks::kRelinKeyFile));
}

TEST(GoldenKeysTest, SeededKeygenReproducesTheFiles) {
  const ckks::ContextPtr ctx = ckks::Context::Create(ckks::CkksParams::ToyInsecure());
  const ckks::KeySet keys = ckks::GenerateKeys(ctx, ckks::Prng::SeedFromU64(2026));
  EXPECT_EQ(ckks::SerializeSecretKey(*ctx, keys.secret_key()),
            ReadFileBytes(kKeys / ckks::kSecretKeyFile));
  EXPECT_EQ(ckks::SerializePublicKey(*ctx, keys.public_key),
            ReadFileBytes(kKeys / ckks::kPublicKeyFile));
  EXPECT_EQ(ckks::SerializeRelinKey(*ctx, keys.relin_key()),
            ReadFileBytes(kKeys / ckks::kRelinKeyFile));
}

TEST(GoldenImageTest, HeaderLayoutAndRoundTrip) {
  const ckks::KeySet keys = ckks::LoadKeySet(kKeys);
  const Bytes bytes = ReadFileBytes(kGolden / "toy_4x2.ichi");
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "ICHI");
  EXPECT_EQ(U16(bytes, 4), image::kCipherImageVersion);
  EXPECT_EQ(U32(bytes, 6), 4u);
  EXPECT_EQ(U32(bytes, 10), 2u);
  EXPECT_EQ(bytes[14], 1);
  EXPECT_EQ(bytes[15], static_cast<std::uint8_t>(cache::StrategyTag::kFull));
  EXPECT_TRUE(std::equal(keys.fingerprint().begin(), keys.fingerprint().end(), bytes.begin() + 16));

  const image::CipherImage img = image::ParseCipherImage(bytes, *keys.context);
  EXPECT_EQ(image::SerializeCipherImage(img), bytes);
  EXPECT_EQ(image::DecryptImage(img, keys), image::LoadImage(kGolden / "toy_4x2.bmp"));
}

TEST(GoldenImageTest, AnyFlippedHeaderByteIsRejected) {
  const ckks::KeySet keys = ckks::LoadKeySet(kKeys);
  const Bytes bytes = ReadFileBytes(kGolden / "toy_4x2.ichi");
  for (std::size_t i : {0u, 4u, 6u, 14u, 15u}) {
    Bytes bad = bytes;
    bad[i] ^= 0x40;
    EXPECT_THROW(image::ParseCipherImage(bad, *keys.context), Error) << i;
  }
}

}  // namespace
}  // namespace icheetah
