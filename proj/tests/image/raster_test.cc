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

#include "icheetah/image/raster.h"

#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <numeric>
#include <tuple>

#include "icheetah/common/bytes.h"
#include "icheetah/common/error.h"

namespace icheetah::image {
namespace {

namespace fs = std::filesystem;

const fs::path kData = ICHEETAH_TEST_DATA_DIR;

fs::path TempPath(const std::string& name) {
  return fs::temp_directory_path() / ("icheetah_raster_" + name);
}

RasterImage Pattern(int w, int h, int channels) {
  RasterImage img(w, h, channels);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    img.pixels[i] = static_cast<std::uint8_t>((i * 37 + 11) % 256);
  }
  return img;
}

TEST(RasterTest, ConstructorValidates) {
  EXPECT_THROW(RasterImage(0, 3, 1), DimensionError);
  EXPECT_THROW(RasterImage(3, 3, 2), DimensionError);
  RasterImage img(3, 2, 3, 9);
  EXPECT_EQ(img.pixels.size(), 18u);
  EXPECT_EQ(img.index(1, 1, 2), 6u + 5u);
}

TEST(RasterTest, BmpRoundTripRgbAndGray) {
  for (auto [w, h, ch] : {std::tuple{3, 3, 3}, std::tuple{5, 3, 1}, std::tuple{7, 2, 3},
                          std::tuple{1, 1, 1}}) {
    RasterImage img = Pattern(w, h, ch);
    const fs::path path = TempPath("rt.bmp");
    SaveImage(img, path);
    EXPECT_EQ(LoadImage(path), img) << w << "x" << h << "x" << ch;
    fs::remove(path);
  }
}

TEST(RasterTest, PngRoundTrip) {
  for (int ch : {1, 3}) {
    RasterImage img = Pattern(6, 4, ch);
    const fs::path path = TempPath("rt.png");
    SaveImage(img, path);
    EXPECT_EQ(LoadImage(path), img);
    fs::remove(path);
  }
}

TEST(RasterTest, TopDownBmpIsRead) {
  RasterImage img = Pattern(4, 3, 1);
  std::vector<std::uint8_t> b = EncodeBmp(img);
  const std::size_t offset = b[10] | (b[11] << 8);
  // Reverse the three 4-byte rows and negate the height.
  std::vector<std::uint8_t> flipped = b;
  for (int r = 0; r < 3; ++r) {
    std::copy(b.begin() + offset + r * 4, b.begin() + offset + r * 4 + 4,
              flipped.begin() + offset + (2 - r) * 4);
  }
  const std::int32_t neg = -3;
  std::memcpy(&flipped[22], &neg, 4);
  EXPECT_EQ(DecodeBmp(flipped), img);
}

TEST(RasterTest, UnsupportedBmpVariantsAreFormatErrors) {
  std::vector<std::uint8_t> b = EncodeBmp(Pattern(4, 4, 3));
  std::vector<std::uint8_t> sixteen = b;
  sixteen[28] = 16;
  EXPECT_THROW(DecodeBmp(sixteen), FormatError);
  std::vector<std::uint8_t> rle = b;
  rle[30] = 1;
  EXPECT_THROW(DecodeBmp(rle), FormatError);
  std::vector<std::uint8_t> cut(b.begin(), b.end() - 5);
  EXPECT_THROW(DecodeBmp(cut), FormatError);
  const fs::path path = TempPath("junk.bmp");
  WriteFileAtomic(path, std::vector<std::uint8_t>{'G', 'I', 'F', '8'});
  EXPECT_THROW(LoadImage(path), FormatError);
  fs::remove(path);
  EXPECT_THROW(LoadImage(TempPath("missing.bmp")), IoError);
}

// Reference values decoded independently with Pillow.
TEST(RasterTest, NaturalTestImagesDecode) {
  RasterImage cam = LoadImage(kData / "camera_64.bmp");
  ASSERT_EQ(cam.width, 64);
  ASSERT_EQ(cam.height, 64);
  ASSERT_EQ(cam.channels, 1);
  EXPECT_EQ(std::accumulate(cam.pixels.begin(), cam.pixels.end(), 0LL), 528628);
  EXPECT_EQ(cam.at(0, 0, 0), 199);
  EXPECT_EQ(cam.at(0, 0, 63), 190);
  EXPECT_EQ(cam.at(0, 63, 0), 25);
  EXPECT_EQ(cam.at(0, 10, 20), 207);

  RasterImage ast = LoadImage(kData / "astronaut_64.bmp");
  ASSERT_EQ(ast.channels, 3);
  long long sums[3] = {0, 0, 0};
  for (int c = 0; c < 3; ++c) {
    for (int y = 0; y < 64; ++y) {
      for (int x = 0; x < 64; ++x) sums[c] += ast.at(c, y, x);
    }
  }
  EXPECT_EQ(sums[0], 579834);
  EXPECT_EQ(sums[1], 433157);
  EXPECT_EQ(sums[2], 395166);
  EXPECT_EQ(ast.at(0, 5, 7), 188);
  EXPECT_EQ(ast.at(1, 5, 7), 177);
  EXPECT_EQ(ast.at(2, 5, 7), 168);
}

}  // namespace
}  // namespace icheetah::image
