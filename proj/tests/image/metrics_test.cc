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

#include "icheetah/image/metrics.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "icheetah/common/error.h"

namespace icheetah::image {
namespace {

const std::filesystem::path kData = ICHEETAH_TEST_DATA_DIR;

TEST(MetricsTest, MseExamples) {
  RasterImage a(5, 3, 1, 0), b(5, 3, 1, 2);
  EXPECT_EQ(Mse(a, a), 0.0);
  EXPECT_EQ(Mse(a, b), 4.0);
  RasterImage c(5, 3, 3, 0), d(5, 3, 3, 2);
  EXPECT_EQ(Mse(c, d), 4.0);
  EXPECT_THROW(Mse(a, c), DimensionError);
}

TEST(MetricsTest, PsnrExamples) {
  EXPECT_TRUE(std::isinf(Psnr(0.0)));
  EXPECT_NEAR(Psnr(1.0), 10 * std::log10(65025.0), 1e-12);
  EXPECT_NEAR(Psnr(1.0), 48.13, 0.01);
  EXPECT_NEAR(Psnr(0.476), 51.35, 0.01);
  EXPECT_THROW(Psnr(-1.0), DomainError);
}

TEST(MetricsTest, SsimExamples) {
  RasterImage cam = LoadImage(kData / "camera_64.bmp");
  EXPECT_DOUBLE_EQ(Ssim(cam, cam), 1.0);
  RasterImage inv = cam;
  for (auto& p : inv.pixels) p = static_cast<std::uint8_t>(255 - p);
  // Independent numpy evaluation of the single-window formula.
  EXPECT_NEAR(Ssim(cam, inv), -0.9879180521688539, 1e-9);
  EXPECT_LT(Ssim(cam, inv), 0.6);
  RasterImage brighter = cam;
  for (auto& p : brighter.pixels) p = static_cast<std::uint8_t>(p + 20);
  EXPECT_NEAR(Ssim(cam, brighter), 0.9897123656366438, 1e-9);
  EXPECT_EQ(Mse(cam, brighter), 400.0);
  RasterImage flat(8, 8, 1, 90);
  EXPECT_DOUBLE_EQ(Ssim(flat, flat), 1.0);
}

TEST(MetricsTest, MetricsAreSymmetric) {
  std::mt19937 rng(4);
  RasterImage a(9, 7, 3), b(9, 7, 3);
  for (auto& p : a.pixels) p = static_cast<std::uint8_t>(rng());
  for (auto& p : b.pixels) p = static_cast<std::uint8_t>(rng());
  EXPECT_EQ(Mse(a, b), Mse(b, a));
  EXPECT_DOUBLE_EQ(Ssim(a, b), Ssim(b, a));
  EXPECT_LE(Ssim(a, b), 1.0);
  QualityReport q = Compare(a, b);
  EXPECT_EQ(q.mse, Mse(a, b));
  EXPECT_EQ(q.psnr, Psnr(q.mse));
}

}  // namespace
}  // namespace icheetah::image
