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

#ifndef ICHEETAH_IMAGE_METRICS_H_
#define ICHEETAH_IMAGE_METRICS_H_

#include "icheetah/image/raster.h"

namespace icheetah::image {

// Mean squared error over every pixel of every channel.
double Mse(const RasterImage& a, const RasterImage& b);

// 10 log10(max^2 / mse); +infinity when mse is 0.
double Psnr(double mse, double max_value = 255.0);

inline constexpr double kSsimC1 = (0.01 * 255) * (0.01 * 255);
inline constexpr double kSsimC2 = (0.03 * 255) * (0.03 * 255);

// Single-window SSIM over the whole image, averaged over channels.
double Ssim(const RasterImage& a, const RasterImage& b);

struct QualityReport {
  double mse = 0;
  double psnr = 0;
  double ssim = 1;
};

QualityReport Compare(const RasterImage& a, const RasterImage& b);

}  // namespace icheetah::image

#endif  // ICHEETAH_IMAGE_METRICS_H_
