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

#include <cmath>
#include <limits>

#include "icheetah/common/error.h"

namespace icheetah::image {

namespace {

void RequireSameShape(const RasterImage& a, const RasterImage& b) {
  if (!a.SameShape(b) || a.pixels.size() != b.pixels.size()) {
    throw DimensionError("images differ in shape");
  }
}

}  // namespace

double Mse(const RasterImage& a, const RasterImage& b) {
  RequireSameShape(a, b);
  if (a.pixels.empty()) return 0;
  double sum = 0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    const double d = static_cast<double>(a.pixels[i]) - b.pixels[i];
    sum += d * d;
  }
  return sum / static_cast<double>(a.pixels.size());
}

double Psnr(double mse, double max_value) {
  if (mse < 0 || std::isnan(mse)) throw DomainError("mse must be non-negative");
  if (mse == 0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(max_value * max_value / mse);
}

double Ssim(const RasterImage& a, const RasterImage& b) {
  RequireSameShape(a, b);
  const std::size_t n = a.plane_size();
  double total = 0;
  for (int c = 0; c < a.channels; ++c) {
    const std::size_t base = static_cast<std::size_t>(c) * n;
    double mu_a = 0, mu_b = 0;
    for (std::size_t i = 0; i < n; ++i) {
      mu_a += a.pixels[base + i];
      mu_b += b.pixels[base + i];
    }
    mu_a /= static_cast<double>(n);
    mu_b /= static_cast<double>(n);
    double var_a = 0, var_b = 0, cov = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double da = a.pixels[base + i] - mu_a;
      const double db = b.pixels[base + i] - mu_b;
      var_a += da * da;
      var_b += db * db;
      cov += da * db;
    }
    var_a /= static_cast<double>(n);
    var_b /= static_cast<double>(n);
    cov /= static_cast<double>(n);
    total += ((2 * mu_a * mu_b + kSsimC1) * (2 * cov + kSsimC2)) /
             ((mu_a * mu_a + mu_b * mu_b + kSsimC1) * (var_a + var_b + kSsimC2));
  }
  return total / a.channels;
}

QualityReport Compare(const RasterImage& a, const RasterImage& b) {
  QualityReport r;
  r.mse = Mse(a, b);
  r.psnr = Psnr(r.mse);
  r.ssim = Ssim(a, b);
  return r;
}

}  // namespace icheetah::image
