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

// Encrypted-domain image operations. Nothing here decrypts except the two
// Finalize functions, which take the secret key explicitly.

#ifndef ICHEETAH_OPS_CIPHER_OPS_H_
#define ICHEETAH_OPS_CIPHER_OPS_H_

#include <optional>
#include <vector>

#include "icheetah/ckks/encoder.h"
#include "icheetah/ckks/evaluator.h"
#include "icheetah/ckks/keys.h"
#include "icheetah/image/cipher_image.h"
#include "icheetah/image/raster.h"

namespace icheetah::ops {

enum class MatchMode { kL1ClientSide, kL2Encrypted };

struct MatchResult {
  MatchMode mode = MatchMode::kL1ClientSide;
  std::optional<ckks::Ciphertext> encrypted_distance;          // L2
  std::optional<std::vector<ckks::Ciphertext>> difference_plane;  // L1
  std::optional<double> finalized_distance;
};

struct WatermarkSpec {
  int x = 0;
  int y = 0;
  int channel = 0;
  double value = 5.0;
  // Defaults to value / 2.
  std::optional<double> threshold;

  double tau() const { return threshold.value_or(value / 2); }
  // DomainError unless the location lies inside the image, value > 0 and
  // 0 < tau <= value.
  void Validate(int width, int height, int channels) const;
};

// Pixel magnitudes the operations leave headroom for.
inline constexpr double kValueBound = 2048.0;

class CipherOps {
 public:
  explicit CipherOps(ckks::ContextPtr context, int workers = 1);

  // Clamp-to-edge n x n box filter: neighbour sum, one plaintext
  // multiplication by 1/n^2, one rescale. Consumes one level.
  image::CipherImage MeanFilter(const image::CipherImage& img, int window = 3) const;

  // Adds delta to every cell; level and scale are unchanged.
  image::CipherImage Brighten(const image::CipherImage& img, double delta = 50) const;
  void BrightenInPlace(image::CipherImage& img, double delta = 50) const;

  // Encrypted per-cell differences; the absolute sum is taken after decryption.
  MatchResult MatchL1(const image::CipherImage& a, const image::CipherImage& b) const;
  // One ciphertext holding the sum of squared differences. Consumes one level.
  MatchResult MatchL2(const image::CipherImage& a, const image::CipherImage& b,
                      const ckks::RelinKey& relin) const;

  image::CipherImage WatermarkEmbed(const image::CipherImage& img,
                                    const WatermarkSpec& spec) const;
  void WatermarkEmbedInPlace(image::CipherImage& img, const WatermarkSpec& spec) const;

  const ckks::Evaluator& evaluator() const { return evaluator_; }

 private:
  void CheckComparable(const image::CipherImage& a, const image::CipherImage& b) const;

  ckks::ContextPtr context_;
  int workers_;
  ckks::Encoder encoder_;
  ckks::Evaluator evaluator_;
};

double FinalizeL1(MatchResult& result, const ckks::KeySet& keys);
double FinalizeL2(MatchResult& result, const ckks::KeySet& keys);

// mask(c, y, x) = 1 where |a - b| >= tau, else 0.
image::RasterImage WatermarkDetect(const image::RasterImage& original,
                                   const image::RasterImage& decrypted, double tau);

struct MaskPixel {
  int channel, y, x;
  bool operator==(const MaskPixel&) const = default;
};
std::vector<MaskPixel> MaskPixels(const image::RasterImage& mask);

// Plaintext references with the same border and rounding conventions.
image::RasterImage MeanFilterPlain(const image::RasterImage& img, int window = 3);
std::vector<double> MeanFilterPlainExact(const image::RasterImage& img, int window = 3);
image::RasterImage BrightenPlain(const image::RasterImage& img, double delta = 50);

}  // namespace icheetah::ops

#endif  // ICHEETAH_OPS_CIPHER_OPS_H_
