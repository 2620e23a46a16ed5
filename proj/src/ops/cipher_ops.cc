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

#include "icheetah/ops/cipher_ops.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "icheetah/ckks/decryptor.h"
#include "icheetah/common/error.h"
#include "icheetah/common/parallel.h"
#include "icheetah/image/pipeline.h"

namespace icheetah::ops {

using ckks::Ciphertext;
using image::CipherImage;
using image::RasterImage;

namespace {

int Clamp(int v, int lo, int hi) { return std::min(std::max(v, lo), hi); }

void RequireCells(const CipherImage& img) {
  if (img.cells.empty() ||
      img.cells.size() != img.plane_size() * static_cast<std::size_t>(img.channels)) {
    throw DimensionError("cipher image cell count does not match its shape");
  }
}

// Pairwise reduction in a fixed order, so the sum is the same for every
// worker count.
Ciphertext TreeSum(const ckks::Evaluator& ev, std::vector<Ciphertext> terms, int workers) {
  while (terms.size() > 1) {
    const std::size_t half = terms.size() / 2;
    ParallelFor(0, half, workers, [&](std::size_t i) {
      ev.AddInPlace(terms[2 * i], terms[2 * i + 1]);
    });
    std::vector<Ciphertext> next;
    next.reserve(half + 1);
    for (std::size_t i = 0; i < half; ++i) next.push_back(std::move(terms[2 * i]));
    if (terms.size() % 2 == 1) next.push_back(std::move(terms.back()));
    terms = std::move(next);
  }
  return std::move(terms.front());
}

}  // namespace

void WatermarkSpec::Validate(int width, int height, int channels) const {
  if (x < 0 || x >= width || y < 0 || y >= height || channel < 0 || channel >= channels) {
    throw DomainError("watermark location (" + std::to_string(x) + ", " + std::to_string(y) +
                      ") outside the image");
  }
  if (!(value > 0)) throw DomainError("watermark value must be positive");
  const double t = tau();
  if (!(t > 0) || t > value) throw DomainError("watermark threshold must lie in (0, value]");
}

CipherOps::CipherOps(ckks::ContextPtr context, int workers)
    : context_(context), workers_(std::max(workers, 1)), encoder_(context), evaluator_(context) {}

CipherImage CipherOps::MeanFilter(const CipherImage& img, int window) const {
  RequireCells(img);
  if (window < 1 || window % 2 == 0) throw DomainError("mean filter window must be odd");
  const int level = img.level();
  if (level < 1) throw LevelError("level exhausted: mean filter needs level >= 1");
  const ckks::Context& ctx = *context_;
  const double cell_scale = img.cells.front().scale;
  // The weight is encoded at scale q_level so the rescale restores the cell
  // scale exactly; a smaller power of two is used when that would overflow.
  const double q_top = static_cast<double>(ctx.modulus(static_cast<std::size_t>(level)).value());
  const double room = ctx.modulus_product_double(level) / (2 * kValueBound * cell_scale);
  double weight_scale = q_top;
  if (weight_scale >= room) {
    weight_scale = std::exp2(std::floor(std::log2(room)) - 1);
    if (weight_scale < 1024) throw LevelError("level exhausted: no headroom for the filter weight");
  }
  const ckks::Plaintext weight =
      encoder_.EncodeScalar(1.0 / (window * window), level, weight_scale);

  CipherImage out;
  out.width = img.width;
  out.height = img.height;
  out.channels = img.channels;
  out.strategy = img.strategy;
  out.fingerprint = img.fingerprint;
  out.cells.resize(img.cells.size());
  const int r = window / 2;
  ParallelFor(0, img.cells.size(), workers_, [&](std::size_t i) {
    const int c = static_cast<int>(i / img.plane_size());
    const int y = static_cast<int>(i % img.plane_size()) / img.width;
    const int x = static_cast<int>(i % img.plane_size()) % img.width;
    Ciphertext acc;
    bool first = true;
    for (int dy = -r; dy <= r; ++dy) {
      for (int dx = -r; dx <= r; ++dx) {
        const Ciphertext& nb =
            img.cell(c, Clamp(y + dy, 0, img.height - 1), Clamp(x + dx, 0, img.width - 1));
        if (first) {
          acc = nb;
          first = false;
        } else {
          evaluator_.AddInPlace(acc, nb);
        }
      }
    }
    evaluator_.MulPlainInPlace(acc, weight);
    evaluator_.RescaleInPlace(acc);
    out.cells[i] = std::move(acc);
  });
  return out;
}

void CipherOps::BrightenInPlace(CipherImage& img, double delta) const {
  RequireCells(img);
  ParallelFor(0, img.cells.size(), workers_, [&](std::size_t i) {
    Ciphertext& ct = img.cells[i];
    evaluator_.AddPlainInPlace(ct, encoder_.EncodeScalar(delta, ct.level, ct.scale));
  });
}

CipherImage CipherOps::Brighten(const CipherImage& img, double delta) const {
  CipherImage out = img;
  BrightenInPlace(out, delta);
  return out;
}

void CipherOps::CheckComparable(const CipherImage& a, const CipherImage& b) const {
  RequireCells(a);
  RequireCells(b);
  if (!a.SameShape(b)) throw DimensionError("images differ in shape");
  if (a.fingerprint != b.fingerprint) {
    throw DimensionError("images were encrypted under different parameters or keys");
  }
}

MatchResult CipherOps::MatchL1(const CipherImage& a, const CipherImage& b) const {
  CheckComparable(a, b);
  MatchResult result;
  result.mode = MatchMode::kL1ClientSide;
  std::vector<Ciphertext> diff(a.cells.size());
  ParallelFor(0, diff.size(), workers_, [&](std::size_t i) {
    diff[i] = evaluator_.Sub(a.cells[i], b.cells[i]);
  });
  result.difference_plane = std::move(diff);
  return result;
}

MatchResult CipherOps::MatchL2(const CipherImage& a, const CipherImage& b,
                               const ckks::RelinKey& relin) const {
  CheckComparable(a, b);
  const int level = a.level();
  if (level < 1) throw LevelError("level exhausted: L2 matching needs level >= 1");
  const double scale = a.cells.front().scale;
  const double bound = 4.0 * 255 * 255 * static_cast<double>(a.cells.size()) * scale * scale;
  if (bound >= context_->modulus_product_double(level) / 2) {
    throw LevelError("level exhausted: not enough modulus for the squared distance");
  }
  // Squares are summed as degree-2 ciphertexts, then relinearized and
  // rescaled once.
  std::vector<Ciphertext> squares(a.cells.size());
  ParallelFor(0, squares.size(), workers_, [&](std::size_t i) {
    const Ciphertext d = evaluator_.Sub(a.cells[i], b.cells[i]);
    squares[i] = evaluator_.Square(d);
  });
  Ciphertext sum = TreeSum(evaluator_, std::move(squares), workers_);
  sum = evaluator_.Relinearize(sum, relin);
  evaluator_.RescaleInPlace(sum);
  MatchResult result;
  result.mode = MatchMode::kL2Encrypted;
  result.encrypted_distance = std::move(sum);
  return result;
}

void CipherOps::WatermarkEmbedInPlace(CipherImage& img, const WatermarkSpec& spec) const {
  RequireCells(img);
  spec.Validate(img.width, img.height, img.channels);
  Ciphertext& ct = img.cell(spec.channel, spec.y, spec.x);
  evaluator_.AddPlainInPlace(ct, encoder_.EncodeScalar(spec.value, ct.level, ct.scale));
}

CipherImage CipherOps::WatermarkEmbed(const CipherImage& img, const WatermarkSpec& spec) const {
  spec.Validate(img.width, img.height, img.channels);
  CipherImage out = img;
  WatermarkEmbedInPlace(out, spec);
  return out;
}

double FinalizeL1(MatchResult& result, const ckks::KeySet& keys) {
  if (result.mode != MatchMode::kL1ClientSide || !result.difference_plane) {
    throw ParameterError("not an L1 match result");
  }
  ckks::Decryptor dec(keys.context, keys.secret_key());
  double sum = 0;
  for (const Ciphertext& d : *result.difference_plane) sum += std::fabs(dec.DecryptScalar(d));
  result.finalized_distance = sum;
  return sum;
}

double FinalizeL2(MatchResult& result, const ckks::KeySet& keys) {
  if (result.mode != MatchMode::kL2Encrypted || !result.encrypted_distance) {
    throw ParameterError("not an L2 match result");
  }
  ckks::Decryptor dec(keys.context, keys.secret_key());
  const double v = dec.DecryptScalar(*result.encrypted_distance);
  result.finalized_distance = v;
  return v;
}

RasterImage WatermarkDetect(const RasterImage& original, const RasterImage& decrypted,
                            double tau) {
  if (!original.SameShape(decrypted)) throw DimensionError("images differ in shape");
  RasterImage mask(original.width, original.height, original.channels, 0);
  for (std::size_t i = 0; i < mask.pixels.size(); ++i) {
    const double d = std::fabs(static_cast<double>(original.pixels[i]) - decrypted.pixels[i]);
    mask.pixels[i] = d >= tau ? 1 : 0;
  }
  return mask;
}

std::vector<MaskPixel> MaskPixels(const RasterImage& mask) {
  std::vector<MaskPixel> out;
  for (int c = 0; c < mask.channels; ++c) {
    for (int y = 0; y < mask.height; ++y) {
      for (int x = 0; x < mask.width; ++x) {
        if (mask.at(c, y, x)) out.push_back({c, y, x});
      }
    }
  }
  return out;
}

std::vector<double> MeanFilterPlainExact(const RasterImage& img, int window) {
  if (window < 1 || window % 2 == 0) throw DomainError("mean filter window must be odd");
  const int r = window / 2;
  std::vector<double> out(img.pixels.size());
  for (int c = 0; c < img.channels; ++c) {
    for (int y = 0; y < img.height; ++y) {
      for (int x = 0; x < img.width; ++x) {
        double sum = 0;
        for (int dy = -r; dy <= r; ++dy) {
          for (int dx = -r; dx <= r; ++dx) {
            sum += img.at(c, Clamp(y + dy, 0, img.height - 1), Clamp(x + dx, 0, img.width - 1));
          }
        }
        out[img.index(c, y, x)] = sum / (window * window);
      }
    }
  }
  return out;
}

RasterImage MeanFilterPlain(const RasterImage& img, int window) {
  const std::vector<double> exact = MeanFilterPlainExact(img, window);
  RasterImage out(img.width, img.height, img.channels);
  for (std::size_t i = 0; i < exact.size(); ++i) out.pixels[i] = image::DecodePixel(exact[i]);
  return out;
}

RasterImage BrightenPlain(const RasterImage& img, double delta) {
  RasterImage out = img;
  for (auto& p : out.pixels) p = image::DecodePixel(p + delta);
  return out;
}

}  // namespace icheetah::ops
