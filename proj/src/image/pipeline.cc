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

#include "icheetah/image/pipeline.h"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "icheetah/common/error.h"
#include "icheetah/common/parallel.h"

namespace icheetah::image {

namespace {

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

CipherImage EncryptImage(const RasterImage& img, const cache::PixelEncryptor& encryptor,
                         const ckks::Seed& session, int workers, double* seconds) {
  img.Validate();
  CipherImage out;
  out.width = img.width;
  out.height = img.height;
  out.channels = img.channels;
  out.strategy = encryptor.strategy().tag;
  out.fingerprint = encryptor.encryptor().public_key().fingerprint;
  out.cells.resize(img.pixels.size());
  const auto start = Clock::now();
  ParallelFor(0, img.pixels.size(), workers, [&](std::size_t i) {
    ckks::Prng prng(session, i);
    out.cells[i] = encryptor.Encrypt(img.pixels[i], prng);
  });
  if (seconds) *seconds = Since(start);
  return out;
}

std::uint8_t DecodePixel(double value) {
  if (std::isnan(value)) return 0;
  const double r = std::round(value);
  return static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
}

RasterImage DecryptImage(const CipherImage& img, const ckks::KeySet& keys, int workers) {
  if (img.fingerprint != keys.fingerprint()) {
    throw KeyMismatchError("cipher image was encrypted under different keys");
  }
  if (img.cells.size() != img.plane_size() * static_cast<std::size_t>(img.channels)) {
    throw DimensionError("cell count does not match the image shape");
  }
  ckks::Decryptor decryptor(keys.context, keys.secret_key());
  RasterImage out(img.width, img.height, img.channels);
  ParallelFor(0, img.cells.size(), workers, [&](std::size_t i) {
    out.pixels[i] = DecodePixel(decryptor.DecryptScalar(img.cells[i]));
  });
  return out;
}

RoundTrip RoundTripImage(const RasterImage& img, const cache::PixelEncryptor& encryptor,
                         const ckks::Decryptor& decryptor, const ckks::Seed& session,
                         int workers, int band_rows) {
  img.Validate();
  band_rows = std::max(band_rows, 1);
  RoundTrip result;
  result.decrypted = RasterImage(img.width, img.height, img.channels);
  const std::size_t row = static_cast<std::size_t>(img.width);
  std::vector<ckks::Ciphertext> band;
  for (int c = 0; c < img.channels; ++c) {
    for (int y0 = 0; y0 < img.height; y0 += band_rows) {
      const int rows = std::min(band_rows, img.height - y0);
      const std::size_t first = img.index(c, y0, 0);
      const std::size_t count = row * static_cast<std::size_t>(rows);
      band.assign(count, ckks::Ciphertext{});
      auto start = Clock::now();
      ParallelFor(0, count, workers, [&](std::size_t j) {
        ckks::Prng prng(session, first + j);
        band[j] = encryptor.Encrypt(img.pixels[first + j], prng);
      });
      result.encrypt_seconds += Since(start);
      start = Clock::now();
      ParallelFor(0, count, workers, [&](std::size_t j) {
        result.decrypted.pixels[first + j] = DecodePixel(decryptor.DecryptScalar(band[j]));
      });
      result.decrypt_seconds += Since(start);
    }
  }
  return result;
}

}  // namespace icheetah::image
