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

#ifndef ICHEETAH_IMAGE_CIPHER_IMAGE_H_
#define ICHEETAH_IMAGE_CIPHER_IMAGE_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "icheetah/cache/strategy.h"
#include "icheetah/ckks/ciphertext.h"
#include "icheetah/ckks/context.h"
#include "icheetah/common/bytes.h"

namespace icheetah::image {

// One ciphertext per pixel per channel, laid out like RasterImage.
struct CipherImage {
  int width = 0;
  int height = 0;
  int channels = 1;
  cache::StrategyTag strategy = cache::StrategyTag::kNone;
  // Fingerprint of the public key (and with it the parameters) used.
  ckks::Digest fingerprint{};
  std::vector<ckks::Ciphertext> cells;

  std::size_t plane_size() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  std::size_t index(int c, int y, int x) const {
    return static_cast<std::size_t>(c) * plane_size() +
           static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
           static_cast<std::size_t>(x);
  }
  const ckks::Ciphertext& cell(int c, int y, int x) const { return cells[index(c, y, x)]; }
  ckks::Ciphertext& cell(int c, int y, int x) { return cells[index(c, y, x)]; }

  bool SameShape(const CipherImage& other) const {
    return width == other.width && height == other.height && channels == other.channels;
  }
  // Level shared by all cells; -1 when empty.
  int level() const { return cells.empty() ? -1 : cells.front().level; }
};

inline constexpr std::uint16_t kCipherImageVersion = 1;

struct CipherImageHeader {
  int width = 0;
  int height = 0;
  int channels = 1;
  cache::StrategyTag strategy = cache::StrategyTag::kNone;
  ckks::Digest fingerprint{};
};

// "ICHI", u16 version, u32 width, u32 height, u8 channels, u8 strategy,
// 32-byte fingerprint, then every cell as a ciphertext blob in index order.
Bytes SerializeCipherImage(const CipherImage& img);
CipherImageHeader ParseCipherImageHeader(ByteReader& in);
// FormatError on any malformation; nothing is returned on failure.
CipherImage ParseCipherImage(std::span<const std::uint8_t> bytes, const ckks::Context& ctx);

void SaveCipherImage(const CipherImage& img, const std::filesystem::path& path);
CipherImage LoadCipherImage(const std::filesystem::path& path, const ckks::Context& ctx);
CipherImageHeader PeekCipherImage(const std::filesystem::path& path);

}  // namespace icheetah::image

#endif  // ICHEETAH_IMAGE_CIPHER_IMAGE_H_
