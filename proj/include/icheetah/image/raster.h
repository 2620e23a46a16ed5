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

#ifndef ICHEETAH_IMAGE_RASTER_H_
#define ICHEETAH_IMAGE_RASTER_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace icheetah::image {

// 8-bit image stored channel-major: plane c holds row-major pixels of
// channel c. One channel is grayscale, three are RGB.
struct RasterImage {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::uint8_t> pixels;

  RasterImage() = default;
  RasterImage(int width, int height, int channels, std::uint8_t fill = 0);

  std::size_t plane_size() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  std::size_t index(int c, int y, int x) const {
    return static_cast<std::size_t>(c) * plane_size() +
           static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
           static_cast<std::size_t>(x);
  }
  std::uint8_t at(int c, int y, int x) const { return pixels[index(c, y, x)]; }
  std::uint8_t& at(int c, int y, int x) { return pixels[index(c, y, x)]; }

  bool SameShape(const RasterImage& other) const {
    return width == other.width && height == other.height && channels == other.channels;
  }
  // Throws DimensionError when the fields are inconsistent.
  void Validate() const;

  bool operator==(const RasterImage& other) const = default;
};

// Detects BMP or PNG from the file signature. FormatError for anything else,
// including 16-bit or compressed BMP; IoError when unreadable.
RasterImage LoadImage(const std::filesystem::path& path);

// Writes PNG when the extension is .png, otherwise BMP (8-bit palettized
// grayscale or 24-bit RGB). The write is atomic.
void SaveImage(const RasterImage& img, const std::filesystem::path& path);

std::vector<std::uint8_t> EncodeBmp(const RasterImage& img);
RasterImage DecodeBmp(const std::vector<std::uint8_t>& bytes);

}  // namespace icheetah::image

#endif  // ICHEETAH_IMAGE_RASTER_H_
