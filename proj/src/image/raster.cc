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

#include <png.h>

#include <cctype>
#include <cstring>
#include <string>

#include "icheetah/common/bytes.h"
#include "icheetah/common/error.h"

namespace icheetah::image {

namespace {

constexpr std::size_t kFileHeaderSize = 14;
constexpr std::size_t kInfoHeaderSize = 40;

std::uint32_t Le32(const std::vector<std::uint8_t>& b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) | static_cast<std::uint32_t>(b[at + 1]) << 8 |
         static_cast<std::uint32_t>(b[at + 2]) << 16 | static_cast<std::uint32_t>(b[at + 3]) << 24;
}

std::uint16_t Le16(const std::vector<std::uint8_t>& b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | b[at + 1] << 8);
}

RasterImage LoadPng(const std::filesystem::path& path) {
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&png, path.c_str())) {
    throw FormatError(path.string() + ": " + png.message);
  }
  const bool color = (png.format & PNG_FORMAT_FLAG_COLOR) != 0;
  png.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  const int channels = color ? 3 : 1;
  std::vector<std::uint8_t> interleaved(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, interleaved.data(), 0, nullptr)) {
    png_image_free(&png);
    throw FormatError(path.string() + ": " + png.message);
  }
  RasterImage img(static_cast<int>(png.width), static_cast<int>(png.height), channels);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      for (int c = 0; c < channels; ++c) {
        img.at(c, y, x) = interleaved[(static_cast<std::size_t>(y) * img.width + x) * channels + c];
      }
    }
  }
  return img;
}

void SavePng(const RasterImage& img, const std::filesystem::path& path) {
  std::vector<std::uint8_t> interleaved(img.pixels.size());
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      for (int c = 0; c < img.channels; ++c) {
        interleaved[(static_cast<std::size_t>(y) * img.width + x) * img.channels + c] =
            img.at(c, y, x);
      }
    }
  }
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(img.width);
  png.height = static_cast<png_uint_32>(img.height);
  png.format = img.channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&png, nullptr, &size, 0, interleaved.data(), 0, nullptr)) {
    throw IoError(path.string() + ": " + png.message);
  }
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&png, out.data(), &size, 0, interleaved.data(), 0, nullptr)) {
    throw IoError(path.string() + ": " + png.message);
  }
  out.resize(size);
  WriteFileAtomic(path, out);
}

}  // namespace

RasterImage::RasterImage(int w, int h, int c, std::uint8_t fill)
    : width(w), height(h), channels(c) {
  Validate();
  pixels.assign(plane_size() * static_cast<std::size_t>(c), fill);
}

void RasterImage::Validate() const {
  if (width <= 0 || height <= 0) throw DimensionError("image dimensions must be positive");
  if (channels != 1 && channels != 3) throw DimensionError("images have 1 or 3 channels");
  if (!pixels.empty() && pixels.size() != plane_size() * static_cast<std::size_t>(channels)) {
    throw DimensionError("pixel count does not match width * height * channels");
  }
}

std::vector<std::uint8_t> EncodeBmp(const RasterImage& img) {
  img.Validate();
  const bool gray = img.channels == 1;
  const std::size_t row_bytes = static_cast<std::size_t>(img.width) * (gray ? 1 : 3);
  const std::size_t stride = (row_bytes + 3) & ~std::size_t{3};
  const std::size_t palette = gray ? 256 * 4 : 0;
  const std::size_t offset = kFileHeaderSize + kInfoHeaderSize + palette;
  const std::size_t image_size = stride * static_cast<std::size_t>(img.height);

  ByteWriter w;
  w.PutMagic("BM");
  w.PutU32(static_cast<std::uint32_t>(offset + image_size));
  w.PutU32(0);
  w.PutU32(static_cast<std::uint32_t>(offset));
  w.PutU32(kInfoHeaderSize);
  w.PutU32(static_cast<std::uint32_t>(img.width));
  w.PutU32(static_cast<std::uint32_t>(img.height));  // bottom-up
  w.PutU16(1);
  w.PutU16(gray ? 8 : 24);
  w.PutU32(0);  // BI_RGB
  w.PutU32(static_cast<std::uint32_t>(image_size));
  w.PutU32(2835);
  w.PutU32(2835);
  w.PutU32(gray ? 256 : 0);
  w.PutU32(0);
  if (gray) {
    for (int i = 0; i < 256; ++i) {
      const auto v = static_cast<std::uint8_t>(i);
      w.PutU8(v);
      w.PutU8(v);
      w.PutU8(v);
      w.PutU8(0);
    }
  }
  std::vector<std::uint8_t> row(stride, 0);
  for (int y = img.height - 1; y >= 0; --y) {
    for (int x = 0; x < img.width; ++x) {
      if (gray) {
        row[static_cast<std::size_t>(x)] = img.at(0, y, x);
      } else {
        row[static_cast<std::size_t>(x) * 3 + 0] = img.at(2, y, x);
        row[static_cast<std::size_t>(x) * 3 + 1] = img.at(1, y, x);
        row[static_cast<std::size_t>(x) * 3 + 2] = img.at(0, y, x);
      }
    }
    w.PutBytes(row);
  }
  return w.Take();
}

RasterImage DecodeBmp(const std::vector<std::uint8_t>& b) {
  if (b.size() < kFileHeaderSize + kInfoHeaderSize || b[0] != 'B' || b[1] != 'M') {
    throw FormatError("not a BMP file");
  }
  const std::uint32_t offset = Le32(b, 10);
  const std::uint32_t info_size = Le32(b, 14);
  if (info_size < kInfoHeaderSize) throw FormatError("unsupported BMP header version");
  const auto width = static_cast<std::int32_t>(Le32(b, 18));
  const auto raw_height = static_cast<std::int32_t>(Le32(b, 22));
  const std::uint16_t bpp = Le16(b, 28);
  const std::uint32_t compression = Le32(b, 30);
  std::uint32_t colors = Le32(b, 46);
  if (compression != 0) throw FormatError("compressed BMP is not supported");
  if (bpp != 8 && bpp != 24) {
    throw FormatError("unsupported BMP bit depth " + std::to_string(bpp));
  }
  if (width <= 0 || raw_height == 0) throw FormatError("bad BMP dimensions");
  const bool top_down = raw_height < 0;
  const std::int64_t height = top_down ? -static_cast<std::int64_t>(raw_height) : raw_height;
  if (width > (1 << 16) || height > (1 << 16)) throw FormatError("BMP too large");

  std::vector<std::uint8_t> palette;
  bool gray_palette = true;
  if (bpp == 8) {
    if (colors == 0) colors = 256;
    if (colors > 256) throw FormatError("bad BMP palette size");
    const std::size_t pal_at = kFileHeaderSize + info_size;
    if (pal_at + colors * 4 > b.size()) throw FormatError("truncated BMP palette");
    palette.assign(b.begin() + static_cast<std::ptrdiff_t>(pal_at),
                   b.begin() + static_cast<std::ptrdiff_t>(pal_at + colors * 4));
    for (std::uint32_t i = 0; i < colors; ++i) {
      const std::uint8_t* e = &palette[i * 4];
      if (e[0] != e[1] || e[1] != e[2]) gray_palette = false;
    }
  }
  const std::size_t row_bytes = static_cast<std::size_t>(width) * (bpp / 8);
  const std::size_t stride = (row_bytes + 3) & ~std::size_t{3};
  if (offset + stride * static_cast<std::size_t>(height) > b.size()) {
    throw FormatError("truncated BMP pixel data");
  }
  const int channels = (bpp == 8 && gray_palette) ? 1 : 3;
  RasterImage img(width, static_cast<int>(height), channels);
  for (int y = 0; y < img.height; ++y) {
    const int src_row = top_down ? y : img.height - 1 - y;
    const std::uint8_t* row = b.data() + offset + stride * static_cast<std::size_t>(src_row);
    for (int x = 0; x < img.width; ++x) {
      if (bpp == 24) {
        img.at(0, y, x) = row[x * 3 + 2];
        img.at(1, y, x) = row[x * 3 + 1];
        img.at(2, y, x) = row[x * 3 + 0];
        continue;
      }
      const std::uint8_t idx = row[x];
      if (idx >= colors) throw FormatError("BMP palette index out of range");
      const std::uint8_t* e = &palette[static_cast<std::size_t>(idx) * 4];
      if (channels == 1) {
        img.at(0, y, x) = e[0];
      } else {
        img.at(0, y, x) = e[2];
        img.at(1, y, x) = e[1];
        img.at(2, y, x) = e[0];
      }
    }
  }
  return img;
}

RasterImage LoadImage(const std::filesystem::path& path) {
  const Bytes bytes = ReadFileBytes(path);
  static constexpr std::uint8_t kPngSig[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSig, 8) == 0) return LoadPng(path);
  if (bytes.size() >= 2 && bytes[0] == 'B' && bytes[1] == 'M') return DecodeBmp(bytes);
  throw FormatError(path.string() + ": not a BMP or PNG image");
}

void SaveImage(const RasterImage& img, const std::filesystem::path& path) {
  img.Validate();
  std::string ext = path.extension().string();
  for (auto& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (ext == ".png") {
    SavePng(img, path);
    return;
  }
  WriteFileAtomic(path, EncodeBmp(img));
}

}  // namespace icheetah::image
