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

#include "icheetah/image/cipher_image.h"

#include <fstream>
#include <string>

#include "icheetah/ckks/serialization.h"
#include "icheetah/common/error.h"

namespace icheetah::image {

namespace {

constexpr std::size_t kHeaderSize = 4 + 2 + 4 + 4 + 1 + 1 + 32;

}  // namespace

Bytes SerializeCipherImage(const CipherImage& img) {
  if (img.cells.size() != img.plane_size() * static_cast<std::size_t>(img.channels)) {
    throw DimensionError("cell count does not match the image shape");
  }
  ByteWriter w;
  w.PutMagic("ICHI");
  w.PutU16(kCipherImageVersion);
  w.PutU32(static_cast<std::uint32_t>(img.width));
  w.PutU32(static_cast<std::uint32_t>(img.height));
  w.PutU8(static_cast<std::uint8_t>(img.channels));
  w.PutU8(static_cast<std::uint8_t>(img.strategy));
  w.PutBytes(img.fingerprint);
  for (const auto& ct : img.cells) ckks::WriteCiphertext(w, ct);
  return w.Take();
}

CipherImageHeader ParseCipherImageHeader(ByteReader& in) {
  in.ExpectMagic("ICHI");
  const std::uint16_t version = in.GetU16();
  if (version != kCipherImageVersion) {
    throw FormatError("unsupported cipher image version " + std::to_string(version));
  }
  CipherImageHeader h;
  const std::uint32_t w = in.GetU32();
  const std::uint32_t ht = in.GetU32();
  if (w == 0 || ht == 0 || w > (1u << 16) || ht > (1u << 16)) {
    throw FormatError("bad cipher image dimensions");
  }
  h.width = static_cast<int>(w);
  h.height = static_cast<int>(ht);
  h.channels = in.GetU8();
  if (h.channels != 1 && h.channels != 3) throw FormatError("cipher image must have 1 or 3 channels");
  h.strategy = cache::StrategyFromByte(in.GetU8());
  auto fp = in.GetBytes(h.fingerprint.size());
  std::copy(fp.begin(), fp.end(), h.fingerprint.begin());
  return h;
}

CipherImage ParseCipherImage(std::span<const std::uint8_t> bytes, const ckks::Context& ctx) {
  ByteReader r(bytes);
  const CipherImageHeader h = ParseCipherImageHeader(r);
  CipherImage img;
  img.width = h.width;
  img.height = h.height;
  img.channels = h.channels;
  img.strategy = h.strategy;
  img.fingerprint = h.fingerprint;
  const std::size_t count = img.plane_size() * static_cast<std::size_t>(img.channels);
  // Each blob is at least its 10-byte prefix; reject absurd counts before allocating.
  if (count * 10 > r.remaining()) throw FormatError("cipher image is truncated");
  img.cells.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    img.cells.push_back(ckks::ReadCiphertext(r, ctx));
    if (img.cells.back().level != img.cells.front().level) {
      throw FormatError("cipher image cells disagree on level");
    }
  }
  r.ExpectEnd();
  return img;
}

void SaveCipherImage(const CipherImage& img, const std::filesystem::path& path) {
  WriteFileAtomic(path, SerializeCipherImage(img));
}

CipherImage LoadCipherImage(const std::filesystem::path& path, const ckks::Context& ctx) {
  return ParseCipherImage(ReadFileBytes(path), ctx);
}

CipherImageHeader PeekCipherImage(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  Bytes head(kHeaderSize);
  in.read(reinterpret_cast<char*>(head.data()), static_cast<std::streamsize>(head.size()));
  head.resize(static_cast<std::size_t>(in.gcount()));
  ByteReader r(head);
  return ParseCipherImageHeader(r);
}

}  // namespace icheetah::image
