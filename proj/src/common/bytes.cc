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

#include "icheetah/common/bytes.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <string>
#include <system_error>

#include "icheetah/common/error.h"

namespace icheetah {

void ByteWriter::PutLe(std::uint64_t v, int width) {
  for (int i = 0; i < width; ++i) {
    out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

void ByteWriter::PutF64(double v) { PutU64(std::bit_cast<std::uint64_t>(v)); }

void ByteWriter::PutMagic(std::string_view magic) {
  out_.insert(out_.end(), magic.begin(), magic.end());
}

void ByteWriter::PutBytes(std::span<const std::uint8_t> bytes) {
  out_.insert(out_.end(), bytes.begin(), bytes.end());
}

void ByteWriter::PutU64Array(std::span<const std::uint64_t> values) {
  const std::size_t offset = out_.size();
  out_.resize(offset + values.size() * 8);
  if constexpr (std::endian::native == std::endian::little) {
    std::memcpy(out_.data() + offset, values.data(), values.size() * 8);
  } else {
    std::uint8_t* dst = out_.data() + offset;
    for (std::uint64_t v : values) {
      for (int i = 0; i < 8; ++i) *dst++ = static_cast<std::uint8_t>(v >> (8 * i));
    }
  }
}

void ByteReader::Require(std::size_t n) const {
  if (data_.size() - pos_ < n) {
    throw FormatError("truncated input: need " + std::to_string(n) +
                      " bytes at offset " + std::to_string(pos_));
  }
}

std::uint8_t ByteReader::GetU8() {
  Require(1);
  return data_[pos_++];
}

std::uint64_t ByteReader::GetLe(int width) {
  Require(static_cast<std::size_t>(width));
  std::uint64_t v = 0;
  for (int i = 0; i < width; ++i) {
    v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
  }
  pos_ += static_cast<std::size_t>(width);
  return v;
}

double ByteReader::GetF64() { return std::bit_cast<double>(GetU64()); }

void ByteReader::ExpectMagic(std::string_view magic) {
  auto got = GetBytes(magic.size());
  if (std::memcmp(got.data(), magic.data(), magic.size()) != 0) {
    throw FormatError("bad magic, expected \"" + std::string(magic) + "\"");
  }
}

std::span<const std::uint8_t> ByteReader::GetBytes(std::size_t n) {
  Require(n);
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

void ByteReader::GetU64Array(std::span<std::uint64_t> out) {
  auto raw = GetBytes(out.size() * 8);
  if constexpr (std::endian::native == std::endian::little) {
    std::memcpy(out.data(), raw.data(), raw.size());
  } else {
    for (std::size_t k = 0; k < out.size(); ++k) {
      std::uint64_t v = 0;
      for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(raw[8 * k + i]) << (8 * i);
      }
      out[k] = v;
    }
  }
}

void ByteReader::ExpectEnd() const {
  if (!done()) {
    throw FormatError(std::to_string(remaining()) + " trailing bytes");
  }
}

Bytes ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  in.seekg(0, std::ios::end);
  const auto size = static_cast<std::size_t>(in.tellg());
  in.seekg(0);
  Bytes out(size);
  if (size > 0 && !in.read(reinterpret_cast<char*>(out.data()),
                           static_cast<std::streamsize>(size))) {
    throw IoError("short read on " + path.string());
  }
  return out;
}

void WriteFileAtomic(const std::filesystem::path& path,
                     std::span<const std::uint8_t> bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("write failed for " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot rename into " + path.string() + ": " + ec.message());
  }
}

}  // namespace icheetah
