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

// Little-endian byte buffers shared by every on-disk format, plus whole-file
// helpers that never leave a partially written output behind.

#ifndef ICHEETAH_COMMON_BYTES_H_
#define ICHEETAH_COMMON_BYTES_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace icheetah {

using Bytes = std::vector<std::uint8_t>;

class ByteWriter {
 public:
  void PutU8(std::uint8_t v) { out_.push_back(v); }
  void PutU16(std::uint16_t v) { PutLe(v, 2); }
  void PutU32(std::uint32_t v) { PutLe(v, 4); }
  void PutU64(std::uint64_t v) { PutLe(v, 8); }
  void PutI8(std::int8_t v) { out_.push_back(static_cast<std::uint8_t>(v)); }
  void PutF64(double v);
  void PutMagic(std::string_view magic);
  void PutBytes(std::span<const std::uint8_t> bytes);
  void PutU64Array(std::span<const std::uint64_t> values);

  const Bytes& bytes() const { return out_; }
  Bytes Take() { return std::move(out_); }

 private:
  void PutLe(std::uint64_t v, int width);
  Bytes out_;
};

// Every read is bounds-checked; running off the end throws FormatError.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t GetU8();
  std::uint16_t GetU16() { return static_cast<std::uint16_t>(GetLe(2)); }
  std::uint32_t GetU32() { return static_cast<std::uint32_t>(GetLe(4)); }
  std::uint64_t GetU64() { return GetLe(8); }
  std::int8_t GetI8() { return static_cast<std::int8_t>(GetU8()); }
  double GetF64();
  void ExpectMagic(std::string_view magic);
  std::span<const std::uint8_t> GetBytes(std::size_t n);
  void GetU64Array(std::span<std::uint64_t> out);

  std::size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return pos_ == data_.size(); }
  // Throws FormatError unless the whole buffer was consumed.
  void ExpectEnd() const;

 private:
  std::uint64_t GetLe(int width);
  void Require(std::size_t n) const;

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

Bytes ReadFileBytes(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it into place.
void WriteFileAtomic(const std::filesystem::path& path,
                     std::span<const std::uint8_t> bytes);

}  // namespace icheetah

#endif  // ICHEETAH_COMMON_BYTES_H_
