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

#ifndef ICHEETAH_COMMON_ERROR_H_
#define ICHEETAH_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace icheetah {

// Broad failure classes. The CLI maps these onto process exit codes.
enum class ErrorCode {
  kParameter,
  kEncodingOverflow,
  kDimension,
  kLevel,
  kScale,
  kFormat,
  kKeyMismatch,
  kUnsupported,
  kDomain,
  kPool,
  kCacheMiss,
  kIo,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

#define ICHEETAH_DEFINE_ERROR(Name, Code)                            \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& message) : Error(Code, message) {} \
  };

ICHEETAH_DEFINE_ERROR(ParameterError, ErrorCode::kParameter)
ICHEETAH_DEFINE_ERROR(EncodingOverflowError, ErrorCode::kEncodingOverflow)
ICHEETAH_DEFINE_ERROR(DimensionError, ErrorCode::kDimension)
ICHEETAH_DEFINE_ERROR(LevelError, ErrorCode::kLevel)
ICHEETAH_DEFINE_ERROR(ScaleError, ErrorCode::kScale)
ICHEETAH_DEFINE_ERROR(FormatError, ErrorCode::kFormat)
ICHEETAH_DEFINE_ERROR(KeyMismatchError, ErrorCode::kKeyMismatch)
ICHEETAH_DEFINE_ERROR(UnsupportedError, ErrorCode::kUnsupported)
ICHEETAH_DEFINE_ERROR(DomainError, ErrorCode::kDomain)
ICHEETAH_DEFINE_ERROR(PoolError, ErrorCode::kPool)
ICHEETAH_DEFINE_ERROR(CacheMissError, ErrorCode::kCacheMiss)
ICHEETAH_DEFINE_ERROR(IoError, ErrorCode::kIo)

#undef ICHEETAH_DEFINE_ERROR

}  // namespace icheetah

#endif  // ICHEETAH_COMMON_ERROR_H_
