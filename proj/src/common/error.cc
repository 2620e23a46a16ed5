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

#include "icheetah/common/error.h"

namespace icheetah {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParameter: return "parameter error";
    case ErrorCode::kEncodingOverflow: return "encoding overflow";
    case ErrorCode::kDimension: return "dimension error";
    case ErrorCode::kLevel: return "level error";
    case ErrorCode::kScale: return "scale error";
    case ErrorCode::kFormat: return "format error";
    case ErrorCode::kKeyMismatch: return "key mismatch";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kPool: return "pool error";
    case ErrorCode::kCacheMiss: return "cache miss";
    case ErrorCode::kIo: return "i/o error";
  }
  return "error";
}

}  // namespace icheetah
