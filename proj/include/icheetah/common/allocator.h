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

#ifndef ICHEETAH_COMMON_ALLOCATOR_H_
#define ICHEETAH_COMMON_ALLOCATOR_H_

namespace icheetah::common {

// Keeps freed ciphertext-sized blocks in the heap for reuse instead of
// returning them to the kernel. Call once at process start, before other
// threads exist. No-op where the C library offers no such control.
void TuneAllocatorForCiphertexts();

}  // namespace icheetah::common

#endif  // ICHEETAH_COMMON_ALLOCATOR_H_
