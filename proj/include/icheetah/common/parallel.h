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

#ifndef ICHEETAH_COMMON_PARALLEL_H_
#define ICHEETAH_COMMON_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace icheetah {

// ICHEETAH_WORKERS when set to a positive integer, else the core count.
int DefaultWorkerCount();

// Runs body(i) for every i in [begin, end) on up to `workers` threads. Indices
// are claimed dynamically; the first exception thrown is rethrown after all
// threads have stopped.
void ParallelFor(std::size_t begin, std::size_t end, int workers,
                 const std::function<void(std::size_t)>& body);

}  // namespace icheetah

#endif  // ICHEETAH_COMMON_PARALLEL_H_
