// Copyright 2026 The tascope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace tascope {

/// Worker count from TA_SCOPE_THREADS; unset, empty, 0 or garbage mean
/// hardware concurrency.
std::size_t default_worker_count();

/**
 * Runs body(i) for every i in [0, count) on up to `workers` threads.
 *
 * The range is split into contiguous chunks and every index is visited
 * exactly once. Callers write into preallocated slots, so results do not
 * depend on the worker count. The first exception thrown by any body is
 * rethrown on the calling thread after all workers join.
 */
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)> &body);

} // namespace tascope
