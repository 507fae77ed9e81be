// Copyright 2026 The demonwork Authors
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

#ifndef DEMONWORK_PARALLEL_H
#define DEMONWORK_PARALLEL_H

#include <cstddef>
#include <functional>

namespace demonwork {

/// Worker cap: DEMONWORK_THREADS if set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
std::size_t default_worker_count();

/// Runs body(i) for i in [0, count) on up to `workers` threads. Each index is visited
/// exactly once; callers write results by index so output order never depends on
/// scheduling. The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)> &body);

}  // namespace demonwork

#endif
