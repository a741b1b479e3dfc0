// Copyright 2026 The gammakit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace gammakit {

/// Number of worker threads used by scans. Defaults to 1; the CLI sets it from
/// GAMMAKIT_THREADS.
int thread_count();
void set_thread_count(int threads);

/// Runs body(i) for i in [0, count). Iterations are split into contiguous
/// chunks; callers write into per-index slots so results do not depend on the
/// thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace gammakit
