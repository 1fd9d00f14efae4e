// Copyright 2026 The anyonrng Authors
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

namespace anyonrng {

/// Worker count: explicit request if positive, else ANYONRNG_THREADS, else
/// the hardware concurrency (at least 1).
unsigned resolve_thread_count(int requested);

/// Runs body(i) for i in [0, count) on up to `threads` workers using static
/// contiguous chunks. Exceptions thrown by body are rethrown on the caller
/// (first one wins).
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace anyonrng
