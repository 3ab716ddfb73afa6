// Copyright 2026 The rglorot Authors
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

namespace rglorot {

/// Runs body(i) for i in [0, count) on up to `threads` workers.
///
/// Work items must be independent and write only to their own slot; callers
/// reduce afterwards in index order, which keeps results identical for any
/// thread count. If bodies throw, the exception of the lowest failing index
/// is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

/// Clamps a requested thread count to [1, count]; 0 means hardware concurrency.
unsigned effective_threads(unsigned requested, std::size_t count);

/// Pins the BLAS/LAPACK backend to one internal thread (no-op when the
/// backend does not expose a control). Parallelism is over trials instead.
void pin_blas_threads();

}  // namespace rglorot
