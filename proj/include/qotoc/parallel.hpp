// Copyright 2026 The qotoc developers
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

namespace qotoc {

/// Worker-thread budget for coarse-grained loops (basis averages, shot
/// batches, spectral moments). Defaults to the hardware concurrency.
int max_threads();
void set_max_threads(int n);

/// Runs fn(chunk_index, begin, end) over [0, total) split into fixed-size
/// chunks. The chunk grid depends only on (total, chunk_size), never on the
/// thread count, so callers that store per-chunk partial results and reduce
/// them in chunk order get identical results at any parallelism degree.
void parallel_for_chunks(
    std::size_t total, std::size_t chunk_size,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

} // namespace qotoc
