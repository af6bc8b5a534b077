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

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace qotoc::kernels {

using cdouble = std::complex<double>;

// The amplitude-update inner loops, factored so that all index/stride logic
// lives in portable code and the backends only ever see contiguous spans.
// Every backend must produce results equal to the scalar reference up to
// floating-point reassociation (<= 1e-12); this is equivalence-tested.
struct Backend {
    const char* name;

    /// a[i] *= factor for i in [0, count).
    void (*scale)(cdouble* a, std::size_t count, cdouble factor);

    /// a[i] *= pattern[i % 2]; count must be even.
    void (*scale_pattern2)(cdouble* a, std::size_t count, const cdouble* pattern);

    /// a[i] *= pattern[i % 4]; count must be a multiple of 4.
    void (*scale_pattern4)(cdouble* a, std::size_t count, const cdouble* pattern);

    /// In-place 2x2 update of paired spans:
    ///   (a0[i], a1[i]) <- (u00 a0[i] + u01 a1[i], u10 a0[i] + u11 a1[i]).
    /// u is column-major: {u00, u10, u01, u11}.
    void (*rotate_pair_spans)(cdouble* a0, cdouble* a1, std::size_t count,
                              const cdouble* u);

    /// Same 2x2 update with the pair interleaved in one span:
    /// pairs (a[2i], a[2i+1]) for i in [0, pair_count).
    void (*rotate_interleaved)(cdouble* a, std::size_t pair_count,
                               const cdouble* u);

    /// Dense mat-vec y = M x with column-major M (dim x dim), restricted to
    /// rows [row_begin, row_end). y has dim entries and is overwritten on
    /// the selected rows.
    void (*matvec_rows)(cdouble* y, const cdouble* m, const cdouble* x,
                        std::size_t dim, std::size_t row_begin,
                        std::size_t row_end);
};

/// Scalar reference backend (always present).
const Backend& scalar_backend();

/// Backend currently in use by the gate kernels.
const Backend& active_backend();

/// Names of all backends usable on this machine, best first.
std::vector<std::string> available_backends();

/// Selects a backend by name ("scalar", "avx2", "neon"); throws
/// std::invalid_argument if the name is unknown or unsupported here.
void select_backend(const std::string& name);

/// Picks the best backend supported by the running CPU (the default).
void select_best_backend();

#if defined(__x86_64__) || defined(__i386__)
const Backend* avx2_backend_if_supported();
#endif
#if defined(__aarch64__)
const Backend* neon_backend();
#endif

} // namespace qotoc::kernels
