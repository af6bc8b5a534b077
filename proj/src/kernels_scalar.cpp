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

// Reference kernels. These define the semantics every SIMD variant is
// tested against; keep them simple enough to audit by eye.

#include "qotoc/kernels.hpp"

namespace qotoc::kernels {

namespace {

void scale_scalar(cdouble* a, std::size_t count, cdouble factor) {
    for (std::size_t i = 0; i < count; ++i) {
        a[i] *= factor;
    }
}

void scale_pattern2_scalar(cdouble* a, std::size_t count,
                           const cdouble* pattern) {
    for (std::size_t i = 0; i < count; i += 2) {
        a[i] *= pattern[0];
        a[i + 1] *= pattern[1];
    }
}

void scale_pattern4_scalar(cdouble* a, std::size_t count,
                           const cdouble* pattern) {
    for (std::size_t i = 0; i < count; i += 4) {
        a[i] *= pattern[0];
        a[i + 1] *= pattern[1];
        a[i + 2] *= pattern[2];
        a[i + 3] *= pattern[3];
    }
}

void rotate_pair_spans_scalar(cdouble* a0, cdouble* a1, std::size_t count,
                              const cdouble* u) {
    const cdouble u00 = u[0], u10 = u[1], u01 = u[2], u11 = u[3];
    for (std::size_t i = 0; i < count; ++i) {
        const cdouble x0 = a0[i];
        const cdouble x1 = a1[i];
        a0[i] = u00 * x0 + u01 * x1;
        a1[i] = u10 * x0 + u11 * x1;
    }
}

void rotate_interleaved_scalar(cdouble* a, std::size_t pair_count,
                               const cdouble* u) {
    const cdouble u00 = u[0], u10 = u[1], u01 = u[2], u11 = u[3];
    for (std::size_t i = 0; i < pair_count; ++i) {
        const cdouble x0 = a[2 * i];
        const cdouble x1 = a[2 * i + 1];
        a[2 * i] = u00 * x0 + u01 * x1;
        a[2 * i + 1] = u10 * x0 + u11 * x1;
    }
}

void matvec_rows_scalar(cdouble* y, const cdouble* m, const cdouble* x,
                        std::size_t dim, std::size_t row_begin,
                        std::size_t row_end) {
    for (std::size_t r = row_begin; r < row_end; ++r) {
        y[r] = cdouble{0.0, 0.0};
    }
    for (std::size_t j = 0; j < dim; ++j) {
        const cdouble xj = x[j];
        if (xj == cdouble{0.0, 0.0}) {
            continue;
        }
        const cdouble* col = m + j * dim;
        for (std::size_t r = row_begin; r < row_end; ++r) {
            y[r] += col[r] * xj;
        }
    }
}

constexpr Backend kScalar{
    "scalar",
    scale_scalar,
    scale_pattern2_scalar,
    scale_pattern4_scalar,
    rotate_pair_spans_scalar,
    rotate_interleaved_scalar,
    matvec_rows_scalar,
};

} // namespace

const Backend& scalar_backend() { return kScalar; }

} // namespace qotoc::kernels
