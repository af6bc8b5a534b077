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

// NEON variants (aarch64 baseline, no extra compile flags needed). One
// float64x2_t holds a single complex double as (re, im).

#include "qotoc/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace qotoc::kernels {

namespace {

const float64x2_t kSign = {-1.0, 1.0};

// a * b for one complex double per register.
inline float64x2_t cmul(float64x2_t a, float64x2_t b) {
    const float64x2_t t1 = vmulq_f64(a, vdupq_laneq_f64(b, 0));
    const float64x2_t a_swap = vextq_f64(a, a, 1);
    const float64x2_t t2 = vmulq_f64(a_swap, vdupq_laneq_f64(b, 1));
    return vfmaq_f64(t1, t2, kSign);
}

inline float64x2_t load_c(const cdouble* p) {
    return vld1q_f64(reinterpret_cast<const double*>(p));
}

inline void store_c(cdouble* p, float64x2_t v) {
    vst1q_f64(reinterpret_cast<double*>(p), v);
}

void scale_neon(cdouble* a, std::size_t count, cdouble factor) {
    const float64x2_t f = load_c(&factor);
    for (std::size_t i = 0; i < count; ++i) {
        store_c(a + i, cmul(load_c(a + i), f));
    }
}

void scale_pattern2_neon(cdouble* a, std::size_t count, const cdouble* pattern) {
    const float64x2_t f0 = load_c(pattern);
    const float64x2_t f1 = load_c(pattern + 1);
    for (std::size_t i = 0; i < count; i += 2) {
        store_c(a + i, cmul(load_c(a + i), f0));
        store_c(a + i + 1, cmul(load_c(a + i + 1), f1));
    }
}

void scale_pattern4_neon(cdouble* a, std::size_t count, const cdouble* pattern) {
    const float64x2_t f0 = load_c(pattern);
    const float64x2_t f1 = load_c(pattern + 1);
    const float64x2_t f2 = load_c(pattern + 2);
    const float64x2_t f3 = load_c(pattern + 3);
    for (std::size_t i = 0; i < count; i += 4) {
        store_c(a + i, cmul(load_c(a + i), f0));
        store_c(a + i + 1, cmul(load_c(a + i + 1), f1));
        store_c(a + i + 2, cmul(load_c(a + i + 2), f2));
        store_c(a + i + 3, cmul(load_c(a + i + 3), f3));
    }
}

void rotate_pair_spans_neon(cdouble* a0, cdouble* a1, std::size_t count,
                            const cdouble* u) {
    const float64x2_t u00 = load_c(u + 0);
    const float64x2_t u10 = load_c(u + 1);
    const float64x2_t u01 = load_c(u + 2);
    const float64x2_t u11 = load_c(u + 3);
    for (std::size_t i = 0; i < count; ++i) {
        const float64x2_t x0 = load_c(a0 + i);
        const float64x2_t x1 = load_c(a1 + i);
        store_c(a0 + i, vaddq_f64(cmul(x0, u00), cmul(x1, u01)));
        store_c(a1 + i, vaddq_f64(cmul(x0, u10), cmul(x1, u11)));
    }
}

void rotate_interleaved_neon(cdouble* a, std::size_t pair_count,
                             const cdouble* u) {
    const float64x2_t u00 = load_c(u + 0);
    const float64x2_t u10 = load_c(u + 1);
    const float64x2_t u01 = load_c(u + 2);
    const float64x2_t u11 = load_c(u + 3);
    for (std::size_t i = 0; i < pair_count; ++i) {
        const float64x2_t x0 = load_c(a + 2 * i);
        const float64x2_t x1 = load_c(a + 2 * i + 1);
        store_c(a + 2 * i, vaddq_f64(cmul(x0, u00), cmul(x1, u01)));
        store_c(a + 2 * i + 1, vaddq_f64(cmul(x0, u10), cmul(x1, u11)));
    }
}

void matvec_rows_neon(cdouble* y, const cdouble* m, const cdouble* x,
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
        const float64x2_t xv = load_c(&xj);
        const cdouble* col = m + j * dim;
        for (std::size_t r = row_begin; r < row_end; ++r) {
            store_c(y + r, vaddq_f64(load_c(y + r), cmul(load_c(col + r), xv)));
        }
    }
}

constexpr Backend kNeon{
    "neon",
    scale_neon,
    scale_pattern2_neon,
    scale_pattern4_neon,
    rotate_pair_spans_neon,
    rotate_interleaved_neon,
    matvec_rows_neon,
};

} // namespace

const Backend* neon_backend() { return &kNeon; }

} // namespace qotoc::kernels

#endif // aarch64
