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

// AVX2+FMA variants. One __m256d holds two complex doubles in interleaved
// (re, im) layout. Complex products use the fmaddsub idiom:
//   even lanes: re(a)*re(b) - im(a)*im(b)
//   odd lanes:  im(a)*re(b) + re(a)*im(b)
// This file is compiled with -mavx2 -mfma; callers reach it only through
// the dispatch table after a cpuid check.

#include "qotoc/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace qotoc::kernels {

namespace {

// (a * b) for two packed complex doubles per register.
inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);          // [br0 br0 br1 br1]
    const __m256d b_im = _mm256_permute_pd(b, 0xF);     // [bi0 bi0 bi1 bi1]
    const __m256d a_swap = _mm256_permute_pd(a, 0x5);   // [ai0 ar0 ai1 ar1]
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swap, b_im));
}

inline __m256d broadcast_c(cdouble z) {
    return _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(&z));
}

void scale_avx2(cdouble* a, std::size_t count, cdouble factor) {
    double* p = reinterpret_cast<double*>(a);
    const __m256d f = broadcast_c(factor);
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const __m256d v = _mm256_loadu_pd(p + 2 * i);
        _mm256_storeu_pd(p + 2 * i, cmul(v, f));
    }
    for (; i < count; ++i) {
        a[i] *= factor;
    }
}

void scale_pattern2_avx2(cdouble* a, std::size_t count, const cdouble* pattern) {
    double* p = reinterpret_cast<double*>(a);
    const __m256d f = _mm256_loadu_pd(reinterpret_cast<const double*>(pattern));
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const __m256d v = _mm256_loadu_pd(p + 2 * i);
        _mm256_storeu_pd(p + 2 * i, cmul(v, f));
    }
    for (; i < count; ++i) {
        a[i] *= pattern[i % 2];
    }
}

void scale_pattern4_avx2(cdouble* a, std::size_t count, const cdouble* pattern) {
    double* p = reinterpret_cast<double*>(a);
    const __m256d f01 = _mm256_loadu_pd(reinterpret_cast<const double*>(pattern));
    const __m256d f23 =
        _mm256_loadu_pd(reinterpret_cast<const double*>(pattern + 2));
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256d v01 = _mm256_loadu_pd(p + 2 * i);
        const __m256d v23 = _mm256_loadu_pd(p + 2 * i + 4);
        _mm256_storeu_pd(p + 2 * i, cmul(v01, f01));
        _mm256_storeu_pd(p + 2 * i + 4, cmul(v23, f23));
    }
    for (; i < count; ++i) {
        a[i] *= pattern[i % 4];
    }
}

void rotate_pair_spans_avx2(cdouble* a0, cdouble* a1, std::size_t count,
                            const cdouble* u) {
    double* p0 = reinterpret_cast<double*>(a0);
    double* p1 = reinterpret_cast<double*>(a1);
    const __m256d u00 = broadcast_c(u[0]);
    const __m256d u10 = broadcast_c(u[1]);
    const __m256d u01 = broadcast_c(u[2]);
    const __m256d u11 = broadcast_c(u[3]);
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const __m256d x0 = _mm256_loadu_pd(p0 + 2 * i);
        const __m256d x1 = _mm256_loadu_pd(p1 + 2 * i);
        const __m256d y0 = _mm256_add_pd(cmul(x0, u00), cmul(x1, u01));
        const __m256d y1 = _mm256_add_pd(cmul(x0, u10), cmul(x1, u11));
        _mm256_storeu_pd(p0 + 2 * i, y0);
        _mm256_storeu_pd(p1 + 2 * i, y1);
    }
    for (; i < count; ++i) {
        const cdouble x0 = a0[i];
        const cdouble x1 = a1[i];
        a0[i] = u[0] * x0 + u[2] * x1;
        a1[i] = u[1] * x0 + u[3] * x1;
    }
}

void rotate_interleaved_avx2(cdouble* a, std::size_t pair_count,
                             const cdouble* u) {
    double* p = reinterpret_cast<double*>(a);
    // Column vectors of u packed as (u00,u10) and (u01,u11).
    const __m256d col0 = _mm256_setr_pd(u[0].real(), u[0].imag(),
                                        u[1].real(), u[1].imag());
    const __m256d col1 = _mm256_setr_pd(u[2].real(), u[2].imag(),
                                        u[3].real(), u[3].imag());
    for (std::size_t i = 0; i < pair_count; ++i) {
        const __m256d v = _mm256_loadu_pd(p + 4 * i); // [a0 a1]
        const __m256d x0 = _mm256_permute2f128_pd(v, v, 0x00); // [a0 a0]
        const __m256d x1 = _mm256_permute2f128_pd(v, v, 0x11); // [a1 a1]
        const __m256d y = _mm256_add_pd(cmul(x0, col0), cmul(x1, col1));
        _mm256_storeu_pd(p + 4 * i, y);
    }
}

void matvec_rows_avx2(cdouble* y, const cdouble* m, const cdouble* x,
                      std::size_t dim, std::size_t row_begin,
                      std::size_t row_end) {
    for (std::size_t r = row_begin; r < row_end; ++r) {
        y[r] = cdouble{0.0, 0.0};
    }
    double* py = reinterpret_cast<double*>(y);
    for (std::size_t j = 0; j < dim; ++j) {
        const cdouble xj = x[j];
        if (xj == cdouble{0.0, 0.0}) {
            continue;
        }
        const cdouble* col = m + j * dim;
        const double* pc = reinterpret_cast<const double*>(col);
        const __m256d xv = broadcast_c(xj);
        std::size_t r = row_begin;
        for (; r + 2 <= row_end; r += 2) {
            const __m256d cv = _mm256_loadu_pd(pc + 2 * r);
            const __m256d acc = _mm256_loadu_pd(py + 2 * r);
            _mm256_storeu_pd(py + 2 * r, _mm256_add_pd(acc, cmul(cv, xv)));
        }
        for (; r < row_end; ++r) {
            y[r] += col[r] * xj;
        }
    }
}

constexpr Backend kAvx2{
    "avx2",
    scale_avx2,
    scale_pattern2_avx2,
    scale_pattern4_avx2,
    rotate_pair_spans_avx2,
    rotate_interleaved_avx2,
    matvec_rows_avx2,
};

} // namespace

const Backend* avx2_backend_if_supported() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")
               ? &kAvx2
               : nullptr;
}

} // namespace qotoc::kernels

#endif // x86
