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

#include <cstdint>

namespace qotoc::rng {

// Counter-based generator: every draw is a pure function of
// (seed, stream, index). Shot i of stream s always sees the same value no
// matter how shots are split across threads.

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 finalizer (Stafford mix13).
constexpr std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

/// Keyed draw: the `index`-th value of stream `stream` under `seed`.
constexpr std::uint64_t draw(std::uint64_t seed, std::uint64_t stream,
                             std::uint64_t index) {
    const std::uint64_t base = mix64(seed ^ (stream * 0xDA942042E4DD58B5ULL));
    return mix64(base + (index + 1) * kGolden);
}

/// Uniform double in [0, 1) from the top 53 bits of a keyed draw.
constexpr double uniform(std::uint64_t seed, std::uint64_t stream,
                         std::uint64_t index) {
    return static_cast<double>(draw(seed, stream, index) >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound). Modulo bias is < bound / 2^64, far below
/// anything resolvable at desk-scale sample counts.
constexpr std::uint64_t uniform_below(std::uint64_t seed, std::uint64_t stream,
                                      std::uint64_t index,
                                      std::uint64_t bound) {
    return draw(seed, stream, index) % bound;
}

// Stream ids used by the estimators. Keeping them centralized avoids
// accidental stream collisions between modules.
enum Stream : std::uint64_t {
    kShotZ = 0,        // Bernoulli outcomes, sigma_z readout
    kShotY = 1,        // Bernoulli outcomes, sigma_y readout
    kMemberPickZ = 2,  // ensemble member choice per Z shot
    kMemberPickY = 3,  // ensemble member choice per Y shot
    kBasisSample = 4,  // basis-state ensemble for sampled mixed inputs
    kCircuitGen = 5,   // random circuit/spec generation in tests
};

} // namespace qotoc::rng
