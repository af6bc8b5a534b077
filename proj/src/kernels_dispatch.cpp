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

#include "qotoc/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace qotoc::kernels {

namespace {

std::vector<const Backend*> detect_backends() {
    std::vector<const Backend*> found;
#if defined(__x86_64__) || defined(__i386__)
    if (const Backend* b = avx2_backend_if_supported()) {
        found.push_back(b);
    }
#endif
#if defined(__aarch64__)
    found.push_back(neon_backend());
#endif
    found.push_back(&scalar_backend());
    return found;
}

const std::vector<const Backend*>& backends() {
    static const std::vector<const Backend*> list = detect_backends();
    return list;
}

std::atomic<const Backend*> g_active{nullptr};

} // namespace

const Backend& active_backend() {
    const Backend* b = g_active.load(std::memory_order_acquire);
    if (b == nullptr) {
        b = backends().front();
        g_active.store(b, std::memory_order_release);
    }
    return *b;
}

std::vector<std::string> available_backends() {
    std::vector<std::string> names;
    for (const Backend* b : backends()) {
        names.emplace_back(b->name);
    }
    return names;
}

void select_backend(const std::string& name) {
    for (const Backend* b : backends()) {
        if (name == b->name) {
            g_active.store(b, std::memory_order_release);
            return;
        }
    }
    throw std::invalid_argument("unknown or unsupported kernel backend: " +
                                name);
}

void select_best_backend() {
    g_active.store(backends().front(), std::memory_order_release);
}

} // namespace qotoc::kernels
