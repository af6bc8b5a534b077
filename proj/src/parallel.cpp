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

#include "qotoc/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qotoc {

namespace {
std::atomic<int> g_max_threads{0}; // 0 = unset, use hardware concurrency
}

int max_threads() {
    const int configured = g_max_threads.load(std::memory_order_relaxed);
    if (configured > 0) {
        return configured;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_max_threads(int n) {
    g_max_threads.store(n > 0 ? n : 0, std::memory_order_relaxed);
}

void parallel_for_chunks(
    std::size_t total, std::size_t chunk_size,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (total == 0) {
        return;
    }
    if (chunk_size == 0) {
        chunk_size = 1;
    }
    const std::size_t n_chunks = (total + chunk_size - 1) / chunk_size;
    const std::size_t n_workers =
        std::min<std::size_t>(static_cast<std::size_t>(max_threads()), n_chunks);

    auto run_chunk = [&](std::size_t c) {
        const std::size_t begin = c * chunk_size;
        const std::size_t end = std::min(begin + chunk_size, total);
        fn(c, begin, end);
    };

    if (n_workers <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) {
            run_chunk(c);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= n_chunks) {
                return;
            }
            try {
                run_chunk(c);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
                return;
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(n_workers);
    for (std::size_t i = 0; i < n_workers; ++i) {
        threads.emplace_back(worker);
    }
    for (auto& t : threads) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

} // namespace qotoc
