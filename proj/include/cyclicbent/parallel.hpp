/*
   Copyright 2026 The cyclicbent Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCLICBENT_PARALLEL_HPP
#define CYCLICBENT_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace cyclicbent::parallel {

/// 0 means hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Splits [0, n) into contiguous chunks, one per worker. `fn(begin, end)` runs
/// once per chunk. Chunk boundaries do not depend on timing.
template <class Fn>
void for_chunks(std::size_t n, Fn&& fn) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(thread_count(), n));
    if (workers <= 1) {
        fn(std::size_t{0}, n);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t b = n * w / workers, e = n * (w + 1) / workers;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
}

/// Smallest i in [0, n) with pred(i) true, or n if none. Each chunk stops at
/// its own first hit, so every index below the returned one was evaluated.
template <class Pred>
std::size_t first_failure(std::size_t n, Pred&& pred) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(thread_count(), n));
    std::vector<std::size_t> hits(workers, n);
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t b = n * w / workers, e = n * (w + 1) / workers;
        auto body = [&pred, &hits, w, b, e] {
            for (std::size_t i = b; i < e; ++i)
                if (pred(i)) {
                    hits[w] = i;
                    return;
                }
        };
        if (workers == 1)
            body();
        else
            pool.emplace_back(body);
    }
    pool.clear();
    return *std::min_element(hits.begin(), hits.end());
}

}  // namespace cyclicbent::parallel

#endif
