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

#include "cyclicbent/parallel.hpp"

#include <atomic>

namespace cyclicbent::parallel {

namespace {
std::atomic<unsigned> configured{0};
}

void set_thread_count(unsigned n) { configured.store(n); }

unsigned thread_count() {
    const unsigned n = configured.load();
    if (n) return n;
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace cyclicbent::parallel
