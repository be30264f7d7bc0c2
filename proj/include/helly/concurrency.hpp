#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace helly {

// Chunked parallel for over [0, n); f(i) must only write to slot i of
// caller-owned storage so results stay deterministic regardless of thread
// count.
inline void parallel_for(size_t n, int threads, const std::function<void(size_t)>& f) {
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) f(i);
        return;
    }
    size_t nt = std::min<size_t>(threads, n);
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (size_t t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n) return;
                f(i);
            }
        });
    for (auto& th : pool) th.join();
}

}  // namespace helly
