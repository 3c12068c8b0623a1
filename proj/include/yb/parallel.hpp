#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace yb {

// Worker count: YB_THREADS env var, default 1 (fully deterministic output
// ordering either way — results are merged in chunk order, not arrival order).
inline long thread_count() {
    if (const char* env = std::getenv("YB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return v;
    }
    return 1;
}

// Splits [0, n) into contiguous chunks, runs `body(chunk_index, begin, end)`
// on worker threads, one chunk per worker. Caller owns per-chunk result slots
// indexed by chunk_index, so merged output is independent of scheduling.
inline void parallel_chunks(long n, long workers,
                            const std::function<void(long, long, long)>& body) {
    if (n <= 0) return;
    if (workers > n) workers = n;
    if (workers <= 1) {
        body(0, 0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    const long base = n / workers, extra = n % workers;
    long begin = 0;
    for (long c = 0; c < workers; ++c) {
        const long len = base + (c < extra ? 1 : 0);
        const long lo = begin, hi = begin + len;
        pool.emplace_back([&body, c, lo, hi] { body(c, lo, hi); });
        begin = hi;
    }
    for (auto& t : pool) t.join();
}

}  // namespace yb
