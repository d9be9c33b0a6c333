#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ringres {

/// Worker cap: RINGRES_THREADS when set (>= 1), hardware concurrency
/// otherwise.
inline int worker_limit() {
    if (const char* env = std::getenv("RINGRES_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1)
            return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(i) for i in [0, count). Each index owns its output slot, so
/// results are independent of scheduling; callers assemble in index order.
template <class Fn>
void parallel_for(int count, Fn&& fn) {
    const int workers = std::min(worker_limit(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([=] {
            for (int i = w; i < count; i += workers)
                fn(i);
        });
    }
    for (auto& t : pool)
        t.join();
}

} // namespace ringres
