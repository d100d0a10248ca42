#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace pseudodisc {

/// Worker cap: min(hardware_concurrency, PSEUDODISC_THREADS if set).
inline int max_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("PSEUDODISC_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

/// Parallel loop over [0, n). Each index writes only its own output slot, so
/// results are identical to the serial loop regardless of scheduling.
inline void parallel_for(int n, const std::function<void(int)>& body) {
    int nt = std::min(max_threads(), n);
    if (nt <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t]() {
            for (int i = t; i < n; i += nt) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace pseudodisc
