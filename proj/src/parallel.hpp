#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace acfofdm::detail {

// Static index partition over [0, total): results must land in per-index
// slots inside `body`, which makes the outcome identical for any worker
// count. workers == 0 means hardware concurrency.
inline void parallel_indexed(std::uint64_t total, unsigned workers,
                             const std::function<void(std::uint64_t)>& body) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers <= 1 || total < 2) {
        for (std::uint64_t i = 0; i < total; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = static_cast<std::uint64_t>(w) * chunk;
        const std::uint64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([begin, end, &body] {
            for (std::uint64_t i = begin; i < end; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace acfofdm::detail
