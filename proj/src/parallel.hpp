#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace critset::detail {

// Runs fn(i) for every i in [0, count) on up to `threads` workers. Callers
// write results into slot i, so output order never depends on scheduling.
template <typename F>
void parallel_for_index(std::size_t count, unsigned threads, F&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::jthread> pool;
    const auto spawn = std::min<std::size_t>(threads, count);
    pool.reserve(spawn);
    for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(worker);
}

}  // namespace critset::detail
