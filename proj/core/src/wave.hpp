#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace wfp::detail {

template <typename Best>
struct WaveRootResult {
    std::uint64_t nodes = 0;
    bool completed = false;
    Best best{};
};

// Deterministic node-budget accounting over independent root subtrees.
//
// Roots are charged against the remaining budget strictly in ascending
// order. Speculative parallel results are taken verbatim only when the root
// completed within what the sequential walk actually has left; otherwise
// that one root is re-run truncated to exactly the remainder. Results are
// therefore bit-identical for every thread count. `best` keeps the first
// root-order result of maximal size; ties never replace it. Sets exact to
// false when a root was truncated or roots were left unprocessed. Returns
// the number of nodes consumed.
template <typename Best, typename RunRoot>
std::uint64_t wave_run(std::uint64_t root_begin, std::uint64_t root_end, std::uint64_t budget,
                       int threads, RunRoot&& run_root, Best& best, bool& exact) {
    std::uint64_t remaining = budget;
    exact = true;
    auto merge = [&](const WaveRootResult<Best>& r) {
        remaining -= r.nodes;
        if (r.best.size() > best.size()) best = r.best;
        return r.completed;
    };
    auto account = [&](std::uint64_t root, const WaveRootResult<Best>* speculative) {
        if (speculative != nullptr && speculative->completed && speculative->nodes <= remaining) {
            return merge(*speculative);
        }
        return merge(run_root(root, remaining));
    };

    if (threads <= 1) {
        for (std::uint64_t root = root_begin; root < root_end && exact; ++root) {
            if (remaining == 0) {
                exact = false;
                break;
            }
            exact = account(root, nullptr);
        }
        return budget - remaining;
    }

    const std::uint64_t chunk = 1024;
    for (std::uint64_t at = root_begin; at < root_end && exact; at += chunk) {
        const std::uint64_t end = std::min(root_end, at + chunk);
        std::vector<WaveRootResult<Best>> res(end - at);
        const std::uint64_t speculative_cap = remaining;
        std::atomic<std::uint64_t> next{at};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::uint64_t r = next.fetch_add(1);
                    if (r >= end) break;
                    res[r - at] = run_root(r, speculative_cap);
                }
            });
        }
        for (auto& th : pool) th.join();
        for (std::uint64_t r = at; r < end && exact; ++r) {
            if (remaining == 0) {
                exact = false;
                break;
            }
            exact = account(r, &res[r - at]);
        }
    }
    return budget - remaining;
}

}  // namespace wfp::detail
