#pragma once

#include <cstdint>

#include "wfp/code.hpp"

namespace wfp::search {

enum class SearchStatus { Optimal, BudgetExhausted };

struct SearchOptions {
    std::uint64_t node_budget = 10'000'000;  // candidate evaluations
    std::uint64_t seed = 0;  // recorded in the result; the walk itself is orderly
    int threads = 1;
};

/// Outcome of a canonical-form backtracking run. best_code always passes
/// both verifiers; size is the true maximum exactly when status is Optimal
/// (the canonical space was exhausted within budget).
struct SearchResult {
    Code best_code;
    int size;
    SearchStatus status;
    std::uint64_t nodes_explored;
    std::uint64_t seed;
    double wall_seconds;
};

/// Depth-first search for large t-wFP codes in canonical form: first word
/// all-zeros, each later word lexicographically minimal within its
/// per-position symbol-relabeling orbit given the prefix, words ascending.
/// Sound because the property depends only on agreement patterns, which
/// relabeling preserves. t = 2 runs an incremental coincidence-family check
/// per candidate; other t fall back to the definitional verifier per node.
/// Requires n <= 20, q <= 8, t >= 1. Identical results for every thread
/// count; budget is a node count, so runs are reproducible.
SearchResult search_max_code(int n, int q, int t, const SearchOptions& opts = {});

}  // namespace wfp::search
