#pragma once

#include <vector>

#include "wfp/subset.hpp"

namespace wfp {

/// A partition of the power set of [n] into symmetric chains: each chain has
/// consecutive sizes k, k+1, ..., n-k, and the number of chains is C(n, n/2).
struct ChainDecomposition {
    int ground_size;
    std::vector<std::vector<Subset>> chains;
};

/// Builds the decomposition with the bracket-matching rule: position p reads
/// as ')' when p is in the subset and '(' otherwise; the matched pairs are
/// fixed across a chain and the unmatched positions toggle one by one.
/// Materializes all 2^n subsets, so n is capped at 24.
ChainDecomposition symmetric_chain_decomposition(int n);

/// Checks the three defining invariants (symmetric saturated chains, disjoint
/// cover of the power set, chain count C(n, floor(n/2))).
bool is_valid_decomposition(const ChainDecomposition& d);

}  // namespace wfp
