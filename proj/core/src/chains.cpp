#include "wfp/chains.hpp"

#include <cstdint>

#include "wfp/bounds.hpp"

namespace wfp {
namespace {

struct Bracketing {
    std::uint64_t matched_closers;  // positions kept in every chain element
    std::uint64_t unmatched;        // closers-then-openers, in position order
};

// After cancelling matched ( ) pairs the residue always reads ")...)(...(" in
// position order, so a subset is its chain's minimum exactly when it contains
// no unmatched position.
Bracketing bracket(std::uint64_t s, int n) {
    std::uint64_t matched_closers = 0, unmatched_closers = 0;
    std::uint64_t open_stack[64];
    int depth = 0;
    for (int p = 0; p < n; ++p) {
        std::uint64_t bit = std::uint64_t{1} << p;
        if (s & bit) {
            if (depth > 0) {
                --depth;  // pops the matching opener
                matched_closers |= bit;
            } else {
                unmatched_closers |= bit;
            }
        } else {
            open_stack[depth++] = bit;
        }
    }
    std::uint64_t unmatched_openers = 0;
    for (int i = 0; i < depth; ++i) unmatched_openers |= open_stack[i];
    return {matched_closers, unmatched_closers | unmatched_openers};
}

}  // namespace

ChainDecomposition symmetric_chain_decomposition(int n) {
    if (n < 1 || n > 24)
        throw std::invalid_argument(
            "symmetric_chain_decomposition: n must be in 1..24");
    ChainDecomposition dec{n, {}};
    std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < count; ++s) {
        Bracketing b = bracket(s, n);
        if (s != b.matched_closers) continue;  // not the chain minimum
        std::vector<Subset> chain;
        chain.push_back(Subset::from_bits(s, n));
        std::uint64_t grown = s, rest = b.unmatched;
        while (rest) {
            std::uint64_t lowest = rest & (~rest + 1);
            grown |= lowest;
            rest &= ~lowest;
            chain.push_back(Subset::from_bits(grown, n));
        }
        dec.chains.push_back(std::move(chain));
    }
    return dec;
}

bool is_valid_decomposition(const ChainDecomposition& d) {
    int n = d.ground_size;
    if (n < 1 || n > 24) return false;
    if (d.chains.size() != bounds::binomial(n, n / 2)) return false;
    std::vector<bool> seen(std::size_t{1} << n, false);
    std::size_t covered = 0;
    for (const auto& chain : d.chains) {
        if (chain.empty()) return false;
        if (chain.front().size() + chain.back().size() != n) return false;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            const Subset& s = chain[i];
            if (s.ground_size() != n) return false;
            if (i > 0 && (!chain[i - 1].subset_of(s) ||
                          s.size() != chain[i - 1].size() + 1))
                return false;
            if (seen[s.bits()]) return false;
            seen[s.bits()] = true;
            ++covered;
        }
    }
    return covered == (std::size_t{1} << n);
}

}  // namespace wfp
