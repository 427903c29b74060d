#include <cstdint>
#include <vector>

#include "doctest.h"
#include "support/brute.hpp"
#include "wfp/chains.hpp"

TEST_SUITE_BEGIN("chains");

TEST_CASE("n=1 is the single chain (∅,{1})") {
    auto d = wfp::symmetric_chain_decomposition(1);
    REQUIRE(d.chains.size() == 1);
    REQUIRE(d.chains[0].size() == 2);
    CHECK(d.chains[0][0] == wfp::Subset::empty(1));
    CHECK(d.chains[0][1] == wfp::Subset::full(1));
}

TEST_CASE("n=4 has C(4,2)=6 chains covering all 16 subsets") {
    auto d = wfp::symmetric_chain_decomposition(4);
    CHECK(d.chains.size() == 6);
    std::size_t covered = 0;
    for (const auto& c : d.chains) covered += c.size();
    CHECK(covered == 16);
    CHECK(wfp::is_valid_decomposition(d));
}

TEST_CASE("n=3: three chains, the chain through ∅ has length 4") {
    auto d = wfp::symmetric_chain_decomposition(3);
    REQUIRE(d.chains.size() == 3);
    bool seen = false;
    for (const auto& c : d.chains) {
        if (c.front().is_empty()) {
            CHECK(c.size() == 4);
            seen = true;
        }
    }
    CHECK(seen);
}

TEST_CASE("full invariants for every n <= 12") {
    for (int n = 1; n <= 12; ++n) {
        auto d = wfp::symmetric_chain_decomposition(n);
        REQUIRE(wfp::is_valid_decomposition(d));
        CHECK(d.chains.size() == brute::binomial(n, n / 2));
        // independent cover check: every mask appears exactly once
        std::vector<int> seen(std::size_t{1} << n, 0);
        for (const auto& c : d.chains) {
            CHECK(c.front().size() + c.back().size() == n);
            for (std::size_t i = 0; i < c.size(); ++i) {
                seen[c[i].bits()] += 1;
                if (i) {
                    CHECK(c[i - 1].subset_of(c[i]));
                    CHECK(c[i].size() == c[i - 1].size() + 1);
                }
            }
        }
        for (int count : seen) CHECK(count == 1);
    }
}

TEST_CASE("range errors") {
    CHECK_THROWS_AS(wfp::symmetric_chain_decomposition(0), std::invalid_argument);
    CHECK_THROWS_AS(wfp::symmetric_chain_decomposition(25), std::invalid_argument);
}

TEST_SUITE_END();
