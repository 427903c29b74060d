#include <cstdint>
#include <set>

#include "doctest.h"
#include "support/brute.hpp"
#include "wfp/family.hpp"
#include "wfp/oracles.hpp"

using namespace wfp;
using oracles::OracleStatus;

TEST_SUITE_BEGIN("oracles");

TEST_CASE("max_non2cov_sperner: frozen optima and node counts") {
    struct Row {
        int n, optimum;
        std::uint64_t nodes;
    };
    const Row rows[] = {{1, 1, 1},   {2, 1, 1},   {3, 3, 3},   {4, 4, 6},
                        {5, 10, 18}, {6, 15, 58}, {7, 35, 304}};
    for (const Row& r : rows) {
        auto c = oracles::max_non2cov_sperner(r.n);
        CAPTURE(r.n);
        CHECK(c.status == OracleStatus::Exact);
        CHECK(c.optimum == r.optimum);
        CHECK(c.nodes == r.nodes);
        CHECK(c.search_space_size == (std::uint64_t{1} << r.n) - 1);
        REQUIRE(c.witness.size() == r.optimum);
        CHECK(is_sperner(c.witness));
        CHECK(is_non_2_covering(c.witness));
    }
}

TEST_CASE("max_non2cov_sperner: agrees with an independent brute search") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(oracles::max_non2cov_sperner(n).optimum == brute::max_non2cov(n));
    }
}

TEST_CASE("max_non2cov_sperner: n=3 witness") {
    auto c = oracles::max_non2cov_sperner(3);
    REQUIRE(c.witness.size() == 3);
    CHECK(c.witness[0] == Subset::of({1}, 3));
    CHECK(c.witness[1] == Subset::of({2}, 3));
    CHECK(c.witness[2] == Subset::of({3}, 3));
}

TEST_CASE("max_non2cov_sperner: range validation") {
    CHECK_THROWS_AS(oracles::max_non2cov_sperner(0), std::invalid_argument);
    CHECK_THROWS_AS(oracles::max_non2cov_sperner(13), std::invalid_argument);
}

TEST_CASE("exhaustive_max_code: frozen optima and node counts") {
    struct Row {
        int n, q, optimum;
        std::uint64_t nodes;
    };
    const Row rows[] = {{1, 2, 2, 1},    {2, 2, 2, 6},    {3, 2, 4, 33},  {4, 2, 5, 324},
                        {5, 2, 6, 7841}, {2, 3, 2, 36},   {3, 3, 4, 631}, {2, 4, 2, 120},
                        {3, 4, 4, 4662}, {2, 5, 2, 300},  {3, 5, 4, 20934}};
    for (const Row& r : rows) {
        auto c = oracles::exhaustive_max_code(r.n, r.q, 2);
        CAPTURE(r.n);
        CAPTURE(r.q);
        CHECK(c.status == OracleStatus::Exact);
        CHECK(c.optimum == r.optimum);
        CHECK(c.nodes == r.nodes);
        std::uint64_t space = 1;
        for (int i = 0; i < r.n; ++i) space *= r.q;
        CHECK(c.search_space_size == space);
        CHECK(c.witness.size() == r.optimum);
        CHECK_FALSE(is_twfp_direct(c.witness, 2).has_value());
        CHECK_FALSE(is_2wfp_structural(c.witness).has_value());
    }
}

TEST_CASE("exhaustive_max_code: (3,2) witness is the even-weight code") {
    auto c = oracles::exhaustive_max_code(3, 2, 2);
    REQUIRE(c.optimum == 4);
    CHECK(c.witness == Code(3, 2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
}

TEST_CASE("exhaustive_max_code: t=1 admits the whole space") {
    // singleton coalitions only reproduce their own word
    CHECK(oracles::exhaustive_max_code(2, 2, 1).optimum == 4);
    CHECK(oracles::exhaustive_max_code(2, 3, 1).optimum == 9);
}

TEST_CASE("exhaustive_max_code: alphabet mirroring leaves the optimum alone") {
    oracles::ExhaustiveOptions rev;
    rev.reverse_symbol_order = true;
    CHECK(oracles::exhaustive_max_code(3, 3, 2, rev).optimum == 4);
    CHECK(oracles::exhaustive_max_code(4, 2, 2, rev).optimum == 5);
}

TEST_CASE("exhaustive_max_code: exhausted budget degrades to inconclusive") {
    oracles::ExhaustiveOptions opts;
    opts.node_budget = 5;
    auto c = oracles::exhaustive_max_code(4, 2, 2, opts);
    CHECK(c.status == OracleStatus::Inconclusive);
    CHECK(c.optimum >= 1);
    CHECK(c.optimum <= 5);
    CHECK(c.witness.size() == c.optimum);
    CHECK_FALSE(is_twfp_direct(c.witness, 2).has_value());
}

TEST_CASE("exhaustive_max_code: certificates are thread-count invariant") {
    oracles::ExhaustiveOptions one, four;
    one.threads = 1;
    four.threads = 4;
    auto a = oracles::exhaustive_max_code(4, 3, 2, one);
    auto b = oracles::exhaustive_max_code(4, 3, 2, four);
    CHECK(a.optimum == b.optimum);
    CHECK(a.nodes == b.nodes);
    CHECK(a.witness == b.witness);
}

TEST_CASE("exhaustive_max_code: validation") {
    CHECK_THROWS_AS(oracles::exhaustive_max_code(21, 2, 2), std::invalid_argument);  // 2^21 states
    CHECK_THROWS_AS(oracles::exhaustive_max_code(3, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(oracles::exhaustive_max_code(0, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(oracles::exhaustive_max_code(3, 1, 2), std::invalid_argument);
}

TEST_CASE("random_code: deterministic, distinct, in range") {
    Code a = oracles::random_code(6, 3, 20, 42);
    Code b = oracles::random_code(6, 3, 20, 42);
    CHECK(a == b);
    CHECK(a.length() == 6);
    CHECK(a.alphabet_size() == 3);
    CHECK(a.size() == 20);
    std::set<Word> seen;
    for (const auto& w : a.words()) {
        for (auto s : w) CHECK(s < 3);
        seen.insert(w);
    }
    CHECK(seen.size() == 20);

    CHECK_FALSE(oracles::random_code(6, 3, 20, 43) == a);
}

TEST_CASE("random_code: can exhaust the whole space") {
    Code c = oracles::random_code(2, 2, 4, 7);
    std::set<Word> seen(c.words().begin(), c.words().end());
    CHECK(seen.size() == 4);
    CHECK_THROWS_AS(oracles::random_code(2, 2, 5, 7), std::invalid_argument);
}

TEST_CASE("random_family: honors sizes and constraints") {
    using oracles::FamilyConstraint;
    Family f = oracles::random_family(8, {2, 3, 3, 5}, FamilyConstraint::Sperner, 11);
    REQUIRE(f.size() == 4);
    CHECK(f[0].size() == 2);
    CHECK(f[1].size() == 3);
    CHECK(f[2].size() == 3);
    CHECK(f[3].size() == 5);
    CHECK(is_sperner(f));

    Family g = oracles::random_family(7, {3, 3, 3, 4}, FamilyConstraint::Intersecting, 12);
    CHECK(is_k_intersecting(g, 1));

    Family h = oracles::random_family(6, {2, 3, 3}, FamilyConstraint::Non2Covering, 13);
    CHECK(is_non_2_covering(h));

    Family both = oracles::random_family(9, {4, 4, 4}, FamilyConstraint::SpernerAndNon2Covering, 14);
    CHECK(is_sperner(both));
    CHECK(is_non_2_covering(both));
}

TEST_CASE("random_family: deterministic in seed, members distinct") {
    using oracles::FamilyConstraint;
    Family a = oracles::random_family(10, {3, 3, 3, 3, 3}, FamilyConstraint::Sperner, 77);
    Family b = oracles::random_family(10, {3, 3, 3, 3, 3}, FamilyConstraint::Sperner, 77);
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    for (int i = 0; i < a.size(); ++i) {
        for (int j = i + 1; j < a.size(); ++j) CHECK_FALSE(a[i] == a[j]);
    }
}

TEST_CASE("random_family: rejects impossible requests") {
    using oracles::FamilyConstraint;
    // only two singletons exist in [2], and they do not intersect
    CHECK_THROWS_AS(oracles::random_family(2, {1, 1, 1}, FamilyConstraint::None, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracles::random_family(4, {1, 1}, FamilyConstraint::Intersecting, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracles::random_family(17, {3}, FamilyConstraint::None, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracles::random_family(4, {5}, FamilyConstraint::None, 1),
                    std::invalid_argument);
}

TEST_SUITE_END();
