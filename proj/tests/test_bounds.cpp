#include "doctest.h"
#include "support/brute.hpp"
#include "wfp/bounds.hpp"

using namespace wfp::bounds;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("binomial") {
    CHECK(binomial(8, 3) == 56);
    CHECK(binomial(13, 6) == 1716);
    CHECK(binomial(0, 0) == 1);
    for (int n = 0; n <= 64; ++n) {
        CHECK(binomial(n, 0) == 1);
        CHECK(binomial(n, n) == 1);
    }
    CHECK(binomial(64, 32) == 1832624140942590534ull);
    for (int n = 0; n <= 64; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == brute::binomial(n, k));
    CHECK_THROWS_AS(binomial(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(binomial(65, 1), std::invalid_argument);
}

TEST_CASE("stinson-wei bound") {
    CHECK(*bound_stinson_wei(3).value == 4);
    CHECK(*bound_stinson_wei(8).value == 71);
    CHECK(*bound_stinson_wei(1).value == 2);
    CHECK(bound_stinson_wei(5).applicable);
    CHECK(bound_stinson_wei(5).method == "stinson-wei");
    CHECK_THROWS_AS(bound_stinson_wei(0), std::invalid_argument);
}

TEST_CASE("panoui bound and its small odd caveat") {
    CHECK(*bound_panoui(8).value == 57);
    CHECK(*bound_panoui(7).value == 32);
    CHECK(bound_panoui(7).applicable);

    auto r3 = bound_panoui(3);
    CHECK_FALSE(r3.applicable);
    CHECK_FALSE(r3.value.has_value());
    CHECK(*r3.formula_value == 2);

    auto r1 = bound_panoui(1);
    CHECK_FALSE(r1.applicable);
    CHECK(*r1.formula_value == 1);

    CHECK(bound_panoui(5).applicable);
    CHECK(*bound_panoui(5).value == 8);
    CHECK(bound_panoui(2).applicable);
    CHECK(*bound_panoui(2).value == 2);
}

TEST_CASE("milner bound") {
    CHECK(bound_milner(7, 2) == 21);
    CHECK(bound_milner(7, 3) == 21);
    for (int n = 1; n <= 20; ++n) CHECK(bound_milner(n, 0) == binomial(n, (n + 1) / 2));
    CHECK(bound_milner(3, 4) == 0);  // index above n: no such family is nonempty
    CHECK_THROWS_AS(bound_milner(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(bound_milner(5, -1), std::invalid_argument);
}

TEST_CASE("singleton bound") {
    CHECK(bound_singleton(7) == 21);
    CHECK(bound_singleton(8) == 36);
    CHECK(bound_singleton(2) == 2);
    CHECK_THROWS_AS(bound_singleton(1), std::invalid_argument);
}

TEST_CASE("straddling-extremes Sperner bound") {
    CHECK(bound_sperner_lu(8, 2, 6) == 52);
    CHECK(bound_sperner_lu(8, 3, 4) == 66);
    CHECK(bound_sperner_lu(7, 3, 4) == 35);
    for (int n = 1; n <= 12; ++n)
        CHECK(bound_sperner_lu(n, n / 2, (n + 1) / 2) ==
              static_cast<std::int64_t>(binomial(n, n / 2)));
    CHECK_THROWS_WITH_AS(bound_sperner_lu(8, 5, 6),
                         "bound_sperner_lu: theorem inapplicable (require 0 <= l <= n/2 <= u <= n)",
                         std::invalid_argument);
    CHECK_THROWS_AS(bound_sperner_lu(8, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(bound_sperner_lu(8, -1, 6), std::invalid_argument);
    CHECK_THROWS_AS(bound_sperner_lu(8, 2, 9), std::invalid_argument);
}

TEST_CASE("non-2-covering branch bounds") {
    CHECK(*bound_non2cov_sperner(8, 3, 5) == 52);
    CHECK(*bound_non2cov_sperner(8, 2, 4) == 51);
    CHECK(*bound_non2cov_sperner(8, 4, 4) == 35);
    CHECK(*bound_non2cov_sperner(8, 1, 6) == 51);  // both side branches; min wins
    CHECK_FALSE(bound_non2cov_sperner(8, 3, 4).has_value());
    CHECK(*bound_non2cov_sperner(7, 4, 5) == binomial(7, 5));
    CHECK_FALSE(bound_non2cov_sperner(7, 3, 4).has_value());
    CHECK_THROWS_AS(bound_non2cov_sperner(4, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(bound_non2cov_sperner(5, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(bound_non2cov_sperner(8, 3, 2), std::invalid_argument);
}

TEST_CASE("improved bounds") {
    CHECK(*bound_improved(8).value == 53);
    CHECK(*bound_improved(7).value == 28);
    CHECK(*bound_improved(9).value == 117);
    CHECK(*bound_improved(11).value == 444);
    CHECK(bound_improved(7).method == "improved-odd");
    CHECK(bound_improved(8).method == "improved-even");
    CHECK_FALSE(bound_improved(6).applicable);
    CHECK_FALSE(bound_improved(5).applicable);
    CHECK_FALSE(bound_improved(1).applicable);
}

TEST_CASE("strict improvement on the full range") {
    for (int n = 7; n <= 64; ++n) {
        if (n % 2 == 0 && n < 8) continue;
        CHECK(*bound_improved(n).value < *bound_panoui(n).value);
        CHECK(*bound_panoui(n).value < *bound_stinson_wei(n).value);
    }
}

TEST_CASE("best upper bound picks the least applicable value") {
    auto b8 = best_upper_bound(8);
    CHECK(*b8.value == 53);
    CHECK(b8.method == "improved-even");
    auto b11 = best_upper_bound(11);
    CHECK(*b11.value == 444);
    auto b3 = best_upper_bound(3);
    CHECK(*b3.value == 4);
    CHECK(b3.method == "stinson-wei");
    auto b2 = best_upper_bound(2);
    CHECK(*b2.value == 2);
    CHECK(b2.method == "panoui");
    for (int n = 1; n <= 64; ++n) {
        auto b = best_upper_bound(n);
        CHECK(b.applicable);
        CHECK(*b.value >= 2);
    }
}

TEST_SUITE_END();
