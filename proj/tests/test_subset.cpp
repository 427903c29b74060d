#include "doctest.h"
#include "wfp/subset.hpp"

using wfp::Subset;

TEST_SUITE_BEGIN("subset");

TEST_CASE("construction and factories") {
    Subset e = Subset::empty(5);
    CHECK(e.ground_size() == 5);
    CHECK(e.size() == 0);
    CHECK(e.is_empty());

    Subset f = Subset::full(5);
    CHECK(f.size() == 5);
    CHECK(f.is_full());

    Subset s = Subset::of({1, 3}, 4);
    CHECK(s.bits() == 0b0101);
    CHECK(Subset::from_bits(0b0101, 4) == s);

    CHECK_THROWS_AS(Subset(0), std::invalid_argument);
    CHECK_THROWS_AS(Subset(65), std::invalid_argument);
    CHECK_THROWS_AS(Subset::from_bits(0b1000, 3), std::invalid_argument);
    CHECK_NOTHROW(Subset::from_bits(~std::uint64_t{0}, 64));
}

TEST_CASE("membership is 1-indexed") {
    Subset s = Subset::of({2}, 3);
    CHECK_FALSE(s.contains(1));
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(3));
    CHECK_THROWS_AS(s.contains(0), std::out_of_range);
    CHECK_THROWS_AS(s.contains(4), std::out_of_range);

    CHECK(s.with(1).bits() == 0b011);
    CHECK(s.without(2).is_empty());
    CHECK(s.with(2) == s);
}

TEST_CASE("order relations") {
    Subset a = Subset::of({1}, 3);
    Subset ab = Subset::of({1, 2}, 3);
    Subset c = Subset::of({3}, 3);

    CHECK(a.subset_of(ab));
    CHECK_FALSE(ab.subset_of(a));
    CHECK(a.subset_of(a));
    CHECK(a.comparable_with(ab));
    CHECK_FALSE(a.comparable_with(c));

    CHECK(ab.covers_with(c));
    CHECK_FALSE(a.covers_with(c));
    CHECK_THROWS_AS(a.subset_of(Subset::empty(4)), std::invalid_argument);
}

TEST_CASE("boolean algebra") {
    Subset a = Subset::of({1, 2}, 4);
    Subset b = Subset::of({2, 3}, 4);
    CHECK((a | b) == Subset::of({1, 2, 3}, 4));
    CHECK((a & b) == Subset::of({2}, 4));
    CHECK((a - b) == Subset::of({1}, 4));
    CHECK(a.complement() == Subset::of({3, 4}, 4));
    CHECK(a.complement().complement() == a);
    CHECK(Subset::empty(4).complement() == Subset::full(4));
}

TEST_CASE("canonical order and rendering") {
    Subset a = Subset::of({1}, 3);
    Subset b = Subset::of({2}, 3);
    CHECK(a < b);
    CHECK_FALSE(b < a);
    CHECK(Subset::empty(3).to_string() == "∅");
    CHECK(Subset::of({1, 3}, 3).to_string() == "{1,3}");
    CHECK(Subset::full(3).to_string() == "{1,2,3}");
}

TEST_SUITE_END();
