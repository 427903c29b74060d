#pragma once

#include <vector>

#include "wfp/subset.hpp"

namespace wfp {

/// An ordered multiset of subsets over a common ground set. Duplicates are
/// permitted and significant: a repeated set makes the family non-Sperner.
class Family {
public:
    explicit Family(int ground_size) : n_(check(ground_size)) {}
    Family(int ground_size, std::vector<Subset> sets);

    int ground_size() const { return n_; }
    std::size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    const Subset& operator[](std::size_t i) const { return sets_[i]; }
    const std::vector<Subset>& sets() const { return sets_; }
    auto begin() const { return sets_.begin(); }
    auto end() const { return sets_.end(); }

    void add(const Subset& s);

    /// Ascending bit-encoding order (the canonical order for outputs).
    void sort_canonical();

    bool operator==(const Family& o) const { return n_ == o.n_ && sets_ == o.sets_; }

private:
    static int check(int n) {
        if (n < 1 || n > Subset::max_ground_size)
            throw std::invalid_argument("Family: ground size must be in 1..64");
        return n;
    }

    int n_;
    std::vector<Subset> sets_;
};

struct SizeExtremes {
    int min_size;
    int max_size;
};

/// Minimum and maximum member size. Throws on an empty family.
SizeExtremes size_extremes(const Family& f);

/// No member contained in another member at a different index; duplicates fail.
bool is_sperner(const Family& f);

/// No ordered pair of members (self-pairs included) unions to [n].
bool is_non_2_covering(const Family& f);

/// Every pair of members, self-pairs included, intersects in >= k elements.
bool is_k_intersecting(const Family& f, int k);

/// |A ∩ B| >= k for every A in a, B in b; vacuously true if either is empty.
bool are_cross_k_intersecting(const Family& a, const Family& b, int k);

/// All r-subsets of [n] containing at least one member. Requires r >= max
/// member size; an empty family yields an empty shade for any r in [0, n].
Family shade(const Family& f, int r);

/// All s-subsets of [n] contained in at least one member. Requires s <= min
/// member size; an empty family yields an empty shadow for any s in [0, n].
Family shadow(const Family& f, int s);

/// Member-wise complement within [n], preserving list order.
Family complement_family(const Family& f);

}  // namespace wfp
