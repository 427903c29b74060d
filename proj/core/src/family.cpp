#include "wfp/family.hpp"

#include <algorithm>

namespace wfp {
namespace {

// Visits every mask obtainable by adding `extra` bits drawn from `pool`.
template <typename Fn>
void expand(std::uint64_t base, std::uint64_t pool, int extra, Fn&& visit) {
    if (extra == 0) {
        visit(base);
        return;
    }
    if (std::popcount(pool) < extra) return;
    std::uint64_t lowest = pool & (~pool + 1);
    expand(base | lowest, pool & ~lowest, extra - 1, visit);
    expand(base, pool & ~lowest, extra, visit);
}

Family dedup_sorted(int n, std::vector<std::uint64_t>& masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Subset> sets;
    sets.reserve(masks.size());
    for (std::uint64_t m : masks) sets.push_back(Subset::from_bits(m, n));
    return Family(n, std::move(sets));
}

}  // namespace

Family::Family(int ground_size, std::vector<Subset> sets)
    : n_(check(ground_size)), sets_(std::move(sets)) {
    for (const Subset& s : sets_)
        if (s.ground_size() != n_)
            throw std::invalid_argument("Family: member with mismatched ground set");
}

void Family::add(const Subset& s) {
    if (s.ground_size() != n_)
        throw std::invalid_argument("Family: member with mismatched ground set");
    sets_.push_back(s);
}

void Family::sort_canonical() {
    std::sort(sets_.begin(), sets_.end(),
              [](const Subset& a, const Subset& b) { return a.bits() < b.bits(); });
}

SizeExtremes size_extremes(const Family& f) {
    if (f.empty()) throw std::invalid_argument("undefined extremes");
    int lo = f.ground_size(), hi = 0;
    for (const Subset& s : f) {
        lo = std::min(lo, s.size());
        hi = std::max(hi, s.size());
    }
    return {lo, hi};
}

bool is_sperner(const Family& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j)
            if (i != j && f[i].subset_of(f[j])) return false;
    return true;
}

bool is_non_2_covering(const Family& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_full()) return false;  // self-pair A ∪ A = [n]
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (f[i].covers_with(f[j])) return false;
    }
    return true;
}

bool is_k_intersecting(const Family& f, int k) {
    if (k < 1) throw std::invalid_argument("is_k_intersecting: k must be >= 1");
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].size() < k) return false;  // self-pair |A ∩ A| = |A|
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if ((f[i] & f[j]).size() < k) return false;
    }
    return true;
}

bool are_cross_k_intersecting(const Family& a, const Family& b, int k) {
    if (k < 1) throw std::invalid_argument("are_cross_k_intersecting: k must be >= 1");
    if (a.ground_size() != b.ground_size())
        throw std::invalid_argument("are_cross_k_intersecting: mismatched ground sets");
    for (const Subset& x : a)
        for (const Subset& y : b)
            if ((x & y).size() < k) return false;
    return true;
}

Family shade(const Family& f, int r) {
    int n = f.ground_size();
    if (r < 0 || r > n) throw std::invalid_argument("shade: r out of range");
    if (!f.empty() && r < size_extremes(f).max_size)
        throw std::invalid_argument("shade: r below maximum member size");
    std::vector<std::uint64_t> out;
    std::uint64_t ground = Subset::mask_for(n);
    for (const Subset& s : f)
        expand(s.bits(), ground & ~s.bits(), r - s.size(),
               [&](std::uint64_t m) { out.push_back(m); });
    return dedup_sorted(n, out);
}

Family shadow(const Family& f, int s) {
    int n = f.ground_size();
    if (s < 0 || s > n) throw std::invalid_argument("shadow: s out of range");
    if (!f.empty() && s > size_extremes(f).min_size)
        throw std::invalid_argument("shadow: s above minimum member size");
    std::vector<std::uint64_t> out;
    for (const Subset& m : f)
        expand(0, m.bits(), s, [&](std::uint64_t x) { out.push_back(x); });
    return dedup_sorted(n, out);
}

Family complement_family(const Family& f) {
    std::vector<Subset> sets;
    sets.reserve(f.size());
    for (const Subset& s : f) sets.push_back(s.complement());
    return Family(f.ground_size(), std::move(sets));
}

}  // namespace wfp
