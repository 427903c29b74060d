#include "wfp/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace wfp {

namespace {

// Positions where a and b agree, bit p-1 for position p.
std::uint64_t agree_mask(const Word& a, const Word& b) {
    std::uint64_t m = 0;
    for (std::size_t p = 0; p < a.size(); ++p) {
        if (a[p] == b[p]) m |= std::uint64_t{1} << p;
    }
    return m;
}

void check_index(const Code& c, int i) {
    if (i < 1 || i > c.size()) throw std::out_of_range("word index out of range");
}

// Validates and returns the coalition sorted ascending.
std::vector<int> checked_coalition(const Code& c, const std::vector<int>& coalition) {
    if (coalition.empty()) throw std::invalid_argument("coalition must be nonempty");
    std::vector<int> x = coalition;
    std::sort(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 1 || x[i] > c.size()) throw std::out_of_range("coalition index out of range");
        if (i > 0 && x[i] == x[i - 1]) throw std::invalid_argument("coalition indices must be distinct");
    }
    return x;
}

void check_word_shape(const Word& y, const Code& c) {
    if (static_cast<int>(y.size()) != c.length()) {
        throw std::invalid_argument("word length does not match the code");
    }
    for (auto s : y) {
        if (static_cast<int>(s) >= c.alphabet_size()) {
            throw std::invalid_argument("symbol outside the code alphabet");
        }
    }
}

std::uint64_t undetectable_mask(const Code& c, const std::vector<int>& sorted) {
    std::uint64_t mask = Subset::full(c.length()).bits();
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        mask &= agree_mask(c.word(sorted[0]), c.word(sorted[i]));
    }
    return mask;
}

// Depth-first enumeration of coalitions in lexicographic order (ascending
// index sequences, prefixes before extensions). Checks every outside word
// at each node, so the first hit is the canonical witness.
struct DirectSearch {
    const Code& c;
    int t;
    std::vector<std::uint64_t> row;  // agreement of each word with the root
    std::vector<int> coalition;
    std::optional<DirectViolation> found;

    bool node(std::uint64_t mask) {
        const int m = c.size();
        if (coalition.size() >= 2) {
            for (int k = 1; k <= m; ++k) {
                if (std::binary_search(coalition.begin(), coalition.end(), k)) continue;
                if ((mask & ~row[k]) == 0) {  // c^k matches the root on all of U(X)
                    found = DirectViolation{coalition, k};
                    return true;
                }
            }
        }
        if (static_cast<int>(coalition.size()) == t) return false;
        for (int j = coalition.back() + 1; j <= m; ++j) {
            coalition.push_back(j);
            if (node(mask & row[j])) return true;
            coalition.pop_back();
        }
        return false;
    }
};

}  // namespace

Code::Code(int n, int q, std::vector<Word> words)
    : n_(n), q_(q), words_(std::move(words)) {
    if (n_ < 1 || n_ > 64) throw std::invalid_argument("Code: n must be in 1..64");
    if (q_ < 2 || q_ > 256) throw std::invalid_argument("Code: q must be in 2..256");
    if (words_.empty()) throw std::invalid_argument("Code: at least one word required");
    for (const auto& w : words_) {
        if (static_cast<int>(w.size()) != n_) {
            throw std::invalid_argument("Code: word length does not match n");
        }
        for (auto s : w) {
            if (static_cast<int>(s) >= q_) throw std::invalid_argument("Code: symbol out of range");
        }
    }
    auto sorted = words_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("Code: words must be pairwise distinct");
    }
}

const Word& Code::word(int i) const {
    check_index(*this, i);
    return words_[i - 1];
}

Subset coincidence_set(const Code& c, int i, int j) {
    check_index(c, i);
    check_index(c, j);
    if (i == j) throw std::invalid_argument("coincidence_set: indices must differ");
    return Subset::from_bits(agree_mask(c.word(i), c.word(j)), c.length());
}

CoincidenceProfile coincidence_profile(const Code& c, int i) {
    if (c.size() < 2) throw std::invalid_argument("coincidence_profile: need at least two words");
    check_index(c, i);
    const int n = c.length();
    Family fam(n);
    for (int j = 1; j <= c.size(); ++j) {
        if (j != i) fam.add(coincidence_set(c, i, j));
    }
    const auto ext = size_extremes(fam);
    std::optional<bool> mid_int;
    std::optional<bool> cross_int;
    if (n % 2 == 1) {
        Family mid(n), small(n), large(n);
        for (const auto& s : fam) {
            const int sz = s.size();
            if (2 * sz == n - 1) mid.add(s);
            if (2 * sz <= n - 3) small.add(s);
            if (2 * sz >= n + 1) large.add(s);
        }
        mid_int = is_k_intersecting(mid, 1);
        cross_int = are_cross_k_intersecting(small, large, 1);
    }
    return CoincidenceProfile{
        i,
        fam,
        ext.min_size,
        ext.max_size,
        ext.max_size - ext.min_size,
        is_sperner(fam),
        is_non_2_covering(fam),
        2 * ext.max_size <= n - 1,
        2 * ext.min_size >= n + 1,
        mid_int,
        cross_int,
    };
}

Subset undetectable_positions(const Code& c, const std::vector<int>& coalition) {
    const auto x = checked_coalition(c, coalition);
    return Subset::from_bits(undetectable_mask(c, x), c.length());
}

bool in_wdesc(const Word& y, const Code& c, const std::vector<int>& coalition) {
    check_word_shape(y, c);
    const auto x = checked_coalition(c, coalition);
    const std::uint64_t mask = undetectable_mask(c, x);
    const Word& base = c.word(x[0]);
    for (int p = 0; p < c.length(); ++p) {
        if ((mask >> p) & 1) {
            if (y[p] != base[p]) return false;
        }
    }
    return true;
}

bool in_desc(const Word& y, const Code& c, const std::vector<int>& coalition) {
    check_word_shape(y, c);
    const auto x = checked_coalition(c, coalition);
    for (int p = 0; p < c.length(); ++p) {
        bool seen = false;
        for (int j : x) {
            if (c.word(j)[p] == y[p]) {
                seen = true;
                break;
            }
        }
        if (!seen) return false;
    }
    return true;
}

std::optional<DirectViolation> is_twfp_direct(const Code& c, int t) {
    if (t < 1) throw std::invalid_argument("is_twfp_direct: t must be at least 1");
    const int m = c.size();
    // Singleton coalitions never frame anyone: words are distinct.
    if (t < 2 || m < 3) return std::nullopt;
    for (int a = 1; a <= m - 1; ++a) {
        DirectSearch s{c, t, std::vector<std::uint64_t>(m + 1), {a}, std::nullopt};
        for (int j = 1; j <= m; ++j) s.row[j] = agree_mask(c.word(a), c.word(j));
        if (s.node(Subset::full(c.length()).bits())) return s.found;
    }
    return std::nullopt;
}

std::optional<StructuralViolation> is_2wfp_structural(const Code& c) {
    if (c.size() < 2) return std::nullopt;
    for (int i = 1; i <= c.size(); ++i) {
        const auto p = coincidence_profile(c, i);
        if (!p.sperner) return StructuralViolation{i, ViolationKind::NotSperner};
        if (!p.non_2_covering) return StructuralViolation{i, ViolationKind::Covering};
    }
    return std::nullopt;
}

bool bh_sandwich_holds(const Code& c, int i, int j, int k) {
    if (i == j || i == k || j == k) {
        throw std::invalid_argument("bh_sandwich_holds: indices must be distinct");
    }
    const Subset ij = coincidence_set(c, i, j);
    const Subset ik = coincidence_set(c, i, k);
    const Subset jk = coincidence_set(c, j, k);
    const Subset lower = ij & ik;
    const Subset upper = lower | (ij | ik).complement();
    return lower.subset_of(jk) && jk.subset_of(upper);
}

namespace {

std::string case_label(const CoincidenceProfile& p, int n) {
    if (n % 2 == 1) {
        if (p.all_small) return "all-small";
        if (p.all_large) return "all-large";
        bool has_mid = false, has_small = false;
        for (const auto& s : p.family) {
            if (2 * s.size() == n - 1) has_mid = true;
            if (2 * s.size() <= n - 3) has_small = true;
        }
        if (has_mid && !*p.middle_layer_intersecting) return "middle-not-intersecting";
        if (has_small && !*p.small_large_cross_intersecting) return "cross-not-intersecting";
        return "balanced-straddle";
    }
    if (2 * p.max_size >= n + 2) return "upper-reach";
    if (2 * p.min_size <= n - 4) return "lower-reach";
    if (p.min_size == n / 2 && p.max_size == n / 2) return "middle-layer";
    if (p.min_size == n / 2 - 1 && p.max_size == n / 2 - 1) return "below-middle-layer";
    return "straddling-pair";
}

}  // namespace

AnalysisReport analyze(const Code& c) {
    if (c.size() < 2) throw std::invalid_argument("analyze: need at least two words");
    AnalysisReport r{{}, {}, 0};
    int d = c.length() + 1;
    for (int i = 1; i <= c.size(); ++i) {
        auto p = coincidence_profile(c, i);
        d = std::min(d, p.spread);
        r.case_labels.push_back(case_label(p, c.length()));
        r.profiles.push_back(std::move(p));
    }
    r.min_spread = d;
    return r;
}

}  // namespace wfp
