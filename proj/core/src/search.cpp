#include "wfp/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "wave.hpp"

namespace wfp::search {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t agree_mask(const Word& a, const Word& b) {
    std::uint64_t m = 0;
    for (std::size_t p = 0; p < a.size(); ++p) {
        if (a[p] == b[p]) m |= std::uint64_t{1} << p;
    }
    return m;
}

struct Params {
    int n, q, t;
    std::uint64_t full_mask;
};

using RootResult = detail::WaveRootResult<std::vector<Word>>;

struct RunState {
    const Params& sp;
    std::uint64_t cap;
    std::uint64_t nodes = 0;
    std::vector<Word> words;
    std::vector<std::vector<std::uint64_t>> agree;  // agree[i][j], diagonal unused
    std::vector<int> used;          // distinct symbols per position, always {0..used-1}
    std::vector<std::uint64_t> bumped;  // per word: positions where it grew `used`
    std::vector<Word> best;

    RunState(const Params& s, std::uint64_t c)
        : sp(s), cap(c), used(s.n, 0) {}

    // Lexicographic successor among canonical words: position p may hold any
    // symbol already used there plus the smallest fresh one.
    bool next_candidate(Word& w) const {
        for (int p = sp.n - 1; p >= 0; --p) {
            const int radix = std::min(used[p] + 1, sp.q);
            if (w[p] + 1 < radix) {
                ++w[p];
                std::fill(w.begin() + p + 1, w.end(), 0);
                return true;
            }
            w[p] = 0;
        }
        return false;
    }

    // t = 2: adding the word keeps every coincidence family Sperner and
    // non-2-covering iff the new sets pass pairwise against each other and
    // against the old sets of the family they join.
    bool feasible2(const std::vector<std::uint64_t>& aw) const {
        const int m = static_cast<int>(words.size());
        const std::uint64_t full = sp.full_mask;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                const std::uint64_t a = aw[i], b = aw[j];
                if ((a & b) == a || (a & b) == b) return false;
                if ((a | b) == full) return false;
            }
        }
        for (int i = 0; i < m; ++i) {
            const std::uint64_t a = aw[i];
            for (int j = 0; j < m; ++j) {
                if (j == i) continue;
                const std::uint64_t x = agree[i][j];
                if ((x & a) == x || (x & a) == a) return false;
                if ((x | a) == full) return false;
            }
        }
        return true;
    }

    bool feasible(const Word& w, const std::vector<std::uint64_t>& aw) const {
        if (sp.t == 2) return feasible2(aw);
        auto extended = words;
        extended.push_back(w);
        return !is_twfp_direct(Code(sp.n, sp.q, std::move(extended)), sp.t).has_value();
    }

    void push(const Word& w, std::vector<std::uint64_t> aw) {
        const int m = static_cast<int>(words.size());
        for (int i = 0; i < m; ++i) agree[i].push_back(aw[i]);
        aw.push_back(sp.full_mask);
        agree.push_back(std::move(aw));
        std::uint64_t bump = 0;
        for (int p = 0; p < sp.n; ++p) {
            if (w[p] == used[p]) {
                ++used[p];
                bump |= std::uint64_t{1} << p;
            }
        }
        bumped.push_back(bump);
        words.push_back(w);
    }

    void pop() {
        const std::uint64_t bump = bumped.back();
        bumped.pop_back();
        for (int p = 0; p < sp.n; ++p) {
            if ((bump >> p) & 1) --used[p];
        }
        words.pop_back();
        agree.pop_back();
        for (auto& r : agree) r.pop_back();
    }

    void record_if_improved() {
        if (words.size() > best.size()) best = words;
    }

    bool dfs() {  // false: node cap hit
        Word w = words.back();
        while (next_candidate(w)) {
            if (nodes >= cap) return false;
            ++nodes;
            std::vector<std::uint64_t> aw(words.size());
            for (std::size_t i = 0; i < words.size(); ++i) aw[i] = agree_mask(w, words[i]);
            if (!feasible(w, aw)) continue;
            push(w, std::move(aw));
            record_if_improved();
            const bool ok = dfs();
            pop();
            if (!ok) return false;
        }
        return true;
    }
};

// Root r in 1..2^n-1 is the second word: with only the all-zeros word
// placed, every position admits symbols {0, 1}, so roots are binary.
Word root_word(std::uint64_t r, int n) {
    Word w(n);
    for (int p = 0; p < n; ++p) w[p] = static_cast<std::uint8_t>((r >> (n - 1 - p)) & 1);
    return w;
}

RootResult run_root(const Params& sp, std::uint64_t root, std::uint64_t cap) {
    RootResult res;
    if (cap == 0) return res;
    RunState st(sp, cap);
    st.push(Word(sp.n, 0), {});
    ++st.nodes;
    const Word w = root_word(root, sp.n);
    std::vector<std::uint64_t> aw{agree_mask(w, st.words[0])};
    res.completed = true;
    if (st.feasible(w, aw)) {
        st.push(w, std::move(aw));
        st.record_if_improved();
        res.completed = st.dfs();
    }
    res.nodes = st.nodes;
    res.best = std::move(st.best);
    return res;
}

}  // namespace

SearchResult search_max_code(int n, int q, int t, const SearchOptions& opts) {
    if (n < 1 || n > 20) throw std::invalid_argument("search_max_code: n must be in 1..20");
    if (q < 2 || q > 8) throw std::invalid_argument("search_max_code: q must be in 2..8");
    if (t < 1) throw std::invalid_argument("search_max_code: t must be at least 1");
    const auto t0 = Clock::now();
    const Params sp{n, q, t, (std::uint64_t{1} << n) - 1};
    std::vector<Word> best{Word(n, 0)};
    bool exact = true;
    const std::uint64_t consumed = detail::wave_run(
        1, std::uint64_t{1} << n, opts.node_budget, std::clamp(opts.threads, 1, 256),
        [&sp](std::uint64_t root, std::uint64_t cap) { return run_root(sp, root, cap); }, best,
        exact);
    const int size = static_cast<int>(best.size());
    return SearchResult{Code(n, q, std::move(best)),
                        size,
                        exact ? SearchStatus::Optimal : SearchStatus::BudgetExhausted,
                        consumed,
                        opts.seed,
                        std::chrono::duration<double>(Clock::now() - t0).count()};
}

}  // namespace wfp::search
