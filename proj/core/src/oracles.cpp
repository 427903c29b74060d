#include "wfp/oracles.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <stdexcept>

#include "wave.hpp"
#include "wfp/rng.hpp"
#include "wfp/subset.hpp"

namespace wfp::oracles {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t agree_mask(const Word& a, const Word& b) {
    std::uint64_t m = 0;
    for (std::size_t p = 0; p < a.size(); ++p) {
        if (a[p] == b[p]) m |= std::uint64_t{1} << p;
    }
    return m;
}

// ---------- clique search over the compatibility graph ----------

// Vertices are subsets of [n] other than [n] itself; an edge joins two sets
// that are incomparable and whose union misses at least one point. Cliques
// are exactly the Sperner, non-2-covering families.
struct CliqueSearch {
    int nv = 0;
    int row_words = 0;
    std::vector<std::uint32_t> label;     // vertex id -> subset mask
    std::vector<std::uint64_t> adj;       // nv rows of row_words words
    std::uint64_t nodes = 0;
    std::vector<int> current, best;

    const std::uint64_t* row(int v) const { return adj.data() + std::size_t(v) * row_words; }
    bool edge(int a, int b) const { return (row(a)[b >> 6] >> (b & 63)) & 1; }

    void expand(const std::vector<int>& p) {
        const int np = static_cast<int>(p.size());
        // greedy coloring; class conflicts tested against per-class bitsets
        std::vector<int> color(np);
        std::vector<std::vector<std::uint64_t>> cls;
        for (int i = 0; i < np; ++i) {
            const int v = p[i];
            std::size_t c = 0;
            for (; c < cls.size(); ++c) {
                bool clash = false;
                const std::uint64_t* r = row(v);
                for (int w = 0; w < row_words; ++w) {
                    if (cls[c][w] & r[w]) {
                        clash = true;
                        break;
                    }
                }
                if (!clash) break;
            }
            if (c == cls.size()) cls.emplace_back(row_words, 0);
            cls[c][v >> 6] |= std::uint64_t{1} << (v & 63);
            color[i] = static_cast<int>(c) + 1;
        }
        std::vector<int> order(np);
        for (int i = 0; i < np; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return color[a] < color[b]; });
        for (int oi = np - 1; oi >= 0; --oi) {
            const int i = order[oi];
            if (static_cast<int>(current.size()) + color[i] <= static_cast<int>(best.size())) {
                return;  // colors ascending: nothing left can beat best
            }
            const int v = p[i];
            ++nodes;
            current.push_back(v);
            if (current.size() > best.size()) best = current;
            std::vector<int> next;
            for (int oj = 0; oj < oi; ++oj) {
                const int u = p[order[oj]];
                if (edge(v, u)) next.push_back(u);
            }
            if (!next.empty()) expand(next);
            current.pop_back();
        }
    }
};

bool family_compatible(std::uint32_t a, std::uint32_t b, std::uint32_t full) {
    if (a == b) return false;
    if ((a & b) == a || (a & b) == b) return false;  // comparable
    return (a | b) != full;
}

// ---------- exhaustive code search ----------

// Words are keyed 0..q^n-1 with position 1 most significant, so ascending
// keys is ascending lexicographic word order. Mirroring relabels every
// symbol s -> q-1-s, which changes nothing about agreement patterns.
struct CodeSpace {
    int n, q, t;
    std::uint32_t space;
    bool mirror;
    std::uint64_t full_mask;

    Word word_of(std::uint32_t key) const {
        Word w(n);
        std::uint32_t x = key;
        for (int p = n - 1; p >= 0; --p) {
            w[p] = static_cast<std::uint8_t>(x % q);
            x /= q;
        }
        if (mirror) {
            for (auto& s : w) s = static_cast<std::uint8_t>(q - 1 - s);
        }
        return w;
    }
};

// nodes/completed/best: keys of the largest code found under this root
using RootResult = detail::WaveRootResult<std::vector<std::uint32_t>>;

struct RootRun {
    const CodeSpace& sp;
    std::uint64_t cap;
    std::uint64_t nodes = 0;
    std::vector<std::uint32_t> keys;
    std::vector<Word> words;
    std::vector<std::vector<std::uint64_t>> agree;  // symmetric, agree[i][i] unused
    std::vector<std::uint32_t> best;
    std::vector<char> in_s;  // scratch for coalition membership

    explicit RootRun(const CodeSpace& s, std::uint64_t c) : sp(s), cap(c) {}

    // Would adding the word with these agreement masks break t-wFP?
    // Checks only coalitions involving the candidate; the rest held before.
    bool feasible(const std::vector<std::uint64_t>& aw) {
        const int m = static_cast<int>(words.size());
        if (sp.t < 2 || m < 2) return true;
        std::fill(in_s.begin(), in_s.begin() + m, 0);
        if (!coalitions_with_candidate(0, sp.full_mask, 1, aw)) return false;
        for (int s0 = 0; s0 + 1 < m; ++s0) {
            if (!coalitions_framing_candidate(s0, s0 + 1, sp.full_mask, 1, aw)) return false;
        }
        return true;
    }

    // X = {candidate} ∪ S with S nonempty, |S| <= t-1: may X frame a word?
    bool coalitions_with_candidate(int from, std::uint64_t mask, int depth,
                                   const std::vector<std::uint64_t>& aw) {
        const int m = static_cast<int>(words.size());
        for (int s = from; s < m; ++s) {
            const std::uint64_t u = mask & aw[s];
            in_s[s] = 1;
            for (int k = 0; k < m; ++k) {
                if (!in_s[k] && (u & ~aw[k]) == 0) {
                    in_s[s] = 0;
                    return false;
                }
            }
            if (depth < sp.t - 1 && !coalitions_with_candidate(s + 1, u, depth + 1, aw)) {
                in_s[s] = 0;
                return false;
            }
            in_s[s] = 0;
        }
        return true;
    }

    // X ⊆ existing words with min element s0, |X| in 2..t: does X frame the
    // candidate? The candidate is framed iff it matches word s0 on U(X).
    bool coalitions_framing_candidate(int s0, int from, std::uint64_t mask, int depth,
                                      const std::vector<std::uint64_t>& aw) {
        const int m = static_cast<int>(words.size());
        for (int s = from; s < m; ++s) {
            const std::uint64_t u = mask & agree[s0][s];
            if ((u & ~aw[s0]) == 0) return false;
            if (depth + 1 < sp.t && !coalitions_framing_candidate(s0, s + 1, u, depth + 1, aw)) {
                return false;
            }
        }
        return true;
    }

    void push(std::uint32_t key, Word w, std::vector<std::uint64_t> aw) {
        const int m = static_cast<int>(words.size());
        for (int i = 0; i < m; ++i) agree[i].push_back(aw[i]);
        aw.push_back(sp.full_mask);
        agree.push_back(std::move(aw));
        keys.push_back(key);
        words.push_back(std::move(w));
        in_s.push_back(0);
    }

    void pop() {
        keys.pop_back();
        words.pop_back();
        agree.pop_back();
        in_s.pop_back();
        for (auto& r : agree) r.pop_back();
    }

    void record_if_improved() {
        if (keys.size() <= best.size()) return;
        best = keys;
        // definitional re-check of every improvement
        if (is_twfp_direct(Code(sp.n, sp.q, words), sp.t).has_value()) {
            throw std::logic_error("exhaustive_max_code: feasibility and verifier disagree");
        }
    }

    bool dfs(std::uint32_t last) {  // false: node cap hit, unwound
        for (std::uint32_t key = last + 1; key < sp.space; ++key) {
            if (nodes >= cap) return false;
            ++nodes;
            Word w = sp.word_of(key);
            std::vector<std::uint64_t> aw(words.size());
            for (std::size_t i = 0; i < words.size(); ++i) aw[i] = agree_mask(w, words[i]);
            if (!feasible(aw)) continue;
            push(key, std::move(w), std::move(aw));
            record_if_improved();
            const bool ok = dfs(key);
            pop();
            if (!ok) return false;
        }
        return true;
    }
};

RootResult run_root(const CodeSpace& sp, std::uint32_t root, std::uint64_t cap) {
    RootResult res;
    if (cap == 0) return res;  // nothing evaluated, not completed
    RootRun run(sp, cap);
    run.push(0, sp.word_of(0), {});
    ++run.nodes;
    Word w = sp.word_of(root);
    std::vector<std::uint64_t> aw{agree_mask(w, run.words[0])};
    bool completed = true;
    if (run.feasible(aw)) {
        run.push(root, std::move(w), std::move(aw));
        run.record_if_improved();
        completed = run.dfs(root);
    }
    res.nodes = run.nodes;
    res.completed = completed;
    res.best = std::move(run.best);
    return res;
}

}  // namespace

FamilyCertificate max_non2cov_sperner(int n) {
    if (n < 1 || n > 12) {
        throw std::invalid_argument("max_non2cov_sperner: oracle out of range (need 1 <= n <= 12)");
    }
    const auto t0 = Clock::now();
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    const int nv = (1 << n) - 1;  // every subset except [n]

    // degeneracy-style ordering: repeatedly remove a minimum-degree vertex
    std::vector<int> degree(nv, 0);
    for (int a = 0; a < nv; ++a) {
        for (int b = a + 1; b < nv; ++b) {
            if (family_compatible(a, b, full)) {
                ++degree[a];
                ++degree[b];
            }
        }
    }
    std::vector<char> removed(nv, 0);
    std::vector<int> removal;
    removal.reserve(nv);
    for (int step = 0; step < nv; ++step) {
        int pick = -1;
        for (int v = 0; v < nv; ++v) {
            if (!removed[v] && (pick < 0 || degree[v] < degree[pick])) pick = v;
        }
        removed[pick] = 1;
        removal.push_back(pick);
        for (int u = 0; u < nv; ++u) {
            if (!removed[u] && family_compatible(pick, u, full)) --degree[u];
        }
    }

    CliqueSearch cs;
    cs.nv = nv;
    cs.row_words = (nv + 63) / 64;
    cs.label.assign(removal.rbegin(), removal.rend());  // densest part first
    cs.adj.assign(std::size_t(nv) * cs.row_words, 0);
    for (int a = 0; a < nv; ++a) {
        for (int b = 0; b < nv; ++b) {
            if (family_compatible(cs.label[a], cs.label[b], full)) {
                cs.adj[std::size_t(a) * cs.row_words + (b >> 6)] |= std::uint64_t{1} << (b & 63);
            }
        }
    }
    std::vector<int> p(nv);
    for (int i = 0; i < nv; ++i) p[i] = i;
    cs.expand(p);

    Family witness(n);
    for (int v : cs.best) witness.add(Subset::from_bits(cs.label[v], n));
    witness.sort_canonical();
    return FamilyCertificate{n,
                             OracleStatus::Exact,
                             static_cast<int>(cs.best.size()),
                             witness,
                             static_cast<std::uint64_t>(nv),
                             cs.nodes,
                             seconds_since(t0)};
}

CodeCertificate exhaustive_max_code(int n, int q, int t, const ExhaustiveOptions& opts) {
    if (n < 1 || n > 64) throw std::invalid_argument("exhaustive_max_code: n must be in 1..64");
    if (q < 2 || q > 256) throw std::invalid_argument("exhaustive_max_code: q must be in 2..256");
    if (t < 1) throw std::invalid_argument("exhaustive_max_code: t must be at least 1");
    unsigned __int128 sz = 1;
    for (int i = 0; i < n; ++i) {
        sz *= static_cast<unsigned>(q);
        if (sz > (1u << 20)) throw std::invalid_argument("exhaustive_max_code: q^n must not exceed 2^20");
    }
    const auto t0 = Clock::now();
    const std::uint32_t space = static_cast<std::uint32_t>(sz);
    CodeSpace sp{n, q, t, space, opts.reverse_symbol_order,
                 n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};

    if (t == 1) {
        // singleton coalitions frame nobody, so every set of words qualifies
        std::vector<Word> all;
        all.reserve(space);
        for (std::uint32_t k = 0; k < space; ++k) all.push_back(sp.word_of(k));
        return CodeCertificate{n,     q, t, OracleStatus::Exact, static_cast<int>(space),
                               Code(n, q, std::move(all)), space, 0, seconds_since(t0)};
    }

    const int threads = std::clamp(opts.threads, 1, 256);
    std::vector<std::uint32_t> best{0};
    bool exact = true;
    const std::uint64_t consumed = detail::wave_run(
        1, space, opts.node_budget, threads,
        [&sp](std::uint64_t root, std::uint64_t cap) {
            return run_root(sp, static_cast<std::uint32_t>(root), cap);
        },
        best, exact);

    std::vector<Word> ws;
    ws.reserve(best.size());
    for (std::uint32_t k : best) ws.push_back(sp.word_of(k));
    return CodeCertificate{n,
                           q,
                           t,
                           exact ? OracleStatus::Exact : OracleStatus::Inconclusive,
                           static_cast<int>(best.size()),
                           Code(n, q, std::move(ws)),
                           space,
                           consumed,
                           seconds_since(t0)};
}

Code random_code(int n, int q, int m, std::uint64_t seed) {
    if (n < 1 || n > 64) throw std::invalid_argument("random_code: n must be in 1..64");
    if (q < 2 || q > 256) throw std::invalid_argument("random_code: q must be in 2..256");
    if (m < 1) throw std::invalid_argument("random_code: m must be positive");
    unsigned __int128 sz = 1;
    bool huge = false;
    for (int i = 0; i < n && !huge; ++i) {
        sz *= static_cast<unsigned>(q);
        if (sz > (unsigned __int128){1} << 62) huge = true;
    }
    if (!huge && static_cast<unsigned __int128>(m) > sz) {
        throw std::invalid_argument("random_code: m exceeds q^n");
    }
    Rng rng(seed);
    std::vector<Word> words;
    words.reserve(m);
    if (!huge && sz <= (1u << 22)) {
        // dense space: partial Fisher-Yates over all word keys, exact and
        // correct even when m is close to q^n
        const std::uint32_t space = static_cast<std::uint32_t>(sz);
        std::vector<std::uint32_t> keys(space);
        for (std::uint32_t k = 0; k < space; ++k) keys[k] = k;
        for (int i = 0; i < m; ++i) {
            const std::uint64_t j = i + rng.below(space - i);
            std::swap(keys[i], keys[j]);
            Word w(n);
            std::uint32_t x = keys[i];
            for (int p = n - 1; p >= 0; --p) {
                w[p] = static_cast<std::uint8_t>(x % q);
                x /= q;
            }
            words.push_back(std::move(w));
        }
    } else {
        std::set<Word> seen;
        while (static_cast<int>(words.size()) < m) {
            Word w(n);
            for (int p = 0; p < n; ++p) w[p] = static_cast<std::uint8_t>(rng.below(q));
            if (seen.insert(w).second) words.push_back(std::move(w));
        }
    }
    return Code(n, q, std::move(words));
}

Family random_family(int n, const std::vector<int>& member_sizes, FamilyConstraint constraint,
                     std::uint64_t seed) {
    if (n < 1 || n > 16) throw std::invalid_argument("random_family: n must be in 1..16");
    for (int s : member_sizes) {
        if (s < 0 || s > n) throw std::invalid_argument("random_family: member size out of range");
    }
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    const int m = static_cast<int>(member_sizes.size());
    Rng rng(seed);
    std::vector<std::vector<std::uint32_t>> cands(m);
    for (int i = 0; i < m; ++i) {
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if (std::popcount(mask) == member_sizes[i]) cands[i].push_back(mask);
        }
        rng.shuffle(cands[i]);
    }

    const bool need_sperner = constraint == FamilyConstraint::Sperner ||
                              constraint == FamilyConstraint::SpernerAndNon2Covering;
    const bool need_intersecting = constraint == FamilyConstraint::Intersecting;
    const bool need_non2cov = constraint == FamilyConstraint::Non2Covering ||
                              constraint == FamilyConstraint::SpernerAndNon2Covering;
    auto self_ok = [&](std::uint32_t a) {
        if (need_intersecting && a == 0) return false;
        if (need_non2cov && a == full) return false;
        return true;
    };
    auto pair_ok = [&](std::uint32_t a, std::uint32_t b) {
        if (a == b) return false;  // members are distinct in every mode
        if (need_sperner && ((a & b) == a || (a & b) == b)) return false;
        if (need_intersecting && (a & b) == 0) return false;
        if (need_non2cov && (a | b) == full) return false;
        return true;
    };

    std::vector<std::uint32_t> chosen;
    chosen.reserve(m);
    auto backtrack = [&](auto&& self, int slot) -> bool {
        if (slot == m) return true;
        for (std::uint32_t cand : cands[slot]) {
            if (!self_ok(cand)) continue;
            bool ok = true;
            for (std::uint32_t prev : chosen) {
                if (!pair_ok(prev, cand)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(cand);
            if (self(self, slot + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!backtrack(backtrack, 0)) {
        throw std::invalid_argument("random_family: constraint unsatisfiable for the requested sizes");
    }
    Family f(n);
    for (std::uint32_t mask : chosen) f.add(Subset::from_bits(mask, n));
    return f;
}

}  // namespace wfp::oracles
