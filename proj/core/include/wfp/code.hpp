#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wfp/family.hpp"
#include "wfp/subset.hpp"

namespace wfp {

using Word = std::vector<std::uint8_t>;

/// An (n, m, q) code: m distinct words of length n over {0, ..., q-1}.
/// Word indices are 1-based in the public API and in every report, matching
/// the 1-based position convention of Subset. Immutable after construction.
class Code {
  public:
    Code(int n, int q, std::vector<Word> words);

    int length() const { return n_; }
    int alphabet_size() const { return q_; }
    int size() const { return static_cast<int>(words_.size()); }

    /// i in 1..m.
    const Word& word(int i) const;
    const std::vector<Word>& words() const { return words_; }

    bool operator==(const Code& o) const {
        return n_ == o.n_ && q_ == o.q_ && words_ == o.words_;
    }

  private:
    int n_;
    int q_;
    std::vector<Word> words_;
};

/// Everything analyze() knows about one coincidence family X_i.
/// The two optional flags are defined for odd n only; they refer to the
/// layer split used when l_i <= (n-1)/2 <= (n+1)/2 <= u_i: members of size
/// exactly (n-1)/2 form the middle layer, members of size at most (n-3)/2
/// the small part, members of size at least (n+1)/2 the large part.
struct CoincidenceProfile {
    int index;      // i, 1-based
    Family family;  // I(i,j) for j != i, ascending j; exactly m-1 entries
    int min_size;   // l_i
    int max_size;   // u_i
    int spread;     // d_i = u_i - l_i
    bool sperner;
    bool non_2_covering;
    bool all_small;  // 2*u_i <= n-1
    bool all_large;  // 2*l_i >= n+1
    std::optional<bool> middle_layer_intersecting;
    std::optional<bool> small_large_cross_intersecting;
};

struct DirectViolation {
    std::vector<int> coalition;  // X, ascending word indices
    int framed;                  // k not in X with c^k in wdesc(X)
};

enum class ViolationKind { NotSperner, Covering };

struct StructuralViolation {
    int index;  // least i whose X_i fails
    ViolationKind kind;
};

struct AnalysisReport {
    std::vector<CoincidenceProfile> profiles;  // one per codeword, in order
    std::vector<std::string> case_labels;      // parallel to profiles
    int min_spread;                            // d = min over i of d_i
};

/// I(i,j): positions where words i and j agree. Requires i != j.
Subset coincidence_set(const Code& c, int i, int j);

/// Profile of X_i = (I(i,j))_{j != i}, kept in j order as a multiset.
/// Requires m >= 2.
CoincidenceProfile coincidence_profile(const Code& c, int i);

/// U(X): positions where all coalition words agree; [n] for a single word.
/// Coalition indices must be distinct and nonempty.
Subset undetectable_positions(const Code& c, const std::vector<int>& coalition);

/// y is a wide-sense descendant of X: y matches the coalition's common
/// symbol on every position of U(X). Free elsewhere.
bool in_wdesc(const Word& y, const Code& c, const std::vector<int>& coalition);

/// y is a narrow-sense descendant of X: every coordinate of y appears among
/// the coalition's symbols at that coordinate. in_desc implies in_wdesc.
bool in_desc(const Word& y, const Code& c, const std::vector<int>& coalition);

/// Definitional t-wFP check: no coalition of size <= t frames an outside
/// word. Returns the lexicographically least violating coalition (ascending
/// index sequences, prefixes first), then the least framed index. Requires
/// t >= 1. Cost grows as C(m,t)*m, so keep t small.
std::optional<DirectViolation> is_twfp_direct(const Code& c, int t);

/// Characterization check for t = 2: every X_i must be a Sperner family
/// (multiset: duplicates fail) whose pairwise unions never cover [n].
/// Reports the least failing i; the Sperner defect wins when both fail.
/// Agrees with is_twfp_direct(c, 2) on every code.
std::optional<StructuralViolation> is_2wfp_structural(const Code& c);

/// The containment sandwich linking I(j,k) to I(i,j) and I(i,k). Holds for
/// every code and every distinct triple; exists as a test probe.
bool bh_sandwich_holds(const Code& c, int i, int j, int k);

/// All m coincidence profiles plus the proof-case label of each. Labels for
/// odd n: all-small, all-large, middle-not-intersecting,
/// cross-not-intersecting, balanced-straddle (first match in that order).
/// For even n: upper-reach, lower-reach, middle-layer, below-middle-layer,
/// straddling-pair. Requires m >= 2.
AnalysisReport analyze(const Code& c);

}  // namespace wfp
