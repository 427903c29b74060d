#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace wfp::bounds {

/// C(n, k) for 0 <= k <= n <= 64, exact (Pascal table; every entry fits in
/// 63 bits at n = 64). Out-of-range arguments throw.
std::uint64_t binomial(int n, int k);

/// An upper bound on the size m of a length-n 2-wFP code, tagged with the
/// method that produced it.
/// `value` is only set when the bound is known to hold (`applicable`);
/// `formula_value` always carries the raw formula result where one is
/// defined, so flagged-off ranges remain inspectable.
struct BoundReport {
    int n;
    std::string method;
    std::string citation;
    std::string conditions;
    bool applicable;
    std::optional<std::uint64_t> value;
    std::optional<std::uint64_t> formula_value;
};

/// C(n, floor(n/2)) + 1. Stated in the literature for q = 2 but alphabet-free:
/// every coincidence family is a Sperner family with m - 1 members.
BoundReport bound_stinson_wei(int n);

/// Even n: C(n, n/2 - 1) + 1. Odd n: C(n, (n-1)/2) - (n-1)/2, flagged not
/// applicable for odd n <= 4 (the odd formula is refuted at n = 3 by a
/// verified 4-word code; its true validity floor is not established).
BoundReport bound_panoui(int n);

/// Milner: max size of a k-intersecting Sperner family, C(n, floor((n+k+1)/2)).
std::uint64_t bound_milner(int n, int k);

/// Max size of a Sperner family containing a singleton: C(n-1, floor((n-1)/2)) + 1.
std::uint64_t bound_singleton(int n);

/// Four-case Sperner bound for families with size extremes l <= n/2 <= u.
/// May be negative for extreme (l, u) that no real family attains; callers
/// compare against realized families only. Throws "theorem inapplicable"
/// when the hypothesis 0 <= l <= n/2 <= u <= n fails.
std::int64_t bound_sperner_lu(int n, int l, int u);

/// Branch bounds for non-2-covering Sperner families with extremes (l, u).
/// Even n >= 6: u >= n/2+1 -> C(n,n/2-1) - n/2; l <= n/2-2 -> C(n,n/2-1) -
/// n/2 - 1; l = u = n/2 -> C(n,n/2)/2 (minimum of the applicable branches).
/// Odd n >= 7: l >= (n+1)/2 -> C(n,(n+3)/2). Returns nullopt when no branch
/// applies; throws outside the stated n ranges.
std::optional<std::uint64_t> bound_non2cov_sperner(int n, int l, int u);

/// The refined bounds: even n >= 8 and odd n >= 7 (two residues mod 4).
/// Not applicable outside those ranges (no formula is reported there).
BoundReport bound_improved(int n);

/// Minimum over the applicable reports, preferring the sharper method on ties
/// (improved, then Panoui, then Stinson-Wei).
BoundReport best_upper_bound(int n);

}  // namespace wfp::bounds
