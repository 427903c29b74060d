#pragma once

#include <cstdint>
#include <vector>

#include "wfp/code.hpp"
#include "wfp/family.hpp"

namespace wfp::oracles {

enum class OracleStatus { Exact, Inconclusive };

/// Certified result of a brute-force family search. When status is Exact the
/// optimum is the true maximum; the witness always satisfies the predicate
/// it certifies.
struct FamilyCertificate {
    int n;
    OracleStatus status;
    int optimum;
    Family witness;
    std::uint64_t search_space_size;  // candidate sets: 2^n - 1 (the full set is excluded)
    std::uint64_t nodes;
    double elapsed_seconds;
};

struct CodeCertificate {
    int n;
    int q;
    int t;
    OracleStatus status;
    int optimum;
    Code witness;
    std::uint64_t search_space_size;  // q^n
    std::uint64_t nodes;
    double elapsed_seconds;
};

/// Maximum size of a family of distinct subsets of [n] that is Sperner and
/// non-2-covering, by exact branch-and-bound clique search over the
/// compatibility graph (vertices: subsets other than [n]; edges:
/// incomparable, non-covering pairs). Requires 1 <= n <= 12.
FamilyCertificate max_non2cov_sperner(int n);

struct ExhaustiveOptions {
    std::uint64_t node_budget = 100'000'000;  // feasibility evaluations
    int threads = 1;
    bool reverse_symbol_order = false;  // mirror the alphabet before enumerating
};

/// Exact maximum m of an (n, m, q) t-wFP code by orderly backtracking with
/// the first word pinned to the enumeration-minimal word (sound: the
/// property depends only on agreement patterns). Every improvement is
/// re-verified definitionally. Requires q^n <= 2^20 and t >= 1.
///
/// Runs with any thread count produce bit-identical certificates: node
/// charges follow a sequential accounting walk over first-branch roots, so
/// `nodes` and the witness never depend on scheduling. A budget that runs
/// out yields status Inconclusive with the best code found so far.
CodeCertificate exhaustive_max_code(int n, int q, int t, const ExhaustiveOptions& opts = {});

/// m distinct uniformly drawn words, deterministic in seed. Requires m <= q^n.
Code random_code(int n, int q, int m, std::uint64_t seed);

enum class FamilyConstraint {
    None,
    Sperner,
    Intersecting,
    Non2Covering,
    SpernerAndNon2Covering,
};

/// A family with exactly one member per entry of member_sizes (distinct
/// members of exactly the requested sizes) satisfying the constraint.
/// Deterministic in seed: candidates are tried in seed-shuffled order with
/// backtracking, so unsatisfiable requests are detected and rejected.
/// Requires n <= 16.
Family random_family(int n, const std::vector<int>& member_sizes, FamilyConstraint constraint,
                     std::uint64_t seed);

}  // namespace wfp::oracles
