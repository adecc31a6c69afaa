#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "critset/core.hpp"

namespace critset {

/// An entry whose removal leaves fewer than two completions, i.e. one that
/// keeps the set from being minimal.
struct Violation {
    Triple entry;
    std::uint64_t completions_after_removal = 0;  // 0 or 1
};

struct CriticalityReport {
    int size = 0;
    bool uniquely_completable = false;
    /// Every single-entry removal has at least two completions.
    bool minimal = false;
    /// Present iff uniquely_completable.
    std::optional<LatinSquare> completion;
    /// Up to two completions of the set itself (two when it is not UC).
    std::vector<LatinSquare> witnesses;
    /// Empty iff minimal; in row-major order.
    std::vector<Violation> violations;

    bool critical() const noexcept { return uniquely_completable && minimal; }
};

/// Checks unique completability and minimality. Single-entry removals
/// suffice: removing more entries can only add completions.
CriticalityReport verify_critical(const PartialLatinSquare& c, unsigned threads = 1);

enum class RemovalOrder { RowMajor, Random };

/// Greedily drops entries while unique completability persists, sweeping in
/// the given order until a full pass removes nothing. The result is a
/// critical set with the same completion as `p`. Throws
/// NotUniquelyCompletable if `p` is not uniquely completable.
PartialLatinSquare minimize_uc(const PartialLatinSquare& p,
                               RemovalOrder order = RemovalOrder::RowMajor,
                               std::uint64_t seed = 0);

/// Largest critical set found inside one square.
struct LargestCritical {
    int size = 0;
    PartialLatinSquare witness;
    /// False when the size is only a lower bound (heuristic search).
    bool exact = true;
};

/// Largest order handled by exhaustive subset search; order 5 is opt-in.
inline constexpr int kMaxExhaustiveOrder = 4;

/// Scans every subset of the n^2 entries of `l`. Among maximum-size critical
/// sets the one with the smallest row-major triple list is returned.
LargestCritical largest_critical_exhaustive(const LatinSquare& l, bool allow_order_5 = false);

/// Best of `starts` seeded random-order minimize_uc runs from the full square.
/// The size is a lower bound.
LargestCritical largest_critical_heuristic(const LatinSquare& l, std::uint64_t seed = 0,
                                           int starts = 32, unsigned threads = 1);

struct LcsRecord {
    int order = 0;
    int value = 0;
    LatinSquare witness_square;
    PartialLatinSquare witness_set;
    bool exact = true;
};

/// lcs(n) as the maximum of largest_critical_exhaustive over all reduced
/// squares of order n. Relabeling rows, columns and symbols maps critical
/// sets to critical sets and every square relabels to a reduced one.
LcsRecord lcs_exhaustive(int n, unsigned threads = 1, bool allow_order_5 = false);

/// Lower bound on lcs(n): heuristic search over the back-circulant square and
/// `random_squares` seeded random squares.
LcsRecord lcs_heuristic(int n, std::uint64_t seed = 0, unsigned threads = 1,
                        int random_squares = 7);

}  // namespace critset
