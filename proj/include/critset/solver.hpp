#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "critset/core.hpp"

namespace critset {

inline constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

enum class PropagationStatus { FixedPoint, Contradiction };

struct PropagationResult {
    PartialLatinSquare square;
    PropagationStatus status;
};

/// Forced-move closure. Fills naked singles (a cell with one candidate) and
/// hidden singles (a row or column where a missing symbol fits one cell) until
/// neither rule fires. Reports Contradiction when a cell has no candidate or a
/// missing symbol has no admissible cell in some row or column. The returned
/// square has the same set of completions as the input.
PropagationResult propagate(const PartialLatinSquare& p);

/// Completions of a partial square.
///
/// `count` is exact when `capped` is false; otherwise the search stopped once
/// `cap` completions were seen and `count == cap`. `witnesses` holds the first
/// min(2, count) completions in the search order (minimum-remaining-values
/// cell, row-major tie break, ascending symbols), whatever the thread count.
struct CompletionReport {
    std::uint64_t count = 0;
    bool capped = false;
    std::vector<LatinSquare> witnesses;
};

CompletionReport count_completions(const PartialLatinSquare& p, std::uint64_t cap = kUnbounded,
                                   unsigned threads = 1);

bool is_uniquely_completable(const PartialLatinSquare& p);

/// Raised by unique_completion when the input has zero or several completions.
class NotUniquelyCompletable : public Error {
public:
    explicit NotUniquelyCompletable(std::uint64_t completions);
    /// 0, or 2 meaning "two or more".
    std::uint64_t completions() const noexcept { return completions_; }

private:
    std::uint64_t completions_;
};

LatinSquare unique_completion(const PartialLatinSquare& p);

}  // namespace critset
