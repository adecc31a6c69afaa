#include "critset/criticality.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "critset/constructions.hpp"
#include "critset/enumeration.hpp"
#include "critset/solver.hpp"
#include "parallel.hpp"

namespace critset {

namespace {

using SubsetMask = std::uint32_t;

// Lexicographic comparison of the ascending element lists of two subsets.
bool subset_less(SubsetMask a, SubsetMask b) {
    while (a && b) {
        const int x = std::countr_zero(a);
        const int y = std::countr_zero(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

PartialLatinSquare subset_of_square(const LatinSquare& l, SubsetMask mask) {
    const int n = l.order();
    std::vector<int> grid(static_cast<std::size_t>(n * n), 0);
    for (SubsetMask m = mask; m; m &= m - 1) {
        const int cell = std::countr_zero(m);
        grid[static_cast<std::size_t>(cell)] = l.at(cell / n, cell % n);
    }
    return PartialLatinSquare::from_grid(n, std::move(grid));
}

bool better_witness(const LargestCritical& candidate, const LargestCritical& best) {
    if (candidate.size != best.size) return candidate.size > best.size;
    return triple_order_less(candidate.witness, best.witness);
}

}  // namespace

CriticalityReport verify_critical(const PartialLatinSquare& c, unsigned threads) {
    CriticalityReport report;
    report.size = c.size();

    auto self = count_completions(c, 2);
    report.uniquely_completable = self.count == 1;
    if (report.uniquely_completable) report.completion = self.witnesses.front();
    report.witnesses = std::move(self.witnesses);

    const auto entries = c.triples();
    std::vector<std::uint64_t> after(entries.size(), 0);
    detail::parallel_for_index(entries.size(), threads, [&](std::size_t i) {
        after[i] = count_completions(c.without({entries[i].row, entries[i].col}), 2).count;
    });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (after[i] < 2) report.violations.push_back({entries[i], after[i]});
    }
    report.minimal = report.violations.empty();
    return report;
}

PartialLatinSquare minimize_uc(const PartialLatinSquare& p, RemovalOrder order,
                               std::uint64_t seed) {
    if (!is_uniquely_completable(p)) throw NotUniquelyCompletable(count_completions(p, 2).count);

    auto cells = p.shape();
    if (order == RemovalOrder::Random) {
        std::mt19937_64 rng(seed);
        std::shuffle(cells.begin(), cells.end(), rng);
    }

    PartialLatinSquare current = p;
    bool removed = true;
    while (removed) {
        removed = false;
        for (const auto& cell : cells) {
            if (!current.filled(cell)) continue;
            auto smaller = current.without(cell);
            if (is_uniquely_completable(smaller)) {
                current = std::move(smaller);
                removed = true;
            }
        }
    }
    return current;
}

LargestCritical largest_critical_exhaustive(const LatinSquare& l, bool allow_order_5) {
    const int n = l.order();
    const int limit = allow_order_5 ? 5 : kMaxExhaustiveOrder;
    if (n > limit) {
        throw OrderOutOfRange("exhaustive critical set search supports orders up to " +
                              std::to_string(limit) + ", got " + std::to_string(n));
    }
    const int entries = n * n;
    const SubsetMask total = SubsetMask{1} << entries;

    // uc[m]: the subset m of l is uniquely completable. Every one-entry-smaller
    // subset of m is numerically smaller, so it is known before m. A superset
    // of a UC subset is UC and cannot be critical, so only subsets with no UC
    // predecessor reach the solver.
    std::vector<bool> uc(total, false);
    LargestCritical best{-1, PartialLatinSquare(n), true};
    SubsetMask best_mask = 0;

    for (SubsetMask m = 0; m < total; ++m) {
        bool implied = false;
        for (SubsetMask rest = m; rest; rest &= rest - 1) {
            if (uc[m & ~(rest & (~rest + 1))]) {
                implied = true;
                break;
            }
        }
        if (implied) {
            uc[m] = true;
            continue;
        }
        if (!is_uniquely_completable(subset_of_square(l, m))) continue;
        uc[m] = true;
        const int size = std::popcount(m);
        if (size > best.size || (size == best.size && subset_less(m, best_mask))) {
            best.size = size;
            best_mask = m;
        }
    }
    best.witness = subset_of_square(l, best_mask);
    return best;
}

LargestCritical largest_critical_heuristic(const LatinSquare& l, std::uint64_t seed, int starts,
                                           unsigned threads) {
    if (starts < 1) throw Error("heuristic search needs at least one start");
    std::vector<std::optional<PartialLatinSquare>> runs(static_cast<std::size_t>(starts));
    std::seed_seq base{seed, static_cast<std::uint64_t>(l.order())};
    std::vector<std::uint64_t> seeds(runs.size());
    base.generate(seeds.begin(), seeds.end());

    detail::parallel_for_index(runs.size(), threads, [&](std::size_t i) {
        runs[i] = minimize_uc(l.as_partial(), RemovalOrder::Random, seeds[i]);
    });

    LargestCritical best{runs.front()->size(), *runs.front(), false};
    for (std::size_t i = 1; i < runs.size(); ++i) {
        LargestCritical candidate{runs[i]->size(), *runs[i], false};
        if (better_witness(candidate, best)) best = std::move(candidate);
    }
    return best;
}

LcsRecord lcs_exhaustive(int n, unsigned threads, bool allow_order_5) {
    const int limit = allow_order_5 ? 5 : kMaxExhaustiveOrder;
    if (n < 1 || n > limit) {
        throw OrderOutOfRange("exhaustive lcs supports orders 1.." + std::to_string(limit) +
                              ", got " + std::to_string(n));
    }
    const auto squares = reduced_squares(n);
    std::vector<std::optional<LargestCritical>> per_square(squares.size());
    detail::parallel_for_index(squares.size(), threads, [&](std::size_t i) {
        per_square[i] = largest_critical_exhaustive(squares[i], allow_order_5);
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < squares.size(); ++i) {
        if (better_witness(*per_square[i], *per_square[best])) best = i;
    }
    return {n, per_square[best]->size, squares[best], per_square[best]->witness, true};
}

LcsRecord lcs_heuristic(int n, std::uint64_t seed, unsigned threads, int random_squares) {
    std::vector<LatinSquare> squares{back_circulant(n)};
    for (int i = 0; i < random_squares; ++i) {
        squares.push_back(random_latin_square(n, seed + static_cast<std::uint64_t>(i)));
    }
    std::size_t best_index = 0;
    std::optional<LargestCritical> best;
    for (std::size_t i = 0; i < squares.size(); ++i) {
        auto found = largest_critical_heuristic(squares[i], seed, 32, threads);
        if (!best || better_witness(found, *best)) {
            best = std::move(found);
            best_index = i;
        }
    }
    return {n, best->size, squares[best_index], best->witness, false};
}

}  // namespace critset
