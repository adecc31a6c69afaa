#include "critset/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <functional>
#include <mutex>
#include <thread>

namespace critset {

namespace {

constexpr std::size_t kMaxCells = static_cast<std::size_t>(kMaxOrder) * kMaxOrder;

// Mutable search node. Fixed-size so branching is a flat copy.
struct Grid {
    int n = 0;
    int filled = 0;
    SymbolMask full = 0;
    std::array<std::uint8_t, kMaxCells> cells{};
    std::array<SymbolMask, kMaxOrder> row_used{};
    std::array<SymbolMask, kMaxOrder> col_used{};

    explicit Grid(const PartialLatinSquare& p) : n(p.order()), filled(p.size()) {
        full = (SymbolMask{1} << n) - 1;
        const auto& src = p.cells();
        std::copy(src.begin(), src.end(), cells.begin());
        for (int i = 0; i < n; ++i) {
            row_used[i] = p.row_mask(i);
            col_used[i] = p.col_mask(i);
        }
    }

    std::uint8_t at(int r, int c) const { return cells[static_cast<std::size_t>(r * n + c)]; }
    SymbolMask candidates(int r, int c) const { return full & ~(row_used[r] | col_used[c]); }

    void assign(int r, int c, SymbolMask bit) {
        cells[static_cast<std::size_t>(r * n + c)] =
            static_cast<std::uint8_t>(std::countr_zero(bit) + 1);
        row_used[r] |= bit;
        col_used[c] |= bit;
        ++filled;
    }

    bool complete() const { return filled == n * n; }

    PartialLatinSquare to_partial() const {
        std::vector<int> grid(cells.begin(), cells.begin() + n * n);
        return PartialLatinSquare::from_grid(n, std::move(grid));
    }
};

// Returns false on contradiction.
bool close_forced(Grid& g) {
    const int n = g.n;
    bool changed = true;
    while (changed && !g.complete()) {
        changed = false;

        // Naked singles.
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                if (g.at(r, c)) continue;
                const SymbolMask cand = g.candidates(r, c);
                if (cand == 0) return false;
                if (std::has_single_bit(cand)) {
                    g.assign(r, c, cand);
                    changed = true;
                }
            }
        }

        // Hidden singles by row.
        for (int r = 0; r < n; ++r) {
            const SymbolMask missing = g.full & ~g.row_used[r];
            if (!missing) continue;
            SymbolMask once = 0, twice = 0;
            for (int c = 0; c < n; ++c) {
                if (g.at(r, c)) continue;
                const SymbolMask cand = missing & ~g.col_used[c];
                twice |= once & cand;
                once |= cand;
            }
            if (missing & ~once) return false;
            SymbolMask unique = once & ~twice;
            for (int c = 0; unique && c < n; ++c) {
                if (g.at(r, c)) continue;
                const SymbolMask hit = unique & g.candidates(r, c);
                if (!hit) continue;
                // Two symbols pinned to one cell: the second has nowhere to go.
                if (!std::has_single_bit(hit)) return false;
                g.assign(r, c, hit);
                unique &= ~hit;
                changed = true;
            }
        }

        // Hidden singles by column.
        for (int c = 0; c < n; ++c) {
            const SymbolMask missing = g.full & ~g.col_used[c];
            if (!missing) continue;
            SymbolMask once = 0, twice = 0;
            for (int r = 0; r < n; ++r) {
                if (g.at(r, c)) continue;
                const SymbolMask cand = missing & ~g.row_used[r];
                twice |= once & cand;
                once |= cand;
            }
            if (missing & ~once) return false;
            SymbolMask unique = once & ~twice;
            for (int r = 0; unique && r < n; ++r) {
                if (g.at(r, c)) continue;
                const SymbolMask hit = unique & g.candidates(r, c);
                if (!hit) continue;
                if (!std::has_single_bit(hit)) return false;
                g.assign(r, c, hit);
                unique &= ~hit;
                changed = true;
            }
        }
    }
    return true;
}

// Minimum remaining values, first in row-major order on ties. Call only on a
// propagated, incomplete grid.
Cell pick_branch_cell(const Grid& g) {
    Cell best{-1, -1};
    int best_count = kMaxOrder + 1;
    for (int r = 0; r < g.n; ++r) {
        for (int c = 0; c < g.n; ++c) {
            if (g.at(r, c)) continue;
            const int k = std::popcount(g.candidates(r, c));
            if (k < best_count) {
                best_count = k;
                best = {r, c};
                // Singles are gone after propagation, so two is the floor.
                if (k <= 2) return best;
            }
        }
    }
    return best;
}

template <typename F>
void for_each_child(const Grid& g, F&& f) {
    const Cell cell = pick_branch_cell(g);
    SymbolMask cand = g.candidates(cell.row, cell.col);
    while (cand) {
        const SymbolMask bit = cand & (~cand + 1);
        cand &= cand - 1;
        Grid child = g;
        child.assign(cell.row, cell.col, bit);
        if (!f(std::move(child))) return;
    }
}

struct Tally {
    std::uint64_t cap = kUnbounded;
    std::uint64_t count = 0;
    std::vector<Grid> witnesses;
    // Polled periodically; when it returns true the search unwinds.
    const std::function<bool()>* stop = nullptr;
    std::uint32_t nodes = 0;
    bool aborted = false;

    bool done() {
        if (aborted || count >= cap) return true;
        if (stop && (++nodes & 1023u) == 0 && (*stop)()) aborted = true;
        return aborted;
    }
};

void search(Grid g, Tally& tally) {
    if (tally.done()) return;
    if (!close_forced(g)) return;
    if (g.complete()) {
        ++tally.count;
        if (tally.witnesses.size() < 2) tally.witnesses.push_back(g);
        return;
    }
    for_each_child(g, [&](Grid child) {
        search(std::move(child), tally);
        return !tally.done();
    });
}

LatinSquare to_latin(const Grid& g) { return LatinSquare(g.to_partial()); }

CompletionReport finish(std::uint64_t count, std::uint64_t cap, const std::vector<Grid>& found) {
    CompletionReport report;
    report.capped = count >= cap;
    report.count = std::min(count, cap);
    const std::size_t keep = static_cast<std::size_t>(std::min<std::uint64_t>(2, report.count));
    for (std::size_t i = 0; i < keep && i < found.size(); ++i) {
        report.witnesses.push_back(to_latin(found[i]));
    }
    return report;
}

// Breaks the tree into subtrees listed in search order. Completed grids found
// while expanding are kept as one-leaf tasks so the order is preserved.
std::vector<Grid> expand_frontier(Grid root, std::size_t target) {
    std::vector<Grid> frontier;
    if (!close_forced(root)) return frontier;
    frontier.push_back(std::move(root));
    for (int depth = 0; depth < 64 && frontier.size() < target; ++depth) {
        std::vector<Grid> next;
        bool expanded = false;
        for (auto& g : frontier) {
            if (g.complete()) {
                next.push_back(std::move(g));
                continue;
            }
            expanded = true;
            for_each_child(g, [&](Grid child) {
                if (close_forced(child)) next.push_back(std::move(child));
                return true;
            });
        }
        frontier = std::move(next);
        if (!expanded) break;
    }
    return frontier;
}

struct TaskResult {
    std::uint64_t count = 0;
    std::vector<Grid> witnesses;
    bool finished = false;
};

CompletionReport count_parallel(const Grid& root, std::uint64_t cap, unsigned threads) {
    auto tasks = expand_frontier(root, static_cast<std::size_t>(threads) * 8);
    if (tasks.size() <= 1) {
        Tally tally;
        tally.cap = cap;
        for (auto& t : tasks) search(std::move(t), tally);
        return finish(tally.count, cap, tally.witnesses);
    }

    std::vector<TaskResult> results(tasks.size());
    std::mutex mutex;
    std::atomic<std::size_t> next{0};

    // Task i is irrelevant once finished tasks before it already reach the cap:
    // the ordered merge below never looks past them.
    auto prefix_reached_cap = [&](std::size_t i) {
        std::lock_guard lock(mutex);
        std::uint64_t sum = 0;
        for (std::size_t j = 0; j < i; ++j) {
            if (results[j].finished) sum += results[j].count;
            if (sum >= cap) return true;
        }
        return false;
    };

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            if (prefix_reached_cap(i)) continue;
            const std::function<bool()> stop = [&, i] { return prefix_reached_cap(i); };
            Tally tally;
            tally.cap = cap;
            tally.stop = &stop;
            search(std::move(tasks[i]), tally);
            if (tally.aborted) continue;
            std::lock_guard lock(mutex);
            results[i].count = tally.count;
            results[i].witnesses = std::move(tally.witnesses);
            results[i].finished = true;
        }
    };

    {
        std::vector<std::jthread> pool;
        const unsigned spawn = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
        pool.reserve(spawn);
        for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
    }

    std::uint64_t count = 0;
    std::vector<Grid> found;
    for (auto& r : results) {
        if (count >= cap) break;
        // Unfinished tasks only occur after the prefix has reached the cap.
        count += r.count;
        for (auto& w : r.witnesses) {
            if (found.size() < 2) found.push_back(std::move(w));
        }
    }
    return finish(count, cap, found);
}

}  // namespace

PropagationResult propagate(const PartialLatinSquare& p) {
    Grid g(p);
    const bool ok = close_forced(g);
    return {g.to_partial(), ok ? PropagationStatus::FixedPoint : PropagationStatus::Contradiction};
}

CompletionReport count_completions(const PartialLatinSquare& p, std::uint64_t cap,
                                   unsigned threads) {
    if (cap == 0) throw Error("completion cap must be positive");
    Grid root(p);
    if (threads > 1) return count_parallel(root, cap, threads);
    Tally tally;
    tally.cap = cap;
    search(std::move(root), tally);
    return finish(tally.count, cap, tally.witnesses);
}

bool is_uniquely_completable(const PartialLatinSquare& p) {
    return count_completions(p, 2).count == 1;
}

NotUniquelyCompletable::NotUniquelyCompletable(std::uint64_t completions)
    : Error(completions == 0 ? "partial square has no completion"
                             : "partial square has two or more completions"),
      completions_(completions) {}

LatinSquare unique_completion(const PartialLatinSquare& p) {
    auto report = count_completions(p, 2);
    if (report.count != 1) throw NotUniquelyCompletable(report.count);
    return std::move(report.witnesses.front());
}

}  // namespace critset
