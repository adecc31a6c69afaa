#include "critset/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace critset {

LatinSquare back_circulant(int n) {
    check_order(n);
    std::vector<int> grid;
    grid.reserve(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) grid.push_back((i + j) % n + 1);
    return LatinSquare::from_grid(n, std::move(grid));
}

PartialLatinSquare nelder_triangle(int n) {
    if (n < 2) throw OrderOutOfRange("nelder_triangle needs order >= 2");
    const auto square = back_circulant(n);
    std::vector<Cell> cells;
    for (int i = 0; i < n; ++i)
        for (int j = 0; i + j <= n - 2; ++j) cells.push_back({i, j});
    return square.restrict_to(cells);
}

PartialLatinSquare paper_example() {
    // clang-format off
    return PartialLatinSquare::from_grid(5, {
        2, 0, 4, 3, 0,
        0, 0, 1, 2, 0,
        0, 2, 3, 1, 0,
        3, 1, 2, 0, 0,
        0, 0, 0, 0, 0,
    });
    // clang-format on
}

PartialLatinSquare all_but_first_row_col(const LatinSquare& l) {
    std::vector<Cell> cells;
    for (int i = 1; i < l.order(); ++i)
        for (int j = 1; j < l.order(); ++j) cells.push_back({i, j});
    return l.restrict_to(cells);
}

namespace {

bool fill_random(std::vector<int>& grid, std::vector<SymbolMask>& rows,
                 std::vector<SymbolMask>& cols, int n, int cell, std::mt19937_64& rng) {
    if (cell == n * n) return true;
    const int r = cell / n;
    const int c = cell % n;
    std::vector<int> symbols(static_cast<std::size_t>(n));
    std::iota(symbols.begin(), symbols.end(), 1);
    std::shuffle(symbols.begin(), symbols.end(), rng);
    for (int s : symbols) {
        const SymbolMask bit = SymbolMask{1} << (s - 1);
        if ((rows[r] | cols[c]) & bit) continue;
        grid[static_cast<std::size_t>(cell)] = s;
        rows[r] |= bit;
        cols[c] |= bit;
        if (fill_random(grid, rows, cols, n, cell + 1, rng)) return true;
        rows[r] &= ~bit;
        cols[c] &= ~bit;
    }
    grid[static_cast<std::size_t>(cell)] = 0;
    return false;
}

}  // namespace

LatinSquare random_latin_square(int n, std::uint64_t seed) {
    check_order(n);
    std::mt19937_64 rng(seed);
    std::vector<int> grid(static_cast<std::size_t>(n * n), 0);
    std::vector<SymbolMask> rows(static_cast<std::size_t>(n), 0);
    std::vector<SymbolMask> cols(static_cast<std::size_t>(n), 0);
    fill_random(grid, rows, cols, n, 0, rng);
    return LatinSquare::from_grid(n, std::move(grid));
}

}  // namespace critset
