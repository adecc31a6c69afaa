#include "critset/enumeration.hpp"

namespace critset {

namespace {

void check_enumeration_order(int n, bool allow_order_6) {
    const int limit = allow_order_6 ? 6 : kMaxEnumerationOrder;
    if (n < 1 || n > limit) {
        throw OrderOutOfRange("enumeration supports orders 1.." + std::to_string(limit) +
                              (allow_order_6 ? "" : " (order 6 is opt-in)") + ", got " +
                              std::to_string(n));
    }
}

struct Filler {
    int n;
    std::vector<int> grid;
    std::vector<SymbolMask> rows, cols;
    const std::function<void(const LatinSquare&)>& visit;

    void set(int r, int c, int s) {
        grid[static_cast<std::size_t>(r * n + c)] = s;
        rows[r] |= SymbolMask{1} << (s - 1);
        cols[c] |= SymbolMask{1} << (s - 1);
    }
    void unset(int r, int c, int s) {
        grid[static_cast<std::size_t>(r * n + c)] = 0;
        rows[r] &= ~(SymbolMask{1} << (s - 1));
        cols[c] &= ~(SymbolMask{1} << (s - 1));
    }

    // Cells of row 0 and column 0 are preset; fill the rest row-major with
    // ascending symbols, which yields lexicographic order.
    void fill(int cell) {
        if (cell == n * n) {
            visit(LatinSquare::from_grid(n, grid));
            return;
        }
        const int r = cell / n;
        const int c = cell % n;
        if (r == 0 || c == 0) {
            fill(cell + 1);
            return;
        }
        for (int s = 1; s <= n; ++s) {
            const SymbolMask bit = SymbolMask{1} << (s - 1);
            if ((rows[r] | cols[c]) & bit) continue;
            set(r, c, s);
            fill(cell + 1);
            unset(r, c, s);
        }
    }
};

}  // namespace

void for_each_reduced(int n, const std::function<void(const LatinSquare&)>& visit,
                      bool allow_order_6) {
    check_enumeration_order(n, allow_order_6);
    Filler f{n, std::vector<int>(static_cast<std::size_t>(n * n), 0),
             std::vector<SymbolMask>(static_cast<std::size_t>(n), 0),
             std::vector<SymbolMask>(static_cast<std::size_t>(n), 0), visit};
    for (int j = 0; j < n; ++j) f.set(0, j, j + 1);
    for (int i = 1; i < n; ++i) f.set(i, 0, i + 1);
    f.fill(0);
}

std::vector<LatinSquare> reduced_squares(int n, bool allow_order_6) {
    std::vector<LatinSquare> out;
    for_each_reduced(n, [&](const LatinSquare& l) { out.push_back(l); }, allow_order_6);
    return out;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

EnumerationResult count_all(int n, bool allow_order_6) {
    EnumerationResult result;
    result.order = n;
    std::uint64_t reduced = 0;
    for_each_reduced(n, [&](const LatinSquare&) { ++reduced; }, allow_order_6);
    result.reduced_count = reduced;
    result.total_count = factorial(n) * factorial(n - 1) * result.reduced_count;
    return result;
}

}  // namespace critset
