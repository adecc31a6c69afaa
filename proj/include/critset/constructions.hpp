#pragma once

#include <cstdint>

#include "critset/core.hpp"

namespace critset {

/// The cyclic group table: entry (i, j) is ((i + j - 2) mod n) + 1 in
/// one-based coordinates.
LatinSquare back_circulant(int n);

/// The back-circulant square restricted to the triangle strictly above the
/// back diagonal, i.e. cells with i + j <= n (one-based). Size n(n-1)/2.
PartialLatinSquare nelder_triangle(int n);

/// The 5x5 critical set of size 11 that breaks the (n^2 - n)/2 conjecture.
PartialLatinSquare paper_example();

/// Every entry of `l` outside the first row and the first column.
PartialLatinSquare all_but_first_row_col(const LatinSquare& l);

/// Seeded random Latin square by row-major backtracking with a shuffled
/// symbol order per cell. Not uniform over all squares of the order.
LatinSquare random_latin_square(int n, std::uint64_t seed);

}  // namespace critset
