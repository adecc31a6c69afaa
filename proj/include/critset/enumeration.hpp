#pragma once

#include <functional>

#include "critset/bigint.hpp"
#include "critset/core.hpp"

namespace critset {

/// Largest order enumerated by default; order 6 needs `allow_order_6`.
inline constexpr int kMaxEnumerationOrder = 5;

struct EnumerationResult {
    int order = 0;
    BigInt reduced_count;  // R(n)
    BigInt total_count;    // L(n) = n! (n-1)! R(n)
};

/// Visits every reduced Latin square of order n (first row and first column
/// both 1..n) exactly once, in lexicographic row-major order.
void for_each_reduced(int n, const std::function<void(const LatinSquare&)>& visit,
                      bool allow_order_6 = false);

std::vector<LatinSquare> reduced_squares(int n, bool allow_order_6 = false);

EnumerationResult count_all(int n, bool allow_order_6 = false);

BigInt factorial(int n);

}  // namespace critset
