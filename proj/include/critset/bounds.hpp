#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "critset/bigint.hpp"

namespace critset {

/// Absolute slack used when comparing natural-log quantities.
inline constexpr double kLogTolerance = 1e-9;

/// Published lcs(n) for n = 1..6.
inline constexpr std::array<int, 6> kKnownLcs{0, 1, 3, 7, 11, 18};
/// Published lower bounds on lcs(n) for n = 7..10.
inline constexpr std::array<int, 4> kKnownLcsLowerBounds{25, 37, 44, 57};

/// lcs(n) from the table above, if listed.
std::optional<int> known_lcs(int n);

/// ln(n!) as an exact sum of ln k.
double log_factorial(std::int64_t n);

/// n^2 (1 - (2 + ln 2)/ln n) + n (1 + ln(8 pi)/ln n) - ln 2 / ln n.
/// Throws Error for n < 2, where ln n is zero or negative.
double theorem1_lower(std::int64_t n);
/// Same bound with the n coefficient written 1 + (2 ln 2 + ln(2 pi))/ln n.
double theorem1_lower_proof_form(std::int64_t n);
/// The counting bound before Stirling's substitution:
/// (2n ln n! - n^2 ln n - (n^2 - 2n + 1) ln 2) / ln n. Needs n >= 2.
double exact_counting_lower(std::int64_t n);

BigInt nelder_bound(std::int64_t n);  // (n^2 - n)/2
BigInt bm_upper(std::int64_t n);      // n^2 - 3n + 3
BigInt svr_bound(std::int64_t m);     // 4^m - 3^m, a lower bound on lcs(2^m)

/// ln of the permanent-based lower bound (n!)^(2n) / n^(n^2).
double log_Ln_lower(std::int64_t n);

/// lhs <= ln L(n) <= rhs, with rhs = (n^2 - 2n + 1) ln 2 + lcs ln n.
struct ChainCheck {
    int order = 0;
    double lhs_log = 0;
    double mid_log = 0;
    double rhs_log = 0;
    bool holds = false;
};

/// Uses the exact L(n) from enumeration, so n is limited to 1..5.
ChainCheck check_chain(int n, int lcs_value);

/// ln sqrt(2 pi n) + n ln n - n <= ln n!, for 1 <= n <= 300.
bool stirling_check(int n);

/// Smallest n >= 2 with theorem1_lower(k) > nelder_bound(k) for every k in
/// [n, 10 n].
std::int64_t crossover();

struct BoundsRow {
    std::int64_t order = 0;
    BigInt nelder;
    BigInt bm_upper;
    std::optional<double> theorem1;              // undefined at n = 1
    std::optional<double> exact_counting_lower;  // undefined at n = 1
    std::optional<BigInt> svr;                   // only when n = 2^m, m >= 1
    double log_Ln_lower = 0;
    /// Coefficients of ln(count of critical sets) <= a + lcs(n) * b.
    std::pair<double, double> log_cs_count_upper_coeffs;
};

BoundsRow bounds_row(std::int64_t n);
std::vector<BoundsRow> bounds_table(std::int64_t n_from, std::int64_t n_to);

}  // namespace critset
