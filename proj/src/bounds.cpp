#include "critset/bounds.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "critset/core.hpp"
#include "critset/enumeration.hpp"

namespace critset {

namespace {

void require_at_least(std::int64_t n, std::int64_t min, const char* what) {
    if (n < min) {
        throw Error(std::string(what) + " needs n >= " + std::to_string(min) + ", got " +
                    std::to_string(n));
    }
}

constexpr double kLn2 = std::numbers::ln2;
const double kLn2Pi = std::log(2.0 * std::numbers::pi);
const double kLn8Pi = std::log(8.0 * std::numbers::pi);

}  // namespace

std::optional<int> known_lcs(int n) {
    if (n < 1 || n > static_cast<int>(kKnownLcs.size())) return std::nullopt;
    return kKnownLcs[static_cast<std::size_t>(n - 1)];
}

double log_factorial(std::int64_t n) {
    require_at_least(n, 0, "log_factorial");
    double sum = 0;
    for (std::int64_t k = 2; k <= n; ++k) sum += std::log(static_cast<double>(k));
    return sum;
}

double theorem1_lower(std::int64_t n) {
    require_at_least(n, 2, "theorem1_lower");
    const double x = static_cast<double>(n);
    const double ln_n = std::log(x);
    return x * x * (1.0 - (2.0 + kLn2) / ln_n) + x * (1.0 + kLn8Pi / ln_n) - kLn2 / ln_n;
}

double theorem1_lower_proof_form(std::int64_t n) {
    require_at_least(n, 2, "theorem1_lower_proof_form");
    const double x = static_cast<double>(n);
    const double ln_n = std::log(x);
    return x * x * (1.0 - (2.0 + kLn2) / ln_n) + x * (1.0 + (2.0 * kLn2 + kLn2Pi) / ln_n) -
           kLn2 / ln_n;
}

double exact_counting_lower(std::int64_t n) {
    require_at_least(n, 2, "exact_counting_lower");
    const double x = static_cast<double>(n);
    const double ln_n = std::log(x);
    return (2.0 * x * log_factorial(n) - x * x * ln_n - (x * x - 2.0 * x + 1.0) * kLn2) / ln_n;
}

BigInt nelder_bound(std::int64_t n) {
    require_at_least(n, 1, "nelder_bound");
    const BigInt b = n;
    return (b * b - b) / 2;
}

BigInt bm_upper(std::int64_t n) {
    require_at_least(n, 1, "bm_upper");
    const BigInt b = n;
    return b * b - 3 * b + 3;
}

BigInt svr_bound(std::int64_t m) {
    require_at_least(m, 1, "svr_bound");
    const auto e = static_cast<unsigned>(m);
    return boost::multiprecision::pow(BigInt(4), e) - boost::multiprecision::pow(BigInt(3), e);
}

double log_Ln_lower(std::int64_t n) {
    require_at_least(n, 1, "log_Ln_lower");
    const double x = static_cast<double>(n);
    return 2.0 * x * log_factorial(n) - x * x * std::log(x);
}

ChainCheck check_chain(int n, int lcs_value) {
    if (n < 1 || n > kMaxEnumerationOrder) {
        throw OrderOutOfRange("check_chain needs exact L(n), available for n in 1.." +
                              std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
    }
    ChainCheck check;
    check.order = n;
    const double x = n;
    check.lhs_log = log_Ln_lower(n);
    check.mid_log = std::log(count_all(n).total_count.convert_to<double>());
    check.rhs_log = (x * x - 2.0 * x + 1.0) * kLn2 + lcs_value * std::log(x);
    check.holds = check.lhs_log <= check.mid_log + kLogTolerance &&
                  check.mid_log <= check.rhs_log + kLogTolerance;
    return check;
}

bool stirling_check(int n) {
    if (n < 1 || n > 300) {
        throw Error("stirling_check supports 1 <= n <= 300, got " + std::to_string(n));
    }
    const double x = n;
    const double stirling = 0.5 * std::log(2.0 * std::numbers::pi * x) + x * std::log(x) - x;
    return stirling <= log_factorial(n);
}

std::int64_t crossover() {
    constexpr std::int64_t kScanLimit = 1'000'000;
    for (std::int64_t n = 2; n <= kScanLimit; ++n) {
        bool all_above = true;
        for (std::int64_t k = n; k <= 10 * n; ++k) {
            const double nelder = static_cast<double>(k) * static_cast<double>(k - 1) / 2.0;
            if (!(theorem1_lower(k) > nelder)) {
                all_above = false;
                // Nothing below k can start a clean run.
                n = k;
                break;
            }
        }
        if (all_above) return n;
    }
    throw Error("no crossover below " + std::to_string(kScanLimit));
}

BoundsRow bounds_row(std::int64_t n) {
    require_at_least(n, 1, "bounds_row");
    BoundsRow row;
    row.order = n;
    row.nelder = nelder_bound(n);
    row.bm_upper = bm_upper(n);
    if (n >= 2) {
        row.theorem1 = theorem1_lower(n);
        row.exact_counting_lower = exact_counting_lower(n);
        if (std::has_single_bit(static_cast<std::uint64_t>(n))) {
            row.svr = svr_bound(std::countr_zero(static_cast<std::uint64_t>(n)));
        }
    }
    row.log_Ln_lower = log_Ln_lower(n);
    const double x = static_cast<double>(n);
    row.log_cs_count_upper_coeffs = {(x * x - 2.0 * x + 1.0) * kLn2, std::log(x)};
    return row;
}

std::vector<BoundsRow> bounds_table(std::int64_t n_from, std::int64_t n_to) {
    if (n_from < 1 || n_from > n_to) {
        throw Error("invalid bounds range " + std::to_string(n_from) + ".." +
                    std::to_string(n_to));
    }
    std::vector<BoundsRow> rows;
    rows.reserve(static_cast<std::size_t>(n_to - n_from + 1));
    for (std::int64_t n = n_from; n <= n_to; ++n) rows.push_back(bounds_row(n));
    return rows;
}

}  // namespace critset
