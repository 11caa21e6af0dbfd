#pragma once

#include "loosecyc/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace loosecyc {

/// Rounds q * weights[i] to integers q_i with sum q and |q_i - q w_i| <= 1:
/// floors everywhere, then +1 on the first q - sum(floors) entries.
/// Weights must be positive; if their sum is within 1e-9 of 1 they are
/// rescaled to sum to exactly 1 first.
std::vector<std::int64_t> apportion(std::int64_t q, std::span<const Rational> weights);

/// Window for b/a:
///   [(2n - 4k - 0.08 eta n) / (n + 2k + 0.04 eta n),  (2n - 4k)/(n + 2k) - eta^2].
struct GoodPair {
    std::int64_t a = 0;
    std::int64_t b = 0;
    Rational low;
    Rational high;

    Rational width() const { return high - low; }
};

Rational good_window_low(std::int64_t n, std::int64_t k, const Rational& eta);
Rational good_window_high(std::int64_t n, std::int64_t k, const Rational& eta);
/// Both clauses: b/a inside the window and a, b <= ceil(200/eta).
bool is_good_pair(std::int64_t n, std::int64_t k, const Rational& eta, std::int64_t a, std::int64_t b);

/// a = ceil(100/eta) and the least positive b that makes (a, b) good.
/// Throws InvalidInput on bad parameters or when no such b exists.
GoodPair good_pair(std::int64_t n, std::int64_t k, const Rational& eta);

/// Assignment of cycles (by loose-cycle order) to bins with target sums.
struct BalanceAssignment {
    std::vector<std::int64_t> targets;
    std::vector<int> lengths;
    std::vector<int> bin_of;  // per cycle
    std::int64_t tol = 0;
    int odd_cap = 0;
    bool feasible = false;
    // "seed", "local-search", "exact" or "best-effort".
    std::string method;
    int swaps = 0;
    // (S, S') after the seed and after every accepted swap.
    std::vector<std::pair<std::int64_t, std::int64_t>> progress;

    std::size_t bin_count() const { return targets.size(); }
    std::vector<std::int64_t> sums() const;
    std::vector<std::int64_t> deviations() const;
    std::vector<int> odd_counts() const;
    std::int64_t max_abs_deviation() const;
    bool within_limits() const;
};

/// S: total deviation of bins above t_i + tol. S': total (negative)
/// deviation of bins below t_i - tol.
std::pair<std::int64_t, std::int64_t> badness(const BalanceAssignment& a);

/// Splits cycles into bins so that |sum_i - t_i| <= tol and each bin holds at
/// most odd_cap odd cycles. Seeds odd and even cycles separately with
/// apportion, then performs same-parity swaps that lower S (overfull bins) or
/// raise S' without raising S (underfull bins). If the swaps stall short of
/// the limits, an exact search over per-length counts finishes the job or
/// proves infeasibility; `feasible` is false only in that last case.
BalanceAssignment balance_partition(std::vector<std::int64_t> targets, std::vector<int> lengths,
                                    std::int64_t tol, int odd_cap);

/// Integer coefficients with sum(support[l] * coeffs[l]) = 2.
struct ATransform {
    std::vector<int> support;
    std::vector<int> coeffs;
};

/// Support is a subset of {6, 8, 10, 12, 14} with at least two elements and
/// gcd 2. Picks the coefficient vector of least L1 norm, then fewest nonzero
/// entries, then lexicographically least.
ATransform a_transform_coeffs(std::vector<int> support);

/// Moves coeffs[l] cycles of order support[l] from `from_bin` to `to_bin`
/// (negative: the other way). The sum of `to_bin` grows by 2 and the sum of
/// `from_bin` shrinks by 2. Throws InvalidInput if a bin lacks a needed cycle.
BalanceAssignment apply_a_transform(const BalanceAssignment& assignment, int from_bin, int to_bin,
                                    const ATransform& transform);

/// For each set A: | |A n Q| / |Q| - |A| / t | <= gamma.
std::vector<bool> fair_split_check(int universe_size, const std::vector<std::vector<int>>& family,
                                   const std::vector<int>& sample, const Rational& gamma);

}  // namespace loosecyc
