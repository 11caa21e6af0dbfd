#include "loosecyc/allocate.hpp"

#include "loosecyc/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace loosecyc {

namespace {

bool odd_cycle(int t) { return t % 4 == 2; }

}  // namespace

// --------------------------------------------------------------- apportion

std::vector<std::int64_t> apportion(std::int64_t q, std::span<const Rational> weights) {
    if (weights.empty()) throw InvalidInput("apportion: no weights");
    if (q < 0) throw InvalidInput("apportion: negative total");
    Rational total = 0;
    for (const auto& w : weights) {
        if (w <= 0) throw InvalidInput("apportion: weights must be positive");
        total += w;
    }
    const Rational slack(1, 1000000000);
    if (abs(total - 1) > slack) throw InvalidInput("apportion: weights must sum to 1");

    std::vector<std::int64_t> out;
    out.reserve(weights.size());
    std::int64_t floors = 0;
    for (const auto& w : weights) {
        const auto f = floor_of(Rational(q) * w / total).convert_to<std::int64_t>();
        out.push_back(f);
        floors += f;
    }
    const std::int64_t extra = q - floors;
    if (extra < 0 || extra > static_cast<std::int64_t>(weights.size())) {
        throw ClaimViolation("apportion: remainder outside [0, k]");
    }
    for (std::int64_t i = 0; i < extra; ++i) out[static_cast<std::size_t>(i)] += 1;
    return out;
}

// --------------------------------------------------------------- good pairs

Rational good_window_low(std::int64_t n, std::int64_t k, const Rational& eta) {
    const Rational nn(n);
    const Rational kk(k);
    return (2 * nn - 4 * kk - Rational(8, 100) * eta * nn) / (nn + 2 * kk + Rational(4, 100) * eta * nn);
}

Rational good_window_high(std::int64_t n, std::int64_t k, const Rational& eta) {
    const Rational nn(n);
    const Rational kk(k);
    return (2 * nn - 4 * kk) / (nn + 2 * kk) - eta * eta;
}

bool is_good_pair(std::int64_t n, std::int64_t k, const Rational& eta, std::int64_t a, std::int64_t b) {
    if (a <= 0 || b <= 0) return false;
    const Rational ratio(b, a);
    const BigInt cap = ceil_of(Rational(200) / eta);
    return good_window_low(n, k, eta) <= ratio && ratio <= good_window_high(n, k, eta) && a <= cap && b <= cap;
}

GoodPair good_pair(std::int64_t n, std::int64_t k, const Rational& eta) {
    if (n <= 0 || k < 0 || k >= n) throw InvalidInput("good_pair: need 0 <= k < n");
    if (eta <= 0 || eta >= 1) throw InvalidInput("good_pair: need 0 < eta < 1");
    GoodPair gp;
    gp.a = ceil_of(Rational(100) / eta).convert_to<std::int64_t>();
    gp.low = good_window_low(n, k, eta);
    gp.high = good_window_high(n, k, eta);
    const BigInt least = ceil_of(Rational(gp.a) * gp.low);
    gp.b = std::max<std::int64_t>(1, least > 0 ? least.convert_to<std::int64_t>() : 1);
    if (!is_good_pair(n, k, eta, gp.a, gp.b)) {
        throw InvalidInput("good_pair: window [" + to_string(gp.low) + ", " + to_string(gp.high) +
                           "] holds no admissible b/a with a = " + std::to_string(gp.a));
    }
    return gp;
}

// ------------------------------------------------------- BalanceAssignment

std::vector<std::int64_t> BalanceAssignment::sums() const {
    std::vector<std::int64_t> s(targets.size(), 0);
    for (std::size_t c = 0; c < lengths.size(); ++c) s[static_cast<std::size_t>(bin_of[c])] += lengths[c];
    return s;
}

std::vector<std::int64_t> BalanceAssignment::deviations() const {
    auto s = sums();
    for (std::size_t i = 0; i < s.size(); ++i) s[i] -= targets[i];
    return s;
}

std::vector<int> BalanceAssignment::odd_counts() const {
    std::vector<int> o(targets.size(), 0);
    for (std::size_t c = 0; c < lengths.size(); ++c) {
        if (odd_cycle(lengths[c])) ++o[static_cast<std::size_t>(bin_of[c])];
    }
    return o;
}

std::int64_t BalanceAssignment::max_abs_deviation() const {
    std::int64_t worst = 0;
    for (auto d : deviations()) worst = std::max(worst, d < 0 ? -d : d);
    return worst;
}

bool BalanceAssignment::within_limits() const {
    if (max_abs_deviation() > tol) return false;
    const auto odd = odd_counts();
    return std::all_of(odd.begin(), odd.end(), [&](int o) { return o <= odd_cap; });
}

namespace {

std::pair<std::int64_t, std::int64_t> badness_of(std::span<const std::int64_t> dev, std::int64_t tol) {
    std::int64_t over = 0;
    std::int64_t under = 0;
    for (auto d : dev) {
        if (d > tol) over += d;
        if (d < -tol) under += d;
    }
    return {over, under};
}

void seed_assignment(BalanceAssignment& a) {
    const std::size_t bins = a.targets.size();
    const auto total = std::accumulate(a.targets.begin(), a.targets.end(), std::int64_t{0});
    std::vector<Rational> weights;
    for (auto t : a.targets) weights.emplace_back(t, total);

    std::int64_t odd = 0;
    for (int t : a.lengths) odd += odd_cycle(t) ? 1 : 0;
    const std::int64_t even = static_cast<std::int64_t>(a.lengths.size()) - odd;
    auto odd_quota = apportion(odd, weights);
    auto even_quota = apportion(even, weights);

    std::vector<std::size_t> order(a.lengths.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return a.lengths[x] > a.lengths[y]; });

    std::vector<std::int64_t> sums(bins, 0);
    a.bin_of.assign(a.lengths.size(), 0);
    for (auto c : order) {
        auto& quota = odd_cycle(a.lengths[c]) ? odd_quota : even_quota;
        std::size_t best = bins;
        for (std::size_t i = 0; i < bins; ++i) {
            if (quota[i] == 0) continue;
            if (best == bins || a.targets[i] - sums[i] > a.targets[best] - sums[best]) best = i;
        }
        if (best == bins) throw ClaimViolation("balance seed: quotas do not cover all cycles");
        --quota[best];
        sums[best] += a.lengths[c];
        a.bin_of[c] = static_cast<int>(best);
    }
}

// One improving same-parity swap, or false when none exists.
bool improving_swap(BalanceAssignment& a) {
    const std::size_t bins = a.targets.size();
    auto dev = a.deviations();
    const auto [s_over, s_under] = badness_of(dev, a.tol);

    // members[bin] = cycle indices ordered by (length, index)
    std::vector<std::vector<std::size_t>> members(bins);
    for (std::size_t c = 0; c < a.lengths.size(); ++c) members[static_cast<std::size_t>(a.bin_of[c])].push_back(c);
    for (auto& m : members) {
        std::stable_sort(m.begin(), m.end(), [&](auto x, auto y) { return a.lengths[x] < a.lengths[y]; });
    }

    auto try_swaps = [&](bool overfull_case) {
        for (std::size_t i = 0; i < bins; ++i) {
            const bool bad = overfull_case ? dev[i] > a.tol : dev[i] < -a.tol;
            if (!bad) continue;
            for (std::size_t xi = 0; xi < members[i].size(); ++xi) {
                const auto x = members[i][xi];
                if (xi > 0 && a.lengths[members[i][xi - 1]] == a.lengths[x]) continue;
                for (std::size_t j = 0; j < bins; ++j) {
                    if (j == i) continue;
                    for (std::size_t yi = 0; yi < members[j].size(); ++yi) {
                        const auto y = members[j][yi];
                        if (yi > 0 && a.lengths[members[j][yi - 1]] == a.lengths[y]) continue;
                        if (odd_cycle(a.lengths[x]) != odd_cycle(a.lengths[y])) continue;
                        const int delta = a.lengths[x] - a.lengths[y];
                        if (overfull_case ? delta <= 0 : delta >= 0) continue;
                        auto next = dev;
                        next[i] -= delta;
                        next[j] += delta;
                        const auto [n_over, n_under] = badness_of(next, a.tol);
                        const bool better = overfull_case ? (n_over < s_over && n_under >= s_under)
                                                          : (n_under > s_under && n_over <= s_over);
                        if (!better) continue;
                        a.bin_of[x] = static_cast<int>(j);
                        a.bin_of[y] = static_cast<int>(i);
                        a.progress.emplace_back(n_over, n_under);
                        ++a.swaps;
                        return true;
                    }
                }
            }
        }
        return false;
    };
    return try_swaps(true) || try_swaps(false);
}

// Exact search over how many cycles of each order go to each bin.
bool exact_assignment(BalanceAssignment& a) {
    const std::size_t bins = a.targets.size();
    std::map<int, std::vector<std::size_t>, std::greater<>> classes;
    for (std::size_t c = 0; c < a.lengths.size(); ++c) classes[a.lengths[c]].push_back(c);
    std::vector<std::pair<int, std::vector<std::size_t>>> cls(classes.begin(), classes.end());

    std::vector<std::int64_t> suffix(cls.size() + 1, 0);
    for (std::size_t i = cls.size(); i-- > 0;) {
        suffix[i] = suffix[i + 1] + static_cast<std::int64_t>(cls[i].first) * static_cast<std::int64_t>(cls[i].second.size());
    }

    std::vector<std::int64_t> sums(bins, 0);
    std::vector<int> odds(bins, 0);
    std::vector<std::vector<int>> counts(cls.size(), std::vector<int>(bins, 0));
    std::set<std::vector<std::int64_t>> dead;

    auto fits_remaining = [&](std::size_t next_class) {
        std::int64_t need = 0;
        std::int64_t room = 0;
        for (std::size_t b = 0; b < bins; ++b) {
            need += std::max<std::int64_t>(0, a.targets[b] - a.tol - sums[b]);
            room += a.targets[b] + a.tol - sums[b];
        }
        return suffix[next_class] >= need && suffix[next_class] <= room;
    };

    std::function<bool(std::size_t)> by_class;
    std::function<bool(std::size_t, std::size_t, int)> by_bin = [&](std::size_t ci, std::size_t b, int left) -> bool {
        const int len = cls[ci].first;
        const bool odd = odd_cycle(len);
        if (b + 1 == bins) {
            if (sums[b] + static_cast<std::int64_t>(left) * len > a.targets[b] + a.tol) return false;
            if (odd && odds[b] + left > a.odd_cap) return false;
            sums[b] += static_cast<std::int64_t>(left) * len;
            if (odd) odds[b] += left;
            counts[ci][b] = left;
            const bool ok = by_class(ci + 1);
            sums[b] -= static_cast<std::int64_t>(left) * len;
            if (odd) odds[b] -= left;
            return ok;
        }
        for (int cnt = left; cnt >= 0; --cnt) {
            if (sums[b] + static_cast<std::int64_t>(cnt) * len > a.targets[b] + a.tol) continue;
            if (odd && odds[b] + cnt > a.odd_cap) continue;
            sums[b] += static_cast<std::int64_t>(cnt) * len;
            if (odd) odds[b] += cnt;
            counts[ci][b] = cnt;
            const bool ok = by_bin(ci, b + 1, left - cnt);
            sums[b] -= static_cast<std::int64_t>(cnt) * len;
            if (odd) odds[b] -= cnt;
            if (ok) return true;
        }
        return false;
    };
    by_class = [&](std::size_t ci) -> bool {
        if (!fits_remaining(ci)) return false;
        if (ci == cls.size()) return true;
        std::vector<std::int64_t> key{static_cast<std::int64_t>(ci)};
        key.insert(key.end(), sums.begin(), sums.end());
        key.insert(key.end(), odds.begin(), odds.end());
        if (dead.contains(key)) return false;
        if (by_bin(ci, 0, static_cast<int>(cls[ci].second.size()))) return true;
        dead.insert(std::move(key));
        return false;
    };

    if (!by_class(0)) return false;
    for (std::size_t ci = 0; ci < cls.size(); ++ci) {
        std::size_t next = 0;
        for (std::size_t b = 0; b < bins; ++b) {
            for (int t = 0; t < counts[ci][b]; ++t) a.bin_of[cls[ci].second[next++]] = static_cast<int>(b);
        }
    }
    return true;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> badness(const BalanceAssignment& a) {
    const auto dev = a.deviations();
    return badness_of(dev, a.tol);
}

BalanceAssignment balance_partition(std::vector<std::int64_t> targets, std::vector<int> lengths,
                                    std::int64_t tol, int odd_cap) {
    if (targets.empty()) throw InvalidInput("balance: no bins");
    if (tol < 0 || odd_cap < 0) throw InvalidInput("balance: tol and odd_cap must be non-negative");
    for (auto t : targets) {
        if (t <= 0) throw InvalidInput("balance: targets must be positive");
    }
    for (int t : lengths) {
        if (t < 6 || t % 2 != 0) throw InvalidInput("balance: cycle orders must be even and >= 6");
    }
    const auto target_total = std::accumulate(targets.begin(), targets.end(), std::int64_t{0});
    const auto length_total = std::accumulate(lengths.begin(), lengths.end(), std::int64_t{0});
    const auto slack = tol * static_cast<std::int64_t>(targets.size());
    if (length_total < target_total - slack || length_total > target_total + slack) {
        throw InvalidInput("balance: total cycle order is not within tol * bins of the total target");
    }

    BalanceAssignment a;
    a.targets = std::move(targets);
    a.lengths = std::move(lengths);
    a.tol = tol;
    a.odd_cap = odd_cap;
    seed_assignment(a);
    a.progress.push_back(badness(a));
    a.method = "seed";

    while (!a.within_limits() && improving_swap(a)) a.method = "local-search";
    if (a.within_limits()) {
        a.feasible = true;
        return a;
    }

    BalanceAssignment exact = a;
    if (exact_assignment(exact)) {
        exact.feasible = true;
        exact.method = "exact";
        return exact;
    }
    a.feasible = false;
    a.method = "best-effort";
    return a;
}

// ----------------------------------------------------------- A-transforms

ATransform a_transform_coeffs(std::vector<int> support) {
    std::sort(support.begin(), support.end());
    if (support.size() < 2) throw InvalidInput("A-transform needs at least two cycle orders");
    if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
        throw InvalidInput("A-transform support has repeated orders");
    }
    for (int x : support) {
        if (x < 6 || x > 14 || x % 2 != 0) throw InvalidInput("A-transform support must lie in {6,8,10,12,14}");
    }
    int g = 0;
    for (int x : support) g = std::gcd(g, x);
    if (g != 2) throw InvalidInput("A-transform support has gcd " + std::to_string(g) + ", not 2");

    const std::size_t m = support.size();
    std::vector<int> current(m, 0);
    std::vector<int> best;
    auto better = [&](const std::vector<int>& cand) {
        if (best.empty()) return true;
        auto nonzero = [](const std::vector<int>& v) { return std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }); };
        if (nonzero(cand) != nonzero(best)) return nonzero(cand) < nonzero(best);
        return cand < best;
    };
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int budget, int value) {
        if (i == m) {
            if (budget == 0 && value == 2 && better(current)) best = current;
            return;
        }
        for (int b = -budget; b <= budget; ++b) {
            current[i] = b;
            rec(i + 1, budget - std::abs(b), value + b * support[i]);
        }
        current[i] = 0;
    };
    for (int l1 = 1; best.empty(); ++l1) {
        if (l1 > 64) throw ClaimViolation("A-transform: no coefficients found despite gcd 2");
        rec(0, l1, 0);
    }
    return {std::move(support), std::move(best)};
}

BalanceAssignment apply_a_transform(const BalanceAssignment& assignment, int from_bin, int to_bin,
                                    const ATransform& transform) {
    const int bins = static_cast<int>(assignment.bin_count());
    if (from_bin < 0 || from_bin >= bins || to_bin < 0 || to_bin >= bins || from_bin == to_bin) {
        throw InvalidInput("A-transform: bad bin indices");
    }
    BalanceAssignment out = assignment;
    for (std::size_t l = 0; l < transform.support.size(); ++l) {
        const int coeff = transform.coeffs[l];
        if (coeff == 0) continue;
        const int src = coeff > 0 ? from_bin : to_bin;
        const int dst = coeff > 0 ? to_bin : from_bin;
        int needed = std::abs(coeff);
        for (std::size_t c = out.lengths.size(); c-- > 0 && needed > 0;) {
            if (out.lengths[c] == transform.support[l] && assignment.bin_of[c] == src && out.bin_of[c] == src) {
                out.bin_of[c] = dst;
                --needed;
            }
        }
        if (needed > 0) {
            throw InvalidInput("A-transform: bin " + std::to_string(src) + " lacks " + std::to_string(needed) +
                               " cycle(s) of order " + std::to_string(transform.support[l]));
        }
    }
    out.feasible = out.within_limits();
    return out;
}

// ------------------------------------------------------------ fair splits

std::vector<bool> fair_split_check(int universe_size, const std::vector<std::vector<int>>& family,
                                   const std::vector<int>& sample, const Rational& gamma) {
    if (universe_size <= 0) throw InvalidInput("fair split: empty universe");
    if (sample.empty()) throw InvalidInput("fair split: empty sample");
    std::vector<char> in_sample(static_cast<std::size_t>(universe_size), 0);
    for (int x : sample) {
        if (x < 0 || x >= universe_size) throw InvalidInput("fair split: sample leaves the universe");
        if (in_sample[x]) throw InvalidInput("fair split: sample repeats an element");
        in_sample[x] = 1;
    }
    std::vector<bool> out;
    out.reserve(family.size());
    const auto q = static_cast<std::int64_t>(sample.size());
    for (const auto& set : family) {
        std::int64_t hit = 0;
        for (int x : set) {
            if (x < 0 || x >= universe_size) throw InvalidInput("fair split: set leaves the universe");
            hit += in_sample[x];
        }
        const Rational gap = Rational(hit, q) - Rational(static_cast<std::int64_t>(set.size()), universe_size);
        out.push_back(abs(gap) <= gamma);
    }
    return out;
}

}  // namespace loosecyc
