#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loosecyc/allocate.hpp"
#include "loosecyc/error.hpp"
#include "loosecyc/rng.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <map>

using namespace loosecyc;

namespace {

std::vector<Rational> rationals(std::initializer_list<const char*> xs) {
    std::vector<Rational> out;
    for (const char* x : xs) out.push_back(parse_rational(x));
    return out;
}

std::map<int, int> bin_multiset(const BalanceAssignment& a, int bin) {
    std::map<int, int> m;
    for (std::size_t c = 0; c < a.lengths.size(); ++c) {
        if (a.bin_of[c] == bin) ++m[a.lengths[c]];
    }
    return m;
}

}  // namespace

TEST_CASE("rational parsing") {
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational("1/3") == Rational(1, 3));
    CHECK(parse_rational("-2.5e-1") == Rational(-1, 4));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK(floor_of(Rational(-3, 2)) == -2);
    CHECK(ceil_of(Rational(-3, 2)) == -1);
}

TEST_CASE("apportion examples") {
    const auto half = rationals({"0.5", "0.5"});
    CHECK(apportion(10, half) == std::vector<std::int64_t>{5, 5});
    const auto thirds = rationals({"1/3", "1/3", "1/3"});
    CHECK(apportion(10, thirds) == std::vector<std::int64_t>{4, 3, 3});
    const auto sixty = rationals({"0.6", "0.4"});
    CHECK(apportion(7, sixty) == std::vector<std::int64_t>{5, 2});
    CHECK_THROWS_AS(apportion(5, std::vector<Rational>{}), InvalidInput);
    CHECK_THROWS_AS(apportion(5, rationals({"0", "1"})), InvalidInput);
    CHECK_THROWS_AS(apportion(5, rationals({"0.5", "0.4"})), InvalidInput);
}

TEST_CASE("apportion bound on random weights") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = 1 + static_cast<int>(rng.below(6));
        std::vector<Rational> w;
        Rational total = 0;
        for (int i = 0; i < dim; ++i) {
            w.emplace_back(1 + static_cast<long long>(rng.below(1000)));
            total += w.back();
        }
        for (auto& x : w) x /= total;
        for (std::int64_t q = 0; q <= 50; ++q) {
            const auto out = apportion(q, w);
            std::int64_t sum = 0;
            for (std::size_t i = 0; i < w.size(); ++i) {
                sum += out[i];
                Rational gap = Rational(out[i]) - q * w[i];
                CHECK(abs(gap) <= 1);
            }
            CHECK(sum == q);
        }
    }
}

TEST_CASE("good pair example") {
    const auto gp = good_pair(1000000, 0, parse_rational("0.1"));
    CHECK(gp.a == 1000);
    CHECK(gp.b == 1985);
    CHECK(is_good_pair(1000000, 0, parse_rational("0.1"), gp.a, gp.b));
    CHECK_FALSE(is_good_pair(1000000, 0, parse_rational("0.1"), gp.a, gp.b - 1));
    CHECK_THROWS_AS(good_pair(100, 99, parse_rational("0.1")), InvalidInput);
    CHECK_THROWS_AS(good_pair(100, 1, parse_rational("1.5")), InvalidInput);
}

TEST_CASE("good pair window bounds") {
    const Rational eta = parse_rational("0.01");
    const auto low = good_window_low(600, 10, eta);
    const auto high = good_window_high(600, 10, eta);
    // (1200 - 40 - 0.48)/(620 + 0.24) and (1160/620) - 0.0001
    CHECK(low == (Rational(1160) - parse_rational("0.48")) / (Rational(620) + parse_rational("0.24")));
    CHECK(high == Rational(1160, 620) - parse_rational("0.0001"));
}

TEST_CASE("balance examples") {
    const auto exact = balance_partition({30, 30}, {6, 6, 6, 8, 8, 8, 8, 10}, 0, 8);
    CHECK(exact.feasible);
    CHECK(exact.max_abs_deviation() == 0);
    const std::map<int, int> with_ten{{6, 2}, {8, 1}, {10, 1}};
    const std::map<int, int> without{{6, 1}, {8, 3}};
    CHECK(((bin_multiset(exact, 0) == with_ten && bin_multiset(exact, 1) == without) ||
           (bin_multiset(exact, 1) == with_ten && bin_multiset(exact, 0) == without)));

    const auto one = balance_partition({40}, {6, 8, 10, 14}, 2, 8);
    CHECK(one.sums() == std::vector<std::int64_t>{38});
    CHECK(one.feasible);

    const auto loose = balance_partition({20, 20}, {6, 6, 6, 6, 8, 8}, 2, 8);
    CHECK(loose.feasible);
    auto sums = loose.sums();
    std::sort(sums.begin(), sums.end());
    CHECK((sums == std::vector<std::int64_t>{20, 20} || sums == std::vector<std::int64_t>{18, 22}));

    CHECK_THROWS_AS(balance_partition({10}, {6, 8, 10}, 1, 2), InvalidInput);
    CHECK_THROWS_AS(balance_partition({10}, {5}, 10, 2), InvalidInput);
}

TEST_CASE("balance progress is monotone and lengths are conserved") {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int bins = 1 + static_cast<int>(rng.below(4));
        const int count = 1 + static_cast<int>(rng.below(20));
        std::vector<int> lengths;
        std::int64_t total = 0;
        for (int i = 0; i < count; ++i) {
            lengths.push_back(6 + 2 * static_cast<int>(rng.below(5)));
            total += lengths.back();
        }
        std::vector<std::int64_t> targets(static_cast<std::size_t>(bins), total / bins);
        targets[0] += total - (total / bins) * bins;
        bool ok = true;
        for (auto t : targets) ok = ok && t > 0;
        if (!ok) continue;
        const auto a = balance_partition(targets, lengths, static_cast<std::int64_t>(rng.below(6)), count);
        auto sorted_in = lengths;
        auto sorted_out = a.lengths;
        std::sort(sorted_in.begin(), sorted_in.end());
        std::sort(sorted_out.begin(), sorted_out.end());
        CHECK(sorted_in == sorted_out);
        for (std::size_t i = 1; i < a.progress.size(); ++i) {
            CHECK(a.progress[i].first <= a.progress[i - 1].first);
            CHECK(a.progress[i].second >= a.progress[i - 1].second);
        }
        if (a.feasible) CHECK(a.within_limits());
    }
}

TEST_CASE("balance agrees with exhaustive feasibility") {
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const int bins = 1 + static_cast<int>(rng.below(4));
        const int count = 2 + static_cast<int>(rng.below(12));
        std::vector<int> lengths;
        std::int64_t total = 0;
        for (int i = 0; i < count; ++i) {
            lengths.push_back(6 + 2 * static_cast<int>(rng.below(5)));
            total += lengths.back();
        }
        std::vector<std::int64_t> targets;
        std::int64_t left = total;
        for (int b = 0; b + 1 < bins; ++b) {
            const std::int64_t t = std::max<std::int64_t>(1, total / bins + static_cast<std::int64_t>(rng.below(7)) - 3);
            targets.push_back(t);
            left -= t;
        }
        if (left <= 0) continue;
        targets.push_back(left);
        const std::int64_t tol = static_cast<std::int64_t>(rng.below(3));
        const int cap = static_cast<int>(rng.below(static_cast<std::uint64_t>(count) + 1));
        const bool exists = oracle::balance_feasible(targets, lengths, tol, cap);
        const auto a = balance_partition(targets, lengths, tol, cap);
        CAPTURE(trial);
        CHECK(a.feasible == exists);
        if (a.feasible) CHECK(a.within_limits());
    }
}

TEST_CASE("A-transform coefficients") {
    auto t68 = a_transform_coeffs({6, 8});
    CHECK(t68.coeffs == std::vector<int>{-1, 1});
    auto t610 = a_transform_coeffs({6, 10});
    CHECK(t610.coeffs == std::vector<int>{2, -1});
    CHECK_THROWS_AS(a_transform_coeffs({8, 12}), InvalidInput);
    CHECK_THROWS_AS(a_transform_coeffs({6, 12}), InvalidInput);
    CHECK_THROWS_AS(a_transform_coeffs({6}), InvalidInput);
    CHECK_THROWS_AS(a_transform_coeffs({6, 16}), InvalidInput);

    const std::vector<int> pool{6, 8, 10, 12, 14};
    for (int mask = 0; mask < 32; ++mask) {
        std::vector<int> support;
        int g = 0;
        for (int i = 0; i < 5; ++i) {
            if (mask >> i & 1) {
                support.push_back(pool[static_cast<std::size_t>(i)]);
                g = std::gcd(g, pool[static_cast<std::size_t>(i)]);
            }
        }
        if (support.size() < 2 || g != 2) continue;
        const auto t = a_transform_coeffs(support);
        int value = 0;
        for (std::size_t l = 0; l < t.support.size(); ++l) value += t.support[l] * t.coeffs[l];
        CHECK(value == 2);
    }
}

TEST_CASE("A-transform application") {
    BalanceAssignment a;
    a.targets = {20, 20};
    a.lengths = {6, 6, 8, 6, 6, 8};
    a.bin_of = {0, 0, 0, 1, 1, 1};
    a.tol = 4;
    a.odd_cap = 4;
    const auto t = a_transform_coeffs({6, 8});
    const auto moved = apply_a_transform(a, 0, 1, t);
    CHECK(moved.sums() == std::vector<std::int64_t>{18, 22});
    const auto back = apply_a_transform(moved, 1, 0, t);
    CHECK(back.sums() == a.sums());
    CHECK(bin_multiset(back, 0) == bin_multiset(a, 0));
    CHECK(bin_multiset(back, 1) == bin_multiset(a, 1));

    BalanceAssignment lacking = a;
    lacking.bin_of = {0, 0, 1, 1, 1, 1};
    CHECK_THROWS_AS(apply_a_transform(lacking, 0, 1, t), InvalidInput);
}

TEST_CASE("fair splits") {
    const std::vector<int> everything{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK(fair_split_check(10, {everything}, {1, 3, 5}, 0) == std::vector<bool>{true});
    CHECK(fair_split_check(10, {{0, 1, 2, 3, 4}}, {5, 6, 7}, parse_rational("0.1")) == std::vector<bool>{false});
    CHECK(fair_split_check(10, {{0, 1, 2, 3, 4}}, {0, 6}, parse_rational("0.1")) == std::vector<bool>{true});
}
