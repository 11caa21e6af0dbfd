#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loosecyc/error.hpp"
#include "loosecyc/extremal.hpp"
#include "loosecyc/generators.hpp"
#include "loosecyc/rng.hpp"
#include "loosecyc/solver.hpp"
#include "oracles.hpp"

using namespace loosecyc;

namespace {

std::vector<char> mask_of(int n, const VertexSet& s) {
    std::vector<char> m(static_cast<std::size_t>(n), 0);
    for (Vertex v : s.members()) m[static_cast<std::size_t>(v)] = 1;
    return m;
}

}  // namespace

TEST_CASE("spanning examples") {
    const auto six = parse_family("6");
    const auto found = solve_spanning(complete_graph(6), six);
    REQUIRE(found.embedding);
    CHECK(found.stats.status == SearchStatus::Found);
    CHECK(verify_embedding(complete_graph(6), six, *found.embedding, true).ok);

    const auto ext = build_extremal(6, six);
    CHECK(solve_spanning(ext.host, six).stats.status == SearchStatus::Exhausted);

    const auto blocks = disjoint_union(complete_graph(6), complete_graph(6));
    const auto two = solve_spanning(blocks, parse_family("6,6"));
    REQUIRE(two.embedding);
    CHECK(verify_embedding(blocks, parse_family("6,6"), *two.embedding, true).ok);
    CHECK(solve_spanning(blocks, parse_family("12")).stats.status == SearchStatus::Exhausted);

    CHECK_THROWS_AS(solve_spanning(complete_graph(7), six), InvalidInput);
}

TEST_CASE("embedding follows the family order") {
    const auto spec = parse_family("6,8,6");
    const auto res = solve_spanning(complete_graph(20), spec);
    REQUIRE(res.embedding);
    REQUIRE(res.embedding->cycles.size() == 3);
    CHECK(res.embedding->cycles[0].order() == 6);
    CHECK(res.embedding->cycles[1].order() == 8);
    CHECK(res.embedding->cycles[2].order() == 6);
    CHECK(verify_embedding(complete_graph(20), spec, *res.embedding, true).ok);
}

TEST_CASE("counting spanning copies") {
    // K6 holds 6!/(2 * 3) = 120 loose 6-cycles: 720 listings, 3 even
    // rotations, 2 directions.
    const auto c = count_spanning(complete_graph(6), parse_family("6"), kUnlimitedBudget, 4);
    CHECK(c.count == 120);
    CHECK(c.examples.size() == 4);
    CHECK(c.stats.status == SearchStatus::Found);
    for (std::size_t i = 0; i < c.examples.size(); ++i) {
        for (std::size_t j = i + 1; j < c.examples.size(); ++j) {
            CHECK_FALSE(c.examples[i].cycles[0] == c.examples[j].cycles[0]);
        }
    }
    // Two 6-cycles on 12 vertices: choose the split (C(12,6)/2 = 462), then
    // 120 cycles on each side.
    const auto two = count_spanning(complete_graph(12), parse_family("6,6"), kUnlimitedBudget, 0);
    CHECK(two.count == 462ULL * 120 * 120);
}

TEST_CASE("budget exhaustion reports a timeout") {
    const auto res = solve_spanning(build_extremal(12, parse_family("12")).host, parse_family("12"), 10);
    CHECK(res.stats.status == SearchStatus::Timeout);
    CHECK(res.stats.nodes == 10);
}

TEST_CASE("determinism") {
    const auto h = gen_random(10, 0.5, 3);
    const auto spec = parse_family("10");
    const auto a = solve_spanning(h, spec);
    const auto b = solve_spanning(h, spec);
    CHECK(a.stats.nodes == b.stats.nodes);
    CHECK(a.stats.status == b.stats.status);
    CHECK(a.embedding.has_value() == b.embedding.has_value());
    if (a.embedding) CHECK(a.embedding->cycles == b.embedding->cycles);
}

TEST_CASE("solver agrees with the permutation oracle") {
    Rng rng(2024);
    for (int n : {6, 8}) {
        for (int trial = 0; trial < 60; ++trial) {
            const double p = 0.2 + 0.6 * rng.unit();
            const auto h = gen_random(n, p, rng.next());
            for (const auto& spec : families_of_order(n)) {
                const auto res = solve_spanning(h, spec);
                CHECK(res.stats.status != SearchStatus::Timeout);
                CHECK((res.stats.status == SearchStatus::Found) == oracle::spanning_exists(h, spec.lengths()));
                if (res.embedding) CHECK(verify_embedding(h, spec, *res.embedding, true).ok);
            }
        }
    }
}

TEST_CASE("adding edges never loses a spanning family") {
    Rng rng(77);
    for (int chain = 0; chain < 8; ++chain) {
        const int n = rng.chance(0.5) ? 8 : 10;
        const auto spec = families_of_order(n).front();
        auto all = complete_graph(n).edges();
        rng.shuffle(std::span(all));
        bool seen = false;
        for (std::size_t m = 0; m <= all.size(); m += 6) {
            ThreeGraph h(n, std::vector<Triple>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m)));
            const bool found = solve_spanning(h, spec).stats.status == SearchStatus::Found;
            if (seen) CHECK(found);
            seen = seen || found;
        }
        CHECK(seen);
    }
}

TEST_CASE("single loose cycles") {
    const auto all8 = VertexSet::full(8);
    const auto k8 = find_loose_cycle(complete_graph(8), 6, all8);
    REQUIRE(k8.cycle);
    CHECK(k8.cycle->order() == 6);
    CHECK_FALSE(find_loose_cycle(empty_graph(8), 6, all8).cycle);
    CHECK_THROWS_AS(find_loose_cycle(complete_graph(8), 7, all8), InvalidInput);
    CHECK_THROWS_AS(find_loose_cycle(complete_graph(8), 4, all8), InvalidInput);

    const auto ext = build_extremal(10, parse_family("10")).host;
    CHECK(find_loose_cycle(ext, 10, VertexSet::full(10)).stats.status == SearchStatus::Exhausted);

    // Every 6-subset of the extremal host, against the oracle.
    for (int mask = 0; mask < (1 << 10); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != 6) continue;
        VertexSet allowed(10);
        for (int v = 0; v < 10; ++v) {
            if (mask >> v & 1) allowed.insert(v);
        }
        const auto r = find_loose_cycle(ext, 6, allowed);
        CHECK(r.cycle.has_value() == oracle::cycle_exists(ext, 6, mask_of(10, allowed)));
        if (r.cycle) {
            for (Vertex v : r.cycle->vertices()) CHECK(allowed.contains(v));
            for (const auto& e : r.cycle->edges()) CHECK(ext.has_edge(e.u, e.v, e.w));
        }
    }
}

TEST_CASE("cycle search agrees with the oracle on random hosts") {
    Rng rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 8 + static_cast<int>(rng.below(3));
        const auto h = gen_random(n, 0.05 + 0.3 * rng.unit(), rng.next());
        for (int t = 6; t <= n; t += 2) {
            const auto all = VertexSet::full(n);
            CHECK(find_loose_cycle(h, t, all).cycle.has_value() == oracle::cycle_exists(h, t, mask_of(n, all)));
        }
    }
}

TEST_CASE("loose paths") {
    const auto k7 = complete_graph(7);
    const auto all = VertexSet::full(7);
    const std::vector<Vertex> zero{0};
    const std::vector<Vertex> six{6};
    const auto r = find_loose_path(k7, 2, VertexSet::of(7, zero), VertexSet::of(7, six), all);
    REQUIRE(r.path);
    CHECK(r.path->vertices().size() == 5);
    CHECK(r.path->front() == 0);
    CHECK(r.path->back() == 6);
    CHECK_FALSE(find_loose_path(k7, 1, VertexSet::of(7, zero), VertexSet::of(7, zero), all).path);

    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 6 + static_cast<int>(rng.below(4));
        const auto h = gen_random(n, 0.1 + 0.4 * rng.unit(), rng.next());
        VertexSet s(n), e(n), allowed(n);
        for (int v = 0; v < n; ++v) {
            if (rng.chance(0.4)) s.insert(v);
            if (rng.chance(0.4)) e.insert(v);
            if (rng.chance(0.85)) allowed.insert(v);
        }
        for (int len = 1; len <= 3; ++len) {
            const auto got = find_loose_path(h, len, s, e, allowed);
            CHECK(got.path.has_value() == oracle::path_exists(h, len, mask_of(n, s), mask_of(n, e), mask_of(n, allowed)));
            if (got.path) {
                CHECK(s.contains(got.path->front()));
                CHECK(e.contains(got.path->back()));
                for (const auto& ed : got.path->edges()) CHECK(h.has_edge(ed.u, ed.v, ed.w));
            }
        }
    }
}

TEST_CASE("pancyclic report") {
    const auto full = greedy_pancyclic_report(complete_graph(12));
    REQUIRE(full.size() == 4);
    for (const auto& e : full) CHECK(e.status == SearchStatus::Found);

    const auto ext = greedy_pancyclic_report(build_extremal(12, parse_family("12")).host);
    REQUIRE(ext.size() == 4);
    CHECK(ext.back().q == 12);
    CHECK(ext.back().status == SearchStatus::Exhausted);
}

TEST_CASE("path feasibility table") {
    const auto h = complete_graph(9);
    std::vector<VertexSet> parts;
    for (int i = 0; i < 3; ++i) {
        const std::vector<Vertex> members{3 * i, 3 * i + 1, 3 * i + 2};
        parts.push_back(VertexSet::of(9, members));
    }
    const auto table = path_feasibility_table(h, parts, 4);
    CHECK(table.size() == 4 * 6);
    for (const auto& row : table) {
        // A loose path with e edges spans 2e + 1 vertices.
        const bool fits = 2 * row.edges + 1 <= 9;
        CHECK((row.status == SearchStatus::Found) == fits);
    }
}
