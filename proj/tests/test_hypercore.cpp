#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loosecyc/error.hpp"
#include "loosecyc/hypercore.hpp"
#include "oracles.hpp"

#include <sstream>

using namespace loosecyc;

TEST_CASE("vertex sets") {
    VertexSet s(130);
    CHECK(s.empty());
    s.insert(0);
    s.insert(64);
    s.insert(129);
    CHECK(s.count() == 3);
    CHECK(s.first() == 0);
    CHECK(s.next(1) == 64);
    CHECK(s.next(65) == 129);
    CHECK(s.next(130) == -1);
    s.erase(64);
    CHECK(s.members() == std::vector<Vertex>{0, 129});
    CHECK(VertexSet::full(70).count() == 70);
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(ThreeGraph(4, {{0, 1, 4}}), InvalidInput);
    CHECK_THROWS_AS(ThreeGraph(4, {{0, 1, 1}}), InvalidInput);
    CHECK_THROWS_AS(ThreeGraph(4, {{0, 1, 2}, {2, 1, 0}}), InvalidInput);
}

TEST_CASE("codegree queries on small hosts") {
    const auto k6 = complete_graph(6);
    CHECK(k6.size() == 20);
    CHECK(k6.min_codegree() == 4);
    CHECK(empty_graph(5).min_codegree() == 0);

    ThreeGraph h(5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}});
    CHECK(h.codegree(0, 1) == 2);
    CHECK(h.codegree(1, 0) == 2);
    CHECK(h.codegree(3, 4) == 1);
    CHECK(h.min_codegree() == 0);
    CHECK(h.degree(0) == 2);
    CHECK(h.neighbors(0, 1).members() == std::vector<Vertex>{2, 3});
}

TEST_CASE("codegree equals a direct triple count") {
    auto h = complete_graph(7);
    std::vector<Triple> kept;
    int i = 0;
    for (const auto& e : h.edges()) {
        if (i++ % 3 != 0) kept.push_back(e);
    }
    ThreeGraph g(7, kept);
    for (Vertex u = 0; u < 7; ++u) {
        for (Vertex v = u + 1; v < 7; ++v) {
            int direct = 0;
            for (Vertex w = 0; w < 7; ++w) direct += w != u && w != v && g.has_edge(u, v, w);
            CHECK(g.codegree(u, v) == direct);
        }
    }
}

TEST_CASE("family specs") {
    const auto spec = parse_family("6,8,10");
    CHECK(spec.order() == 24);
    CHECK(spec.odd_count() == 2);
    CHECK(cover_number(spec) == 7);
    CHECK(format_family(spec, '+') == "6+8+10");
    CHECK_THROWS_AS(parse_family("6,7"), InvalidInput);
    CHECK_THROWS_AS(parse_family("4"), InvalidInput);
    CHECK_THROWS_AS(parse_family(""), InvalidInput);

    CHECK(families_of_order(12).size() == 2);
    CHECK(families_of_order(7).empty());
    CHECK(families_of_order(20).size() == 5);
}

TEST_CASE("cover number equals the brute-force minimum cover") {
    for (int n = 6; n <= 20; n += 2) {
        for (const auto& spec : families_of_order(n)) {
            CAPTURE(format_family(spec));
            CHECK(cover_number(spec) == oracle::min_vertex_cover(n, oracle::family_edges(spec.lengths())));
            CHECK(4 * cover_number(spec) == n + 2 * spec.odd_count());
        }
    }
}

TEST_CASE("loose cycle canonical form") {
    const auto c = LooseCycle::from_vertices({5, 3, 0, 1, 4, 2});
    const auto canon = c.canonical();
    CHECK(canon.vertices() == std::vector<Vertex>{0, 1, 4, 2, 5, 3});
    auto sorted_edges = [](std::vector<Triple> e) {
        std::sort(e.begin(), e.end());
        return e;
    };
    CHECK(sorted_edges(c.edges()) == sorted_edges(canon.edges()));
    // Every even rotation and reflection maps to the same form.
    const std::vector<Vertex> v{7, 2, 9, 4, 1, 8, 3, 6};
    for (int shift = 0; shift < 8; shift += 2) {
        std::vector<Vertex> rot(8), ref(8);
        for (int i = 0; i < 8; ++i) {
            rot[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>((i + shift) % 8)];
            ref[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(((shift - i) % 8 + 8) % 8)];
        }
        CHECK(LooseCycle::from_vertices(rot).canonical() == LooseCycle::from_vertices(v).canonical());
        CHECK(LooseCycle::from_vertices(ref).canonical() == LooseCycle::from_vertices(v).canonical());
    }
    CHECK_THROWS_AS(LooseCycle::from_vertices({0, 1, 2, 3}), InvalidInput);
    CHECK_THROWS_AS(LooseCycle::from_vertices({0, 1, 2, 3, 4, 4}), InvalidInput);
}

TEST_CASE("embedding verification") {
    const auto spec = parse_family("6");
    const auto k6 = complete_graph(6);
    Embedding emb{{LooseCycle::from_vertices({0, 1, 2, 3, 4, 5})}};
    CHECK(verify_embedding(k6, spec, emb, true).ok);

    ThreeGraph sparse(6, {{0, 1, 2}, {2, 3, 4}});
    const auto rep = verify_embedding(sparse, spec, emb, true);
    CHECK_FALSE(rep.ok);
    CHECK(rep.violation.find("missing edge") != std::string::npos);

    Embedding partial{{LooseCycle::from_vertices({0, 1, 2, 3, 4, 5})}};
    CHECK_FALSE(verify_embedding(complete_graph(8), spec, partial, true).ok);
    CHECK(verify_embedding(complete_graph(8), spec, partial, false).ok);
}

TEST_CASE("h3 round trip") {
    ThreeGraph h(6, {{3, 4, 5}, {0, 1, 2}, {0, 2, 4}});
    std::stringstream ss;
    write_h3(ss, h);
    CHECK(read_h3(ss) == h);

    std::stringstream bad("n 4\ne 2 1 0\n");
    CHECK_THROWS_AS(read_h3(bad), InvalidInput);
    std::stringstream comments("# hello\n\nn 3\ne 0 1 2\n");
    CHECK(read_h3(comments).size() == 1);
}
