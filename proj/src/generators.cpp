#include "loosecyc/generators.hpp"

#include "loosecyc/error.hpp"
#include "loosecyc/rng.hpp"

#include <set>

namespace loosecyc {

ThreeGraph gen_random(int n, double edge_prob, std::uint64_t seed) {
    if (n < 0) throw InvalidInput("negative vertex count");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw InvalidInput("edge probability must lie in [0,1]");
    Rng rng(seed);
    std::vector<Triple> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            for (Vertex w = v + 1; w < n; ++w) {
                if (rng.chance(edge_prob)) edges.push_back({u, v, w});
            }
        }
    }
    return ThreeGraph(n, std::move(edges));
}

CodegreeInstance gen_codegree_floor(int n, int delta2_target, std::uint64_t seed) {
    if (n < 3) throw InvalidInput("codegree generator needs n >= 3");
    if (delta2_target < 0 || delta2_target > n - 2) {
        throw InvalidInput("codegree target " + std::to_string(delta2_target) + " is outside 0.." +
                           std::to_string(n - 2));
    }
    Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    rng.shuffle(std::span(pairs));

    std::set<Triple> edges;
    std::vector<int> codeg(static_cast<std::size_t>(n * n), 0);
    auto cd = [&](Vertex a, Vertex b) -> int& { return codeg[static_cast<std::size_t>(a * n + b)]; };
    for (auto [u, v] : pairs) {
        while (cd(u, v) < delta2_target) {
            std::vector<Vertex> free;
            for (Vertex w = 0; w < n; ++w) {
                if (w != u && w != v && !edges.count(Triple::sorted(u, v, w))) free.push_back(w);
            }
            const Vertex w = free[rng.below(free.size())];
            const Triple t = Triple::sorted(u, v, w);
            edges.insert(t);
            for (auto [a, b] : {std::pair{t.u, t.v}, std::pair{t.u, t.w}, std::pair{t.v, t.w}}) {
                ++cd(a, b);
                ++cd(b, a);
            }
        }
    }
    CodegreeInstance out{ThreeGraph(n, {edges.begin(), edges.end()}), delta2_target, 0};
    out.achieved = out.graph.min_codegree();
    return out;
}

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace loosecyc
