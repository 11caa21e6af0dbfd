#include "loosecyc/extremal.hpp"

#include "loosecyc/error.hpp"

namespace loosecyc {

ThreeGraph cover_host(int n, int cover_size) {
    if (n < 3 || cover_size < 0 || cover_size > n) throw InvalidInput("bad cover host parameters");
    std::vector<Triple> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            for (Vertex w = v + 1; w < n; ++w) {
                if (u < cover_size) edges.push_back({u, v, w});
            }
        }
    }
    return ThreeGraph(n, std::move(edges));
}

ExtremalInstance build_extremal(int n, const CycleFamilySpec& spec) {
    if (spec.order() != n) {
        throw InvalidInput("family order " + std::to_string(spec.order()) + " does not match n = " +
                           std::to_string(n));
    }
    const int a = cover_number(spec) - 1;
    ExtremalInstance inst{cover_host(n, a), VertexSet(n), VertexSet::full(n), spec};
    for (Vertex v = 0; v < a; ++v) {
        inst.cover.insert(v);
        inst.complement.erase(v);
    }
    return inst;
}

ExtremalReport verify_cover_instance(const ThreeGraph& host, int cover_size, const CycleFamilySpec& spec,
                                     bool use_solver, std::uint64_t budget) {
    const int n = host.order();
    ExtremalReport r;
    r.cover_size = cover_size;
    r.cover_number = cover_number(spec);

    // Pairs inside B see exactly the |A| vertices of A; pairs meeting A see
    // every other vertex.
    const int inside_b = cover_size;
    const int meets_a = n - 2;
    r.expected_codegree = n - cover_size >= 2 ? inside_b : meets_a;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const int want = u < cover_size ? meets_a : inside_b;
            const int got = host.codegree(u, v);
            if (got != want && r.failures.size() < 8) {
                r.failures.push_back("codegree of {" + std::to_string(u) + "," + std::to_string(v) + "} is " +
                                     std::to_string(got) + ", expected " + std::to_string(want));
            }
        }
    }
    r.measured_codegree = host.min_codegree();
    r.codegree_ok = r.measured_codegree == r.expected_codegree;
    if (!r.codegree_ok) {
        r.failures.push_back("min codegree " + std::to_string(r.measured_codegree) + " != " +
                             std::to_string(r.expected_codegree));
    }

    r.cover_ok = r.cover_number > cover_size;
    if (!r.cover_ok) {
        r.failures.push_back("cover number " + std::to_string(r.cover_number) + " does not exceed |A| = " +
                             std::to_string(cover_size));
    }

    if (use_solver) {
        const auto res = solve_spanning(host, spec, budget);
        r.solver = res.stats;
        r.solver_ok = res.stats.status == SearchStatus::Exhausted;
        if (!r.solver_ok) r.failures.push_back("solver status " + to_string(res.stats.status));
    }
    return r;
}

ExtremalReport verify_extremal(int n, const CycleFamilySpec& spec, bool use_solver, std::uint64_t budget) {
    const auto inst = build_extremal(n, spec);
    return verify_cover_instance(inst.host, inst.cover.count(), spec, use_solver, budget);
}

}  // namespace loosecyc
