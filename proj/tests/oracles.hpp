// Slow, definition-level reference implementations. Each one is written
// without reusing the library routine it checks.
#pragma once

#include "loosecyc/hypercore.hpp"
#include "loosecyc/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>
#include <vector>

namespace oracle {

using loosecyc::Rational;
using loosecyc::ThreeGraph;
using loosecyc::Triple;
using loosecyc::Vertex;

// Minimum vertex cover by branching on an uncovered edge.
inline int min_vertex_cover(int n, const std::vector<Triple>& edges) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> coverable = [&](int budget) -> bool {
        const Triple* open = nullptr;
        for (const auto& e : edges) {
            if (!in[e.u] && !in[e.v] && !in[e.w]) {
                open = &e;
                break;
            }
        }
        if (!open) return true;
        if (budget == 0) return false;
        for (Vertex x : {open->u, open->v, open->w}) {
            in[x] = 1;
            const bool ok = coverable(budget - 1);
            in[x] = 0;
            if (ok) return true;
        }
        return false;
    };
    for (int size = 0;; ++size) {
        if (coverable(size)) return size;
    }
}

// Disjoint loose cycles of the given orders laid out on consecutive vertices.
inline std::vector<Triple> family_edges(const std::vector<int>& orders) {
    std::vector<Triple> edges;
    int base = 0;
    for (int t : orders) {
        for (int i = 0; i < t; i += 2) edges.push_back(Triple::sorted(base + i, base + i + 1, base + (i + 2) % t));
        base += t;
    }
    return edges;
}

// Every (green, blue, red) count triple of a proper 3-coloring of C_n.
inline std::set<std::array<int, 3>> achievable_color_counts(int n) {
    std::set<std::array<int, 3>> out;
    std::vector<int> col(static_cast<std::size_t>(n), 0);
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t c = code;
        for (int i = 0; i < n; ++i) {
            col[static_cast<std::size_t>(i)] = static_cast<int>(c % 3);
            c /= 3;
        }
        bool proper = true;
        for (int i = 0; i < n && proper; ++i) proper = col[static_cast<std::size_t>(i)] != col[static_cast<std::size_t>((i + 1) % n)];
        if (!proper) continue;
        std::array<int, 3> counts{};
        for (int x : col) ++counts[static_cast<std::size_t>(x)];
        out.insert(counts);
    }
    return out;
}

// Colorable rows of a cycle of length m: no color on more than floor(m/2)
// positions.
inline bool row_ok(const std::array<int, 3>& row, int m) {
    return row[0] + row[1] + row[2] == m && *std::min_element(row.begin(), row.end()) >= 0 &&
           *std::max_element(row.begin(), row.end()) <= m / 2;
}

// Integer search for rows with the given column sums.
inline bool allocation_exists(const std::array<int, 3>& parts, const std::vector<int>& lengths) {
    std::set<std::tuple<std::size_t, int, int>> dead;
    std::function<bool(std::size_t, int, int, int)> go = [&](std::size_t i, int r0, int r1, int r2) -> bool {
        if (i == lengths.size()) return r0 == 0 && r1 == 0 && r2 == 0;
        if (dead.count({i, r0, r1})) return false;
        const int m = lengths[i];
        for (int x = 0; x <= std::min(m, r0); ++x) {
            for (int y = 0; y <= std::min(m - x, r1); ++y) {
                const int z = m - x - y;
                if (z > r2 || !row_ok({x, y, z}, m)) continue;
                if (go(i + 1, r0 - x, r1 - y, r2 - z)) return true;
            }
        }
        dead.insert({i, r0, r1});
        return false;
    };
    return go(0, parts[0], parts[1], parts[2]);
}

// Spanning family test by assigning host vertices to cycle slots one at a
// time, checking each edge as soon as its three slots are filled.
inline bool spanning_exists(const ThreeGraph& host, const std::vector<int>& orders) {
    const int n = host.order();
    int total = std::accumulate(orders.begin(), orders.end(), 0);
    if (total != n) return false;
    // Slot s closes edge (s-2, s-1, s) for odd-indexed ends; collect checks.
    std::vector<std::vector<std::array<int, 3>>> closes(static_cast<std::size_t>(n));
    int base = 0;
    for (int t : orders) {
        for (int i = 0; i < t; i += 2) {
            std::array<int, 3> e{base + i, base + i + 1, base + (i + 2) % t};
            const int last = std::max({e[0], e[1], e[2]});
            closes[static_cast<std::size_t>(last)].push_back(e);
        }
        base += t;
    }
    std::vector<Vertex> slot(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> fill = [&](int s) -> bool {
        if (s == n) return true;
        for (Vertex v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            slot[static_cast<std::size_t>(s)] = v;
            bool ok = true;
            for (const auto& e : closes[static_cast<std::size_t>(s)]) {
                if (!host.has_edge(slot[static_cast<std::size_t>(e[0])], slot[static_cast<std::size_t>(e[1])],
                                   slot[static_cast<std::size_t>(e[2])])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[static_cast<std::size_t>(v)] = 1;
            const bool done = fill(s + 1);
            used[static_cast<std::size_t>(v)] = 0;
            if (done) return true;
        }
        return false;
    };
    return fill(0);
}

// Loose path with `edges` edges, vertices distinct and inside `allowed`,
// first vertex in `start`, last in `end`.
inline bool path_exists(const ThreeGraph& host, int edges, const std::vector<char>& start,
                        const std::vector<char>& end, const std::vector<char>& allowed) {
    const int n = host.order();
    const int len = 2 * edges + 1;
    std::vector<Vertex> seq;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<bool()> grow = [&]() -> bool {
        const int s = static_cast<int>(seq.size());
        if (s == len) return end[static_cast<std::size_t>(seq.back())] != 0;
        for (Vertex v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)] || !allowed[static_cast<std::size_t>(v)]) continue;
            if (s == 0 && !start[static_cast<std::size_t>(v)]) continue;
            if (s >= 2 && s % 2 == 0 && !host.has_edge(seq[static_cast<std::size_t>(s - 2)], seq[static_cast<std::size_t>(s - 1)], v)) continue;
            seq.push_back(v);
            used[static_cast<std::size_t>(v)] = 1;
            const bool done = grow();
            used[static_cast<std::size_t>(v)] = 0;
            seq.pop_back();
            if (done) return true;
        }
        return false;
    };
    return grow();
}

// Definition-level regularity test. mode: 0 regular, 1 half, 2 super,
// 3 half-super.
inline bool regular_holds(const ThreeGraph& host, const std::array<std::vector<Vertex>, 3>& parts,
                          const Rational& eps, const Rational& d, int mode) {
    const auto& P = parts;
    const std::size_t a = P[0].size(), b = P[1].size(), c = P[2].size();
    std::vector<char> cube(a * b * c, 0);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            for (std::size_t l = 0; l < c; ++l) cube[(i * b + j) * c + l] = host.has_edge(P[0][i], P[1][j], P[2][l]);

    auto edges_in = [&](std::uint32_t m0, std::uint32_t m1, std::uint32_t m2) {
        long long e = 0;
        for (std::size_t i = 0; i < a; ++i) {
            if (!((m0 >> i) & 1U)) continue;
            for (std::size_t j = 0; j < b; ++j) {
                if (!((m1 >> j) & 1U)) continue;
                for (std::size_t l = 0; l < c; ++l) {
                    if ((m2 >> l) & 1U) e += cube[(i * b + j) * c + l];
                }
            }
        }
        return e;
    };
    const Rational whole(edges_in((1U << a) - 1, (1U << b) - 1, (1U << c) - 1), static_cast<long long>(a * b * c));
    const bool half = mode == 1 || mode == 3;
    const bool super = mode == 2 || mode == 3;
    if (!half && whole < d) return false;
    if (super) {
        const Rational product = d * static_cast<long long>(a * b * c);
        for (int side = 0; side < 3; ++side) {
            const std::size_t sz = P[static_cast<std::size_t>(side)].size();
            for (std::size_t x = 0; x < sz; ++x) {
                std::array<std::uint32_t, 3> m{(1U << a) - 1, (1U << b) - 1, (1U << c) - 1};
                m[static_cast<std::size_t>(side)] = 1U << x;
                if (Rational(edges_in(m[0], m[1], m[2]) * static_cast<long long>(sz)) < product) return false;
            }
        }
    }
    auto big_enough = [&](std::uint32_t m, std::size_t sz) {
        return Rational(std::popcount(m)) >= eps * static_cast<long long>(sz);
    };
    for (std::uint32_t m0 = 1; m0 < (1U << a); ++m0) {
        if (!big_enough(m0, a)) continue;
        for (std::uint32_t m1 = 1; m1 < (1U << b); ++m1) {
            if (!big_enough(m1, b)) continue;
            for (std::uint32_t m2 = 1; m2 < (1U << c); ++m2) {
                if (!big_enough(m2, c)) continue;
                const Rational sub(edges_in(m0, m1, m2),
                                   static_cast<long long>(std::popcount(m0) * std::popcount(m1) * std::popcount(m2)));
                if (half) {
                    if (sub < d) return false;
                } else {
                    Rational diff = sub - whole;
                    if (diff < 0) diff = -diff;
                    if (diff >= eps) return false;
                }
            }
        }
    }
    return true;
}

// Tol-feasible bin assignment by per-cycle backtracking with a dead-state
// memo keyed on (cycle index, per-bin sums, per-bin odd counts).
inline bool balance_feasible(const std::vector<std::int64_t>& targets, std::vector<int> lengths, std::int64_t tol,
                             int odd_cap) {
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    const std::size_t bins = targets.size();
    std::vector<std::int64_t> sum(bins, 0);
    std::vector<int> odd(bins, 0);
    std::vector<std::int64_t> rest(lengths.size() + 1, 0);
    for (std::size_t i = lengths.size(); i-- > 0;) rest[i] = rest[i + 1] + lengths[i];
    std::set<std::vector<std::int64_t>> dead;
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        std::int64_t need = 0;
        for (std::size_t b = 0; b < bins; ++b) need += std::max<std::int64_t>(0, targets[b] - tol - sum[b]);
        if (need > rest[i]) return false;
        if (i == lengths.size()) {
            for (std::size_t b = 0; b < bins; ++b) {
                if (sum[b] < targets[b] - tol || sum[b] > targets[b] + tol) return false;
            }
            return true;
        }
        std::vector<std::int64_t> key{static_cast<std::int64_t>(i)};
        key.insert(key.end(), sum.begin(), sum.end());
        key.insert(key.end(), odd.begin(), odd.end());
        if (dead.count(key)) return false;
        const int t = lengths[i];
        const bool is_odd = t % 4 == 2;
        for (std::size_t b = 0; b < bins; ++b) {
            if (sum[b] + t > targets[b] + tol) continue;
            if (is_odd && odd[b] + 1 > odd_cap) continue;
            sum[b] += t;
            odd[b] += is_odd;
            const bool ok = go(i + 1);
            sum[b] -= t;
            odd[b] -= is_odd;
            if (ok) return true;
        }
        dead.insert(key);
        return false;
    };
    return go(0);
}

// Loose cycle of order t inside `allowed`: fill slots in order, checking
// edges as they close.
inline bool cycle_exists(const ThreeGraph& host, int t, const std::vector<char>& allowed) {
    const int n = host.order();
    std::vector<Vertex> seq;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<bool()> grow = [&]() -> bool {
        const int s = static_cast<int>(seq.size());
        if (s == t) return host.has_edge(seq[static_cast<std::size_t>(t - 2)], seq[static_cast<std::size_t>(t - 1)], seq[0]);
        for (Vertex v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)] || !allowed[static_cast<std::size_t>(v)]) continue;
            // Rotate so the first vertex is the least junction.
            if (s > 0 && s % 2 == 0 && v < seq[0]) continue;
            if (s >= 2 && s % 2 == 0 && !host.has_edge(seq[static_cast<std::size_t>(s - 2)], seq[static_cast<std::size_t>(s - 1)], v)) continue;
            seq.push_back(v);
            used[static_cast<std::size_t>(v)] = 1;
            const bool done = grow();
            used[static_cast<std::size_t>(v)] = 0;
            seq.pop_back();
            if (done) return true;
        }
        return false;
    };
    return grow();
}

}  // namespace oracle
