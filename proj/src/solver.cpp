#include "loosecyc/solver.hpp"

#include "loosecyc/error.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

namespace loosecyc {

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::Timeout: return "timeout";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;
using CycleSink = std::function<bool(const std::vector<Vertex>&)>;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Backtracking core shared by every search. Callbacks return true to stop;
// a budget overrun also stops and sets timed_out().
class Searcher {
public:
    Searcher(const ThreeGraph& host, std::uint64_t budget) : host_(host), budget_(budget) {}

    bool timed_out() const { return timed_out_; }
    void set_base_depth(int depth) { base_depth_ = depth; }
    int base_depth() const { return base_depth_; }

    SearchStats stats(Clock::time_point start, bool found) const {
        SearchStats s;
        s.nodes = nodes_;
        s.max_depth = max_depth_;
        s.ms = elapsed_ms(start);
        s.status = found ? SearchStatus::Found : timed_out_ ? SearchStatus::Timeout : SearchStatus::Exhausted;
        return s;
    }

    // Every loose cycle on t vertices whose least vertex is `anchor`, drawn
    // from `avail` (which must not contain the anchor). Each cycle is
    // reported once, listed with the anchor's edge first.
    bool cycles_at(Vertex anchor, int t, VertexSet& avail, const CycleSink& sink) {
        std::vector<Vertex> cur{anchor};
        // Anchor as a junction: orientation fixed by cur[1] < last vertex.
        if (extend(anchor, t / 2, anchor, true, avail, cur, sink)) return true;

        // Anchor as the middle vertex of edge (a, anchor, b) with a < b.
        for (Vertex a = avail.first(); a >= 0; a = avail.next(a + 1)) {
            const VertexSet bs = host_.neighbors(anchor, a) & avail;
            for (Vertex b = bs.next(a + 1); b >= 0; b = bs.next(b + 1)) {
                if (!step(3)) return true;
                std::vector<Vertex> path{a, anchor, b};
                avail.erase(a);
                avail.erase(b);
                const bool stop = extend(b, t / 2 - 1, a, false, avail, path, sink);
                avail.insert(a);
                avail.insert(b);
                if (stop) return true;
            }
        }
        return false;
    }

    // Grows a loose path from junction `end` by `edges_left` edges, the last
    // of which closes onto `close_to`.
    bool extend(Vertex end, int edges_left, Vertex close_to, bool oriented, VertexSet& avail,
                std::vector<Vertex>& cur, const CycleSink& sink) {
        if (edges_left == 1) {
            const VertexSet ms = host_.neighbors(end, close_to) & avail;
            for (Vertex m = ms.first(); m >= 0; m = ms.next(m + 1)) {
                if (oriented && m < cur[1]) continue;
                if (!step(static_cast<int>(cur.size()) + 1)) return true;
                cur.push_back(m);
                avail.erase(m);
                const bool stop = sink(cur);
                avail.insert(m);
                cur.pop_back();
                if (stop) return true;
            }
            return false;
        }
        for (Vertex m = avail.first(); m >= 0; m = avail.next(m + 1)) {
            const VertexSet ys = host_.neighbors(end, m) & avail;
            if (ys.empty()) continue;
            avail.erase(m);
            cur.push_back(m);
            bool stop = false;
            for (Vertex y = ys.first(); y >= 0 && !stop; y = ys.next(y + 1)) {
                if (!step(static_cast<int>(cur.size()) + 1)) {
                    stop = true;
                    break;
                }
                cur.push_back(y);
                avail.erase(y);
                stop = extend(y, edges_left - 1, close_to, oriented, avail, cur, sink);
                avail.insert(y);
                cur.pop_back();
            }
            cur.pop_back();
            avail.insert(m);
            if (stop) return true;
        }
        return false;
    }

    // Loose path from `end` with `edges_left` more edges, finishing in `finish`.
    bool extend_path(Vertex end, int edges_left, const VertexSet& finish, VertexSet& avail, std::vector<Vertex>& cur,
                     std::optional<LoosePath>& out) {
        if (edges_left == 1) {
            const VertexSet ys = finish & avail;
            for (Vertex y = ys.first(); y >= 0; y = ys.next(y + 1)) {
                const VertexSet ms = host_.neighbors(end, y) & avail;
                const Vertex m = ms.first();
                if (m < 0) continue;
                if (!step(static_cast<int>(cur.size()) + 2)) return true;
                auto vertices = cur;
                vertices.push_back(m);
                vertices.push_back(y);
                out = LoosePath::from_vertices(std::move(vertices));
                return true;
            }
            return false;
        }
        for (Vertex m = avail.first(); m >= 0; m = avail.next(m + 1)) {
            const VertexSet ys = host_.neighbors(end, m) & avail;
            if (ys.empty()) continue;
            avail.erase(m);
            cur.push_back(m);
            bool stop = false;
            for (Vertex y = ys.first(); y >= 0 && !stop; y = ys.next(y + 1)) {
                if (!step(static_cast<int>(cur.size()) + 1)) {
                    stop = true;
                    break;
                }
                cur.push_back(y);
                avail.erase(y);
                stop = extend_path(y, edges_left - 1, finish, avail, cur, out);
                avail.insert(y);
                cur.pop_back();
            }
            cur.pop_back();
            avail.insert(m);
            if (stop) return true;
        }
        return false;
    }

    bool step(int depth) {
        if (nodes_ >= budget_) {
            timed_out_ = true;
            return false;
        }
        ++nodes_;
        max_depth_ = std::max(max_depth_, base_depth_ + depth);
        return true;
    }

private:
    const ThreeGraph& host_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int max_depth_ = 0;
    int base_depth_ = 0;
    bool timed_out_ = false;
};

// Spanning search; `on_complete` gets the cycles in placement order and
// returns true to stop.
class SpanningSearch {
public:
    SpanningSearch(const ThreeGraph& host, const CycleFamilySpec& spec, std::uint64_t budget)
        : host_(host), searcher_(host, budget), avail_(VertexSet::full(host.order())) {
        if (spec.order() != host.order()) {
            throw InvalidInput("family order " + std::to_string(spec.order()) + " differs from host order " +
                               std::to_string(host.order()));
        }
        for (int t : spec.lengths()) ++remaining_[t];
    }

    Searcher& searcher() { return searcher_; }

    bool run(const std::function<bool(const std::vector<std::vector<Vertex>>&)>& on_complete) {
        on_complete_ = &on_complete;
        return place_next();
    }

private:
    bool place_next() {
        const Vertex u = avail_.first();
        if (u < 0) return (*on_complete_)(placed_);
        avail_.erase(u);
        bool stop = false;
        for (auto& [length, left] : remaining_) {
            if (left == 0) continue;
            --left;
            stop = searcher_.cycles_at(u, length, avail_, [&](const std::vector<Vertex>& cyc) {
                placed_.push_back(cyc);
                searcher_.set_base_depth(searcher_.base_depth() + static_cast<int>(cyc.size()));
                const bool s = place_next();
                searcher_.set_base_depth(searcher_.base_depth() - static_cast<int>(cyc.size()));
                placed_.pop_back();
                return s;
            });
            ++left;
            if (stop) break;
        }
        avail_.insert(u);
        return stop;
    }

    const ThreeGraph& host_;
    Searcher searcher_;
    VertexSet avail_;
    std::map<int, int, std::greater<>> remaining_;
    std::vector<std::vector<Vertex>> placed_;
    const std::function<bool(const std::vector<std::vector<Vertex>>&)>* on_complete_ = nullptr;
};

Embedding to_embedding(const CycleFamilySpec& spec, const std::vector<std::vector<Vertex>>& cycles) {
    Embedding emb;
    std::vector<char> taken(cycles.size(), 0);
    for (int t : spec.lengths()) {
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            if (!taken[c] && static_cast<int>(cycles[c].size()) == t) {
                taken[c] = 1;
                emb.cycles.push_back(LooseCycle::from_vertices(cycles[c]).canonical());
                break;
            }
        }
    }
    return emb;
}

void check_capacity(const ThreeGraph& host, const VertexSet& s, const char* what) {
    if (s.capacity() != host.order()) {
        throw InvalidInput(std::string(what) + " vertex set does not match the host order");
    }
}

}  // namespace

SpanningResult solve_spanning(const ThreeGraph& host, const CycleFamilySpec& spec, std::uint64_t budget) {
    const auto start = Clock::now();
    SpanningSearch search(host, spec, budget);
    SpanningResult result;
    search.run([&](const std::vector<std::vector<Vertex>>& cycles) {
        result.embedding = to_embedding(spec, cycles);
        return true;
    });
    result.stats = search.searcher().stats(start, result.embedding.has_value());
    return result;
}

SpanningCount count_spanning(const ThreeGraph& host, const CycleFamilySpec& spec, std::uint64_t budget,
                             std::size_t keep) {
    const auto start = Clock::now();
    SpanningSearch search(host, spec, budget);
    SpanningCount result;
    search.run([&](const std::vector<std::vector<Vertex>>& cycles) {
        ++result.count;
        if (result.examples.size() < keep) result.examples.push_back(to_embedding(spec, cycles));
        return false;
    });
    result.stats = search.searcher().stats(start, result.count > 0);
    // An interrupted enumeration is a timeout even when copies were found.
    if (search.searcher().timed_out()) result.stats.status = SearchStatus::Timeout;
    return result;
}

CycleSearch find_loose_cycle(const ThreeGraph& host, int t, const VertexSet& allowed, std::uint64_t budget) {
    if (t < 6 || t % 2 != 0) throw InvalidInput("loose cycle order must be even and >= 6");
    check_capacity(host, allowed, "allowed");
    const auto start = Clock::now();
    Searcher searcher(host, budget);
    CycleSearch result;
    if (allowed.count() < t) {
        result.stats = searcher.stats(start, false);
        return result;
    }

    // Greedy: take the first extension at every step, then try to close.
    for (Vertex u = allowed.first(); u >= 0 && !result.cycle; u = allowed.next(u + 1)) {
        VertexSet avail = allowed;
        avail.erase(u);
        std::vector<Vertex> path{u};
        Vertex end = u;
        bool stuck = false;
        for (int e = 1; e < t / 2 && !stuck; ++e) {
            stuck = true;
            for (Vertex m = avail.first(); m >= 0; m = avail.next(m + 1)) {
                const Vertex y = (host.neighbors(end, m) & avail).first();
                if (y < 0) continue;
                if (!searcher.step(static_cast<int>(path.size()) + 2)) break;
                path.push_back(m);
                path.push_back(y);
                avail.erase(m);
                avail.erase(y);
                end = y;
                stuck = false;
                break;
            }
        }
        if (searcher.timed_out()) break;
        if (stuck) continue;
        const Vertex closing = (host.neighbors(end, u) & avail).first();
        if (closing < 0) continue;
        path.push_back(closing);
        result.cycle = LooseCycle::from_vertices(std::move(path)).canonical();
    }

    if (!result.cycle && !searcher.timed_out()) {
        VertexSet avail = allowed;
        for (Vertex u = allowed.first(); u >= 0; u = allowed.next(u + 1)) {
            avail.erase(u);
            if (avail.count() + 1 < t) break;
            const bool stop = searcher.cycles_at(u, t, avail, [&](const std::vector<Vertex>& cyc) {
                result.cycle = LooseCycle::from_vertices(cyc).canonical();
                return true;
            });
            if (stop) break;
        }
    }
    result.stats = searcher.stats(start, result.cycle.has_value());
    return result;
}

PathSearch find_loose_path(const ThreeGraph& host, int edges, const VertexSet& start_set, const VertexSet& end_set,
                           const VertexSet& allowed, std::uint64_t budget) {
    if (edges < 1) throw InvalidInput("loose path needs at least one edge");
    check_capacity(host, start_set, "start");
    check_capacity(host, end_set, "end");
    check_capacity(host, allowed, "allowed");
    const auto start = Clock::now();
    Searcher searcher(host, budget);
    PathSearch result;
    const VertexSet starts = start_set & allowed;
    const VertexSet finish = end_set & allowed;
    for (Vertex s = starts.first(); s >= 0 && !result.path; s = starts.next(s + 1)) {
        if (!searcher.step(1)) break;
        VertexSet avail = allowed;
        avail.erase(s);
        std::vector<Vertex> cur{s};
        if (searcher.extend_path(s, edges, finish, avail, cur, result.path)) break;
    }
    result.stats = searcher.stats(start, result.path.has_value());
    return result;
}

std::vector<PancyclicEntry> greedy_pancyclic_report(const ThreeGraph& host, std::uint64_t budget_per_q) {
    std::vector<PancyclicEntry> out;
    const VertexSet all = VertexSet::full(host.order());
    for (int q = 6; q <= host.order(); q += 2) {
        auto r = find_loose_cycle(host, q, all, budget_per_q);
        out.push_back({q, r.stats.status, r.cycle});
    }
    return out;
}

std::vector<PathFeasibility> path_feasibility_table(const ThreeGraph& host, const std::vector<VertexSet>& parts,
                                                    int max_edges, std::uint64_t budget) {
    VertexSet allowed(host.order());
    for (const auto& p : parts) {
        check_capacity(host, p, "part");
        allowed |= p;
    }
    std::vector<PathFeasibility> out;
    for (int len = 1; len <= max_edges; ++len) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (std::size_t j = i; j < parts.size(); ++j) {
                auto r = find_loose_path(host, len, parts[i], parts[j], allowed, budget);
                out.push_back({len, static_cast<int>(i), static_cast<int>(j), r.stats.status});
            }
        }
    }
    return out;
}

}  // namespace loosecyc
