#include "loosecyc/regularity.hpp"

#include "loosecyc/error.hpp"
#include "loosecyc/rng.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <numeric>

namespace loosecyc {

TripartiteView::TripartiteView(const ThreeGraph& host, Parts parts) : host_(&host), parts_(std::move(parts)) {
    VertexSet seen(host.order());
    for (auto& part : parts_) {
        std::sort(part.begin(), part.end());
        for (Vertex v : part) {
            if (v < 0 || v >= host.order()) throw InvalidInput("part vertex " + std::to_string(v) + " out of range");
            if (seen.contains(v)) throw InvalidInput("vertex " + std::to_string(v) + " appears twice in the parts");
            seen.insert(v);
        }
    }
}

namespace {

VertexSet set_of(const ThreeGraph& host, const std::vector<Vertex>& vs) { return VertexSet::of(host.order(), vs); }

std::int64_t crossing_edges(const ThreeGraph& host, const TripartiteView::Parts& parts) {
    const VertexSet third = set_of(host, parts[2]);
    std::int64_t e = 0;
    for (Vertex x : parts[0]) {
        for (Vertex y : parts[1]) {
            if (x == y) continue;
            e += host.neighbors(x, y).intersection_count(third);
        }
    }
    return e;
}

// Small exact fraction for the inner loops.
struct Frac {
    __int128 num = 0;
    __int128 den = 1;
};

Frac to_frac(const Rational& r, const char* what) {
    const BigInt limit = BigInt(1) << 40;
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (boost::multiprecision::abs(num) >= limit || den >= limit) {
        throw InvalidInput(std::string(what) + " has too large a numerator or denominator");
    }
    return {num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>()};
}

int ceil_times(const Rational& r, int size) { return static_cast<int>(ceil_of(r * size).convert_to<long long>()); }

bool is_super(RegularityMode m) { return m == RegularityMode::Super || m == RegularityMode::HalfSuper; }
bool is_half(RegularityMode m) { return m == RegularityMode::Half || m == RegularityMode::HalfSuper; }

class Checker {
public:
    Checker(const TripartiteView& view, const Rational& eps, const Rational& d, RegularityMode mode)
        : view_(view), host_(view.host()), mode_(mode), eps_(to_frac(eps, "eps")), d_(to_frac(d, "d")) {
        // Enumerate the two smallest parts; the largest is covered per choice.
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return view.part_size(a) < view.part_size(b); });
        for (int i = 0; i < 3; ++i) {
            local_[static_cast<std::size_t>(i)] = view.part(order_[static_cast<std::size_t>(i)]);
            min_size_[static_cast<std::size_t>(i)] = ceil_times(eps, size(i));
        }
        total_edges_ = view.edge_count();
        total_ = static_cast<__int128>(size(0)) * size(1) * size(2);
    }

    int size(int i) const { return static_cast<int>(local_[static_cast<std::size_t>(i)].size()); }

    std::optional<RegularityWitness> whole_triple() const {
        if (mode_ != RegularityMode::Regular && mode_ != RegularityMode::Super) return std::nullopt;
        if (total_edges_ * d_.den >= d_.num * total_) return std::nullopt;
        RegularityWitness w;
        w.kind = "density";
        w.subtriple = view_.parts();
        w.value = Rational(total_edges_, static_cast<long long>(total_));
        return w;
    }

    std::optional<RegularityWitness> degrees() const {
        if (!is_super(mode_)) return std::nullopt;
        for (int i = 0; i < 3; ++i) {
            for (Vertex x : view_.part(i)) {
                const std::int64_t deg = view_.degree(i, x);
                if (static_cast<__int128>(deg) * view_.part_size(i) * d_.den < d_.num * total_) {
                    RegularityWitness w;
                    w.kind = "degree";
                    w.part = i;
                    w.vertex = x;
                    w.value = Rational(deg);
                    return w;
                }
            }
        }
        return std::nullopt;
    }

    // Weights w[z] = e(S0, S1, {z}); every admissible S2 is judged through
    // the s smallest and s largest weights for each size s.
    std::optional<RegularityWitness> judge(const std::vector<int>& s0, const std::vector<int>& s1,
                                           std::vector<std::int64_t> weight) const {
        const int n2 = size(2);
        std::vector<int> idx(static_cast<std::size_t>(n2));
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return weight[a] < weight[b]; });
        std::int64_t low = 0;
        std::int64_t high = 0;
        for (int s = 1; s <= n2; ++s) {
            low += weight[static_cast<std::size_t>(idx[static_cast<std::size_t>(s - 1)])];
            high += weight[static_cast<std::size_t>(idx[static_cast<std::size_t>(n2 - s)])];
            if (s < min_size_[2]) continue;
            const __int128 pairs = static_cast<__int128>(s0.size()) * static_cast<__int128>(s1.size()) * s;
            int bad = 0;  // 1: smallest-weight choice fails, 2: largest-weight choice fails
            if (is_half(mode_)) {
                if (low * d_.den < d_.num * pairs) bad = 1;
            } else {
                auto off = [&](std::int64_t e) {
                    __int128 diff = static_cast<__int128>(e) * total_ - static_cast<__int128>(total_edges_) * pairs;
                    if (diff < 0) diff = -diff;
                    return diff * eps_.den >= eps_.num * pairs * total_;
                };
                if (off(low)) bad = 1;
                else if (off(high)) bad = 2;
            }
            if (bad == 0) continue;
            std::vector<int> s2;
            for (int j = 0; j < s; ++j) {
                s2.push_back(bad == 1 ? idx[static_cast<std::size_t>(j)] : idx[static_cast<std::size_t>(n2 - 1 - j)]);
            }
            RegularityWitness w;
            w.kind = "subtriple";
            const std::array<const std::vector<int>*, 3> picks{&s0, &s1, &s2};
            for (int i = 0; i < 3; ++i) {
                auto& out = w.subtriple[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])];
                for (int li : *picks[static_cast<std::size_t>(i)]) {
                    out.push_back(local_[static_cast<std::size_t>(i)][static_cast<std::size_t>(li)]);
                }
                std::sort(out.begin(), out.end());
            }
            w.value = Rational(bad == 1 ? low : high, static_cast<long long>(pairs));
            return w;
        }
        return std::nullopt;
    }

    RegularityVerdict exhaustive() const {
        RegularityVerdict out;
        out.exhaustive = true;
        const int n0 = size(0);
        const int n1 = size(1);
        const int n2 = size(2);
        // adj[y][z]: bitmask over S0-local x with {x, y, z} a crossing edge.
        std::vector<std::uint64_t> adj(static_cast<std::size_t>(n1 * n2), 0);
        const auto& v0 = local_[0];
        const auto& v1 = local_[1];
        const auto& v2 = local_[2];
        for (int x = 0; x < n0; ++x) {
            for (int y = 0; y < n1; ++y) {
                const auto& nb = host_.neighbors(v0[static_cast<std::size_t>(x)], v1[static_cast<std::size_t>(y)]);
                for (int z = 0; z < n2; ++z) {
                    if (nb.contains(v2[static_cast<std::size_t>(z)])) {
                        adj[static_cast<std::size_t>(y * n2 + z)] |= std::uint64_t{1} << x;
                    }
                }
            }
        }
        std::vector<std::int64_t> row(static_cast<std::size_t>(n1 * n2));
        std::vector<std::int64_t> weight(static_cast<std::size_t>(n2));
        for (std::uint64_t m0 = 1; m0 < (std::uint64_t{1} << n0); ++m0) {
            if (std::popcount(m0) < min_size_[0]) continue;
            for (std::size_t c = 0; c < row.size(); ++c) row[c] = std::popcount(adj[c] & m0);
            for (std::uint64_t m1 = 1; m1 < (std::uint64_t{1} << n1); ++m1) {
                if (std::popcount(m1) < min_size_[1]) continue;
                ++out.pairs_examined;
                std::fill(weight.begin(), weight.end(), 0);
                for (int y = 0; y < n1; ++y) {
                    if (!((m1 >> y) & 1U)) continue;
                    for (int z = 0; z < n2; ++z) weight[static_cast<std::size_t>(z)] += row[static_cast<std::size_t>(y * n2 + z)];
                }
                if (auto w = judge(bits(m0, n0), bits(m1, n1), weight)) {
                    out.verdict = Verdict::Violated;
                    out.witness = std::move(w);
                    return out;
                }
            }
        }
        return out;
    }

    RegularityVerdict sampled(std::uint64_t seed, std::uint64_t samples) const {
        RegularityVerdict out;
        out.verdict = Verdict::Inconclusive;
        Rng rng(seed);
        const VertexSet third = set_of(host_, local_[2]);
        std::vector<int> pos2(static_cast<std::size_t>(host_.order()), -1);
        for (int z = 0; z < size(2); ++z) pos2[static_cast<std::size_t>(local_[2][static_cast<std::size_t>(z)])] = z;
        std::array<std::vector<int>, 2> pool;
        for (int i = 0; i < 2; ++i) {
            pool[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(size(i)));
            std::iota(pool[static_cast<std::size_t>(i)].begin(), pool[static_cast<std::size_t>(i)].end(), 0);
        }
        std::vector<std::int64_t> weight(static_cast<std::size_t>(size(2)));
        for (std::uint64_t t = 0; t < samples; ++t) {
            std::array<std::vector<int>, 2> pick;
            for (int i = 0; i < 2; ++i) {
                auto& p = pool[static_cast<std::size_t>(i)];
                rng.shuffle(std::span<int>(p));
                const int lo = min_size_[static_cast<std::size_t>(i)];
                const int len = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(size(i) - lo + 1)));
                pick[static_cast<std::size_t>(i)].assign(p.begin(), p.begin() + len);
                std::sort(pick[static_cast<std::size_t>(i)].begin(), pick[static_cast<std::size_t>(i)].end());
            }
            ++out.pairs_examined;
            std::fill(weight.begin(), weight.end(), 0);
            for (int x : pick[0]) {
                for (int y : pick[1]) {
                    const VertexSet nb = host_.neighbors(local_[0][static_cast<std::size_t>(x)],
                                                         local_[1][static_cast<std::size_t>(y)]) &
                                         third;
                    for (Vertex z = nb.first(); z >= 0; z = nb.next(z + 1)) ++weight[static_cast<std::size_t>(pos2[static_cast<std::size_t>(z)])];
                }
            }
            if (auto w = judge(pick[0], pick[1], weight)) {
                out.verdict = Verdict::Violated;
                out.witness = std::move(w);
                return out;
            }
        }
        return out;
    }

private:
    static std::vector<int> bits(std::uint64_t mask, int n) {
        std::vector<int> out;
        for (int i = 0; i < n; ++i) {
            if ((mask >> i) & 1U) out.push_back(i);
        }
        return out;
    }

    const TripartiteView& view_;
    const ThreeGraph& host_;
    RegularityMode mode_;
    Frac eps_;
    Frac d_;
    std::array<int, 3> order_{};
    std::array<std::vector<Vertex>, 3> local_;
    std::array<int, 3> min_size_{};
    std::int64_t total_edges_ = 0;
    __int128 total_ = 0;
};

}  // namespace

std::int64_t TripartiteView::edge_count() const { return crossing_edges(*host_, parts_); }

std::int64_t TripartiteView::degree(int i, Vertex x) const {
    const auto& a = parts_[static_cast<std::size_t>((i + 1) % 3)];
    const VertexSet b = set_of(*host_, parts_[static_cast<std::size_t>((i + 2) % 3)]);
    std::int64_t deg = 0;
    for (Vertex y : a) deg += host_->neighbors(x, y).intersection_count(b);
    return deg;
}

Rational density(const ThreeGraph& host, const TripartiteView::Parts& parts) {
    for (const auto& p : parts) {
        if (p.empty()) throw InvalidInput("density of a triple with an empty part");
    }
    const std::int64_t total = static_cast<std::int64_t>(parts[0].size() * parts[1].size() * parts[2].size());
    return Rational(crossing_edges(host, parts), total);
}

Rational density(const TripartiteView& view) { return density(view.host(), view.parts()); }

std::string to_string(RegularityMode m) {
    switch (m) {
        case RegularityMode::Regular: return "regular";
        case RegularityMode::Half: return "half";
        case RegularityMode::Super: return "super";
        case RegularityMode::HalfSuper: return "half-super";
    }
    return "?";
}

RegularityMode parse_regularity_mode(const std::string& text) {
    for (auto m : {RegularityMode::Regular, RegularityMode::Half, RegularityMode::Super, RegularityMode::HalfSuper}) {
        if (to_string(m) == text) return m;
    }
    throw InvalidInput("unknown regularity mode '" + text + "'");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

RegularityVerdict check_regular(const TripartiteView& view, const Rational& eps, const Rational& d,
                                RegularityMode mode, std::uint64_t budget, std::uint64_t seed,
                                std::uint64_t samples) {
    if (eps <= 0 || eps >= 1) throw InvalidInput("eps must lie strictly between 0 and 1");
    for (int i = 0; i < 3; ++i) {
        if (view.part_size(i) == 0) throw InvalidInput("regularity check on an empty part");
    }
    const Checker checker(view, eps, d, mode);
    const int bits = view.part_size(0) + view.part_size(1) + view.part_size(2);
    const bool exhaustive = bits < 63 && (std::uint64_t{1} << bits) <= budget;

    RegularityVerdict out;
    out.exhaustive = exhaustive;
    if (auto w = checker.whole_triple()) {
        out.verdict = Verdict::Violated;
        out.witness = std::move(w);
        return out;
    }
    if (auto w = checker.degrees()) {
        out.verdict = Verdict::Violated;
        out.witness = std::move(w);
        return out;
    }
    return exhaustive ? checker.exhaustive() : checker.sampled(seed, samples);
}

PruneResult prune_to_superregular(const TripartiteView& view, const Rational& eps, const Rational& d) {
    if (eps <= 0 || eps >= 1) throw InvalidInput("eps must lie strictly between 0 and 1");
    TripartiteView::Parts kept;
    std::array<std::vector<Vertex>, 3> low;
    for (int i = 0; i < 3; ++i) {
        const int others = view.part_size((i + 1) % 3) * view.part_size((i + 2) % 3);
        const Rational threshold = (d - 3 * eps) * others;
        std::vector<std::pair<std::int64_t, Vertex>> ranked;
        for (Vertex x : view.part(i)) {
            const std::int64_t deg = view.degree(i, x);
            if (Rational(deg) < threshold) {
                low[static_cast<std::size_t>(i)].push_back(x);
            } else {
                ranked.emplace_back(deg, x);
            }
        }
        const int size = view.part_size(i);
        if (Rational(static_cast<long long>(low[static_cast<std::size_t>(i)].size())) >= eps * size) {
            throw ClaimViolation("part " + std::to_string(i + 1) + " has " +
                                 std::to_string(low[static_cast<std::size_t>(i)].size()) +
                                 " low-degree vertices, at least eps*|V_i|; the input is not regular");
        }
        const auto keep = static_cast<std::size_t>(floor_of((1 - eps) * size).convert_to<long long>());
        std::sort(ranked.begin(), ranked.end(),
                  [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
        auto& part = kept[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < keep; ++j) part.push_back(ranked[j].second);
    }
    return {TripartiteView(view.host(), std::move(kept)), std::move(low)};
}

ApqGadget build_apq(int p, int q) {
    if (p < 1 || q <= p) throw InvalidInput("A^3(p,q) needs q > p >= 1");
    ApqGadget g;
    g.p = p;
    g.q = q;
    for (int j = 0; j < q - p; ++j) g.pairs.push_back({2 * j, 2 * j + 1});
    for (Vertex x = 2 * (q - p); x < 2 * q; ++x) g.hub.push_back(x);
    std::vector<Triple> edges;
    for (const auto& pr : g.pairs) {
        for (Vertex x : g.hub) edges.push_back(Triple::sorted(x, pr[0], pr[1]));
    }
    g.graph = ThreeGraph(2 * q, std::move(edges));
    return g;
}

std::vector<Vertex> ApqCopy::vertices() const {
    std::vector<Vertex> out(hub);
    for (const auto& pr : pairs) {
        out.push_back(pr[0]);
        out.push_back(pr[1]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

class TilingSearch {
public:
    TilingSearch(const ThreeGraph& host, int p, int q, int need, std::uint64_t budget)
        : host_(host), p_(p), q_(q), need_(need), budget_(budget), avail_(VertexSet::full(host.order())) {}

    bool run() { return place(-1); }
    const std::vector<ApqCopy>& copies() const { return copies_; }
    bool timed_out() const { return timed_out_; }
    std::uint64_t nodes() const { return nodes_; }
    int max_depth() const { return max_depth_; }

private:
    bool step() {
        if (nodes_ >= budget_) {
            timed_out_ = true;
            return false;
        }
        ++nodes_;
        return true;
    }

    // Copies are listed by increasing least vertex.
    bool place(Vertex prev_min) {
        if (static_cast<int>(copies_.size()) == need_) return true;
        VertexSet pool = avail_;
        for (Vertex v = 0; v <= prev_min; ++v) pool.erase(v);
        if (pool.count() < 2 * q_ * (need_ - static_cast<int>(copies_.size()))) return false;
        ApqCopy copy;
        return choose_pair(pool, VertexSet::full(host_.order()) & pool, -1, copy);
    }

    // cand: vertices still usable as hub for every pair chosen so far.
    bool choose_pair(VertexSet& pool, const VertexSet& cand, Vertex last_first, ApqCopy& copy) {
        if (static_cast<int>(copy.pairs.size()) == q_ - p_) {
            std::vector<Vertex> hub;
            return choose_hub(cand.members(), 0, hub, pool, copy);
        }
        for (Vertex a = pool.next(last_first + 1); a >= 0; a = pool.next(a + 1)) {
            for (Vertex b = pool.next(a + 1); b >= 0; b = pool.next(b + 1)) {
                VertexSet next = cand & host_.neighbors(a, b);
                next.erase(a);
                next.erase(b);
                if (next.count() < 2 * p_) continue;
                if (!step()) return true;
                pool.erase(a);
                pool.erase(b);
                copy.pairs.push_back({a, b});
                const bool stop = choose_pair(pool, next, a, copy);
                copy.pairs.pop_back();
                pool.insert(a);
                pool.insert(b);
                if (stop) return true;
            }
        }
        return false;
    }

    bool choose_hub(const std::vector<Vertex>& cand, std::size_t from, std::vector<Vertex>& hub, VertexSet& pool,
                    ApqCopy& copy) {
        if (static_cast<int>(hub.size()) == 2 * p_) {
            copy.hub = hub;
            Vertex least = hub.front();
            for (const auto& pr : copy.pairs) least = std::min(least, pr[0]);
            for (const auto& v : copy.vertices()) avail_.erase(v);
            copies_.push_back(copy);
            max_depth_ = std::max(max_depth_, static_cast<int>(copies_.size()));
            const bool done = place(least);
            if (!done) {
                copies_.pop_back();
                for (const auto& v : copy.vertices()) avail_.insert(v);
            }
            return done;
        }
        for (std::size_t i = from; i < cand.size(); ++i) {
            if (cand.size() - i < static_cast<std::size_t>(2 * p_) - hub.size()) break;
            if (!step()) return true;
            hub.push_back(cand[i]);
            const bool stop = choose_hub(cand, i + 1, hub, pool, copy);
            hub.pop_back();
            if (stop) return true;
        }
        return false;
    }

    const ThreeGraph& host_;
    int p_;
    int q_;
    int need_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int max_depth_ = 0;
    bool timed_out_ = false;
    VertexSet avail_;
    std::vector<ApqCopy> copies_;
};

}  // namespace

ApqTilingResult find_apq_tiling(const ThreeGraph& host, int p, int q, int min_cover, std::uint64_t budget) {
    if (p < 1 || q <= p) throw InvalidInput("A^3(p,q) needs q > p >= 1");
    const auto start = std::chrono::steady_clock::now();
    const int need = min_cover <= 0 ? 0 : (min_cover + 2 * q - 1) / (2 * q);
    ApqTilingResult result;
    TilingSearch search(host, p, q, need, budget);
    const bool stop = need * 2 * q <= host.order() && search.run();
    if (stop && !search.timed_out()) {
        ApqTiling tiling{search.copies(), static_cast<int>(search.copies().size()) * 2 * q};
        result.tiling = std::move(tiling);
    }
    result.stats.nodes = search.nodes();
    result.stats.max_depth = search.max_depth();
    result.stats.ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    result.stats.status = result.tiling ? SearchStatus::Found
                          : search.timed_out() ? SearchStatus::Timeout
                                               : SearchStatus::Exhausted;
    return result;
}

bool verify_apq_tiling(const ThreeGraph& host, int p, int q, const ApqTiling& tiling) {
    VertexSet used(host.order());
    for (const auto& copy : tiling.copies) {
        if (static_cast<int>(copy.pairs.size()) != q - p || static_cast<int>(copy.hub.size()) != 2 * p) return false;
        for (Vertex v : copy.vertices()) {
            if (v < 0 || v >= host.order() || used.contains(v)) return false;
            used.insert(v);
        }
        for (const auto& pr : copy.pairs) {
            for (Vertex x : copy.hub) {
                if (!host.has_edge(x, pr[0], pr[1])) return false;
            }
        }
    }
    return tiling.covered == used.count();
}

}  // namespace loosecyc
