#include "loosecyc/hypercore.hpp"

#include "loosecyc/error.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace loosecyc {

// ---------------------------------------------------------------- VertexSet

VertexSet VertexSet::full(int capacity) {
    VertexSet s(capacity);
    for (Vertex v = 0; v < capacity; ++v) s.insert(v);
    return s;
}

VertexSet VertexSet::of(int capacity, std::span<const Vertex> members) {
    VertexSet s(capacity);
    for (Vertex v : members) s.insert(v);
    return s;
}

int VertexSet::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

Vertex VertexSet::next(Vertex from) const {
    if (from >= capacity_) return -1;
    std::size_t i = static_cast<std::size_t>(from >> 6);
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (w != 0) return static_cast<Vertex>(i * 64 + std::countr_zero(w));
        if (++i == words_.size()) return -1;
        w = words_[i];
    }
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for (Vertex v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & other.words_[i]) return true;
    }
    return false;
}

int VertexSet::intersection_count(const VertexSet& other) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

// ------------------------------------------------------------------- Triple

Triple Triple::sorted(Vertex a, Vertex b, Vertex c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return {a, b, c};
}

std::ostream& operator<<(std::ostream& os, const Triple& t) {
    return os << '{' << t.u << ',' << t.v << ',' << t.w << '}';
}

// --------------------------------------------------------------- ThreeGraph

ThreeGraph::ThreeGraph(int n, std::vector<Triple> edges) : n_(n) {
    if (n < 0) throw InvalidInput("negative vertex count");
    for (auto& e : edges) {
        for (Vertex x : {e.u, e.v, e.w}) {
            if (x < 0 || x >= n) {
                std::ostringstream msg;
                msg << "edge " << e << " has vertex out of range 0.." << n - 1;
                throw InvalidInput(msg.str());
            }
        }
        e = Triple::sorted(e.u, e.v, e.w);
        if (e.u == e.v || e.v == e.w) {
            std::ostringstream msg;
            msg << "edge " << e << " repeats a vertex";
            throw InvalidInput(msg.str());
        }
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
        std::ostringstream msg;
        msg << "duplicate edge " << *dup;
        throw InvalidInput(msg.str());
    }
    edges_ = std::move(edges);

    const std::size_t pairs = n > 1 ? static_cast<std::size_t>(n) * (n - 1) / 2 : 0;
    pair_index_.assign(pairs, VertexSet(n));
    degrees_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& e : edges_) {
        pair_index_[pair_slot(e.u, e.v)].insert(e.w);
        pair_index_[pair_slot(e.u, e.w)].insert(e.v);
        pair_index_[pair_slot(e.v, e.w)].insert(e.u);
        ++degrees_[e.u];
        ++degrees_[e.v];
        ++degrees_[e.w];
    }
}

std::size_t ThreeGraph::pair_slot(Vertex u, Vertex v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw InvalidInput("codegree needs two distinct in-range vertices");
    }
    if (u > v) std::swap(u, v);
    const auto uu = static_cast<std::size_t>(u);
    const auto nn = static_cast<std::size_t>(n_);
    return uu * (2 * nn - uu - 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

bool ThreeGraph::has_edge(Vertex a, Vertex b, Vertex c) const {
    if (a == b || b == c || a == c) return false;
    return neighbors(a, b).contains(c);
}

const VertexSet& ThreeGraph::neighbors(Vertex u, Vertex v) const {
    return pair_index_[pair_slot(u, v)];
}

int ThreeGraph::codegree(Vertex u, Vertex v) const { return neighbors(u, v).count(); }

int ThreeGraph::min_codegree() const {
    if (pair_index_.empty()) return 0;
    int best = n_;
    for (const auto& s : pair_index_) best = std::min(best, s.count());
    return best;
}

ThreeGraph complete_graph(int n) {
    std::vector<Triple> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) edges.push_back({a, b, c});
    return ThreeGraph(n, std::move(edges));
}

ThreeGraph empty_graph(int n) { return ThreeGraph(n, {}); }

ThreeGraph disjoint_union(const ThreeGraph& a, const ThreeGraph& b) {
    auto edges = a.edges();
    const int shift = a.order();
    for (const auto& e : b.edges()) edges.push_back({e.u + shift, e.v + shift, e.w + shift});
    return ThreeGraph(a.order() + b.order(), std::move(edges));
}

// ---------------------------------------------------------- CycleFamilySpec

CycleFamilySpec family_from_lengths(std::vector<int> lengths) {
    if (lengths.empty()) throw InvalidInput("cycle family is empty");
    CycleFamilySpec spec;
    for (int t : lengths) {
        if (t < 6 || t % 2 != 0) {
            throw InvalidInput("loose cycle order " + std::to_string(t) +
                               " is not an even number >= 6");
        }
        spec.n_ += t;
        if (CycleFamilySpec::is_odd_cycle(t)) ++spec.k_;
    }
    spec.lengths_ = std::move(lengths);
    return spec;
}

CycleFamilySpec parse_family(const std::string& text) {
    std::vector<int> lengths;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidInput("bad cycle order '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos) {
            throw InvalidInput("bad cycle order '" + item + "'");
        }
        lengths.push_back(value);
    }
    return family_from_lengths(std::move(lengths));
}

std::string format_family(const CycleFamilySpec& spec, char sep) {
    std::string out;
    for (int t : spec.lengths()) {
        if (!out.empty()) out += sep;
        out += std::to_string(t);
    }
    return out;
}

int cover_number(const CycleFamilySpec& spec) {
    int total = 0;
    for (int t : spec.lengths()) total += CycleFamilySpec::is_odd_cycle(t) ? (t + 2) / 4 : t / 4;
    return total;
}

std::vector<CycleFamilySpec> families_of_order(int n) {
    std::vector<CycleFamilySpec> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(family_from_lengths(parts));
            return;
        }
        for (int t = std::min(max_part, remaining); t >= 6; t -= 2) {
            if (t % 2 != 0) continue;
            parts.push_back(t);
            rec(remaining - t, t);
            parts.pop_back();
        }
    };
    if (n >= 6 && n % 2 == 0) rec(n, n);
    return out;
}

// -------------------------------------------------------- LooseCycle / Path

namespace {

void require_distinct(const std::vector<Vertex>& vs, const char* what) {
    std::vector<Vertex> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidInput(std::string(what) + " repeats a vertex");
    }
    if (!sorted.empty() && sorted.front() < 0) throw InvalidInput(std::string(what) + " has a negative vertex");
}

}  // namespace

LooseCycle LooseCycle::from_vertices(std::vector<Vertex> vertices) {
    if (vertices.size() < 6 || vertices.size() % 2 != 0) {
        throw InvalidInput("loose cycle needs an even number >= 6 of vertices");
    }
    require_distinct(vertices, "loose cycle");
    LooseCycle c;
    c.vertices_ = std::move(vertices);
    return c;
}

std::vector<Triple> LooseCycle::edges() const {
    std::vector<Triple> out;
    const std::size_t t = vertices_.size();
    for (std::size_t i = 0; i < t; i += 2) {
        out.push_back(Triple::sorted(vertices_[i], vertices_[i + 1], vertices_[(i + 2) % t]));
    }
    return out;
}

LooseCycle LooseCycle::canonical() const {
    const std::size_t t = vertices_.size();
    std::vector<Vertex> best = vertices_;
    std::vector<Vertex> candidate(t);
    for (std::size_t shift = 0; shift < t; shift += 2) {
        for (std::size_t i = 0; i < t; ++i) candidate[i] = vertices_[(shift + i) % t];
        best = std::min(best, candidate);
        // Reflection through the junction at `shift`.
        for (std::size_t i = 0; i < t; ++i) candidate[i] = vertices_[(shift + t - i) % t];
        best = std::min(best, candidate);
    }
    LooseCycle c;
    c.vertices_ = std::move(best);
    return c;
}

LoosePath LoosePath::from_vertices(std::vector<Vertex> vertices) {
    if (vertices.size() < 3 || vertices.size() % 2 != 1) {
        throw InvalidInput("loose path needs an odd number >= 3 of vertices");
    }
    require_distinct(vertices, "loose path");
    LoosePath p;
    p.vertices_ = std::move(vertices);
    return p;
}

std::vector<Triple> LoosePath::edges() const {
    std::vector<Triple> out;
    for (std::size_t i = 0; i + 2 < vertices_.size(); i += 2) {
        out.push_back(Triple::sorted(vertices_[i], vertices_[i + 1], vertices_[i + 2]));
    }
    return out;
}

// ---------------------------------------------------------------- Embedding

EmbeddingReport verify_embedding(const ThreeGraph& host, const CycleFamilySpec& spec,
                                 const Embedding& emb, bool spanning) {
    auto fail = [](std::string msg) { return EmbeddingReport{false, std::move(msg)}; };
    if (emb.cycles.size() != spec.cycle_count()) {
        return fail("embedding has " + std::to_string(emb.cycles.size()) + " cycles, family has " +
                    std::to_string(spec.cycle_count()));
    }
    std::vector<char> used(static_cast<std::size_t>(host.order()), 0);
    int placed = 0;
    for (std::size_t i = 0; i < emb.cycles.size(); ++i) {
        const auto& cyc = emb.cycles[i];
        if (cyc.order() != spec.lengths()[i]) {
            return fail("cycle " + std::to_string(i) + " has order " + std::to_string(cyc.order()) +
                        ", expected " + std::to_string(spec.lengths()[i]));
        }
        for (Vertex v : cyc.vertices()) {
            if (v < 0 || v >= host.order()) return fail("vertex " + std::to_string(v) + " is not in the host");
            if (used[v]) return fail("vertex " + std::to_string(v) + " is used twice");
            used[v] = 1;
            ++placed;
        }
        for (const auto& e : cyc.edges()) {
            if (!host.has_edge(e.u, e.v, e.w)) {
                std::ostringstream msg;
                msg << "missing edge " << e << " of cycle " << i;
                return fail(msg.str());
            }
        }
    }
    if (spanning && placed != host.order()) {
        return fail("embedding covers " + std::to_string(placed) + " of " +
                    std::to_string(host.order()) + " vertices");
    }
    return {};
}

// ----------------------------------------------------------------------- IO

ThreeGraph read_h3(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::optional<int> n;
    std::vector<Triple> edges;
    auto bad = [&](const std::string& why) {
        return InvalidInput("h3 line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "n") {
            if (n) throw bad("second 'n' line");
            int value = -1;
            if (!(fields >> value) || value < 0) throw bad("expected 'n <N>'");
            n = value;
        } else if (tag == "e") {
            if (!n) throw bad("edge before 'n' line");
            Triple t;
            if (!(fields >> t.u >> t.v >> t.w)) throw bad("expected 'e <u> <v> <w>'");
            if (!(t.u < t.v && t.v < t.w)) throw bad("edge vertices must satisfy u < v < w");
            edges.push_back(t);
        } else {
            throw bad("unknown record '" + tag + "'");
        }
        std::string rest;
        if (fields >> rest) throw bad("trailing text '" + rest + "'");
    }
    if (!n) throw InvalidInput("h3 input has no 'n' line");
    return ThreeGraph(*n, std::move(edges));
}

void write_h3(std::ostream& out, const ThreeGraph& graph) {
    out << "n " << graph.order() << '\n';
    for (const auto& e : graph.edges()) out << "e " << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

ThreeGraph load_h3(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return read_h3(in);
}

void save_h3(const std::string& path, const ThreeGraph& graph) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    write_h3(out, graph);
}

}  // namespace loosecyc
