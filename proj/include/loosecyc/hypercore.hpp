#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace loosecyc {

using Vertex = int;

/// Fixed-capacity set of vertices 0..capacity-1 backed by 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int capacity)
        : capacity_(capacity), words_(static_cast<std::size_t>((capacity + 63) / 64), 0) {}

    static VertexSet full(int capacity);
    static VertexSet of(int capacity, std::span<const Vertex> members);

    int capacity() const { return capacity_; }
    bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const;
    bool empty() const;
    // Smallest member >= from, or -1.
    Vertex next(Vertex from) const;
    Vertex first() const { return next(0); }
    std::vector<Vertex> members() const;

    bool intersects(const VertexSet& other) const;
    int intersection_count(const VertexSet& other) const;
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& subtract(const VertexSet& other);
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    bool operator==(const VertexSet&) const = default;

private:
    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Unordered triple stored with u < v < w.
struct Triple {
    Vertex u = 0;
    Vertex v = 0;
    Vertex w = 0;

    static Triple sorted(Vertex a, Vertex b, Vertex c);
    bool contains(Vertex x) const { return x == u || x == v || x == w; }
    auto operator<=>(const Triple&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Triple& t);

/// Immutable 3-uniform hypergraph on vertices 0..n-1 with a pair -> common
/// neighbour index. Safe to share between threads once built.
class ThreeGraph {
public:
    ThreeGraph() : ThreeGraph(0, {}) {}
    /// Throws InvalidInput on out-of-range or repeated vertices and on
    /// duplicate edges.
    ThreeGraph(int n, std::vector<Triple> edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Triple>& edges() const { return edges_; }

    bool has_edge(Vertex a, Vertex b, Vertex c) const;
    /// N(u,v) = { w : {u,v,w} is an edge }.
    const VertexSet& neighbors(Vertex u, Vertex v) const;
    int codegree(Vertex u, Vertex v) const;
    /// Minimum codegree over all pairs; 0 when there are fewer than two vertices.
    int min_codegree() const;
    int degree(Vertex v) const { return degrees_.at(static_cast<std::size_t>(v)); }

    bool operator==(const ThreeGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    std::size_t pair_slot(Vertex u, Vertex v) const;

    int n_ = 0;
    std::vector<Triple> edges_;
    std::vector<VertexSet> pair_index_;
    std::vector<int> degrees_;
};

ThreeGraph complete_graph(int n);
ThreeGraph empty_graph(int n);
/// Disjoint union; vertices of `b` are shifted by a.order().
ThreeGraph disjoint_union(const ThreeGraph& a, const ThreeGraph& b);

/// Multiset of loose-cycle orders. Each order is even and at least 6; a cycle
/// of order t has t/2 edges and counts as odd when t/2 is odd.
class CycleFamilySpec {
public:
    const std::vector<int>& lengths() const { return lengths_; }
    int order() const { return n_; }
    int odd_count() const { return k_; }
    std::size_t cycle_count() const { return lengths_.size(); }

    static bool is_odd_cycle(int t) { return t % 4 == 2; }

    bool operator==(const CycleFamilySpec&) const = default;

private:
    friend CycleFamilySpec family_from_lengths(std::vector<int> lengths);
    std::vector<int> lengths_;
    int n_ = 0;
    int k_ = 0;
};

CycleFamilySpec family_from_lengths(std::vector<int> lengths);
/// Parses "6,8,8".
CycleFamilySpec parse_family(const std::string& text);
std::string format_family(const CycleFamilySpec& spec, char sep = ',');
/// Minimum vertex cover of the disjoint family: sum of t/4 (even length) or
/// (t+2)/4 (odd length), which equals (n + 2k)/4.
int cover_number(const CycleFamilySpec& spec);
/// Every family of loose cycles on exactly n vertices, lengths non-increasing.
std::vector<CycleFamilySpec> families_of_order(int n);

/// Loose cycle on t vertices listed so that edges are
/// (x0 x1 x2), (x2 x3 x4), ..., (x_{t-2} x_{t-1} x0). Even positions are the
/// junction vertices shared by two consecutive edges.
class LooseCycle {
public:
    static LooseCycle from_vertices(std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    int order() const { return static_cast<int>(vertices_.size()); }
    int length() const { return order() / 2; }
    std::vector<Triple> edges() const;
    /// Lexicographically least listing among all even rotations and both
    /// orientations; equal cycles have equal canonical forms.
    LooseCycle canonical() const;

    bool operator==(const LooseCycle&) const = default;

private:
    std::vector<Vertex> vertices_;
};

/// Loose path on t (odd) vertices with edges (x0 x1 x2), (x2 x3 x4), ...
class LoosePath {
public:
    static LoosePath from_vertices(std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    int length() const { return static_cast<int>(vertices_.size() - 1) / 2; }
    std::vector<Triple> edges() const;
    Vertex front() const { return vertices_.front(); }
    Vertex back() const { return vertices_.back(); }

private:
    std::vector<Vertex> vertices_;
};

/// One listed cycle per entry of the family, in the family's order.
struct Embedding {
    std::vector<LooseCycle> cycles;
};

struct EmbeddingReport {
    bool ok = true;
    std::string violation;
};

EmbeddingReport verify_embedding(const ThreeGraph& host, const CycleFamilySpec& spec,
                                 const Embedding& emb, bool spanning);

// ".h3" text format: "n <N>" then "e <u> <v> <w>" per edge with u < v < w;
// lines starting with '#' are comments.
ThreeGraph read_h3(std::istream& in);
void write_h3(std::ostream& out, const ThreeGraph& graph);
ThreeGraph load_h3(const std::string& path);
void save_h3(const std::string& path, const ThreeGraph& graph);

}  // namespace loosecyc
