#pragma once

#include "loosecyc/hypercore.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace loosecyc {

enum class SearchStatus { Found, Exhausted, Timeout };

std::string to_string(SearchStatus s);

inline constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();

/// `nodes` counts placed vertices; the budget caps it, so runs are
/// reproducible independent of machine speed. Exhausted means the search
/// space was covered and nothing exists.
struct SearchStats {
    std::uint64_t nodes = 0;
    int max_depth = 0;
    double ms = 0.0;
    SearchStatus status = SearchStatus::Exhausted;
};

struct SpanningResult {
    std::optional<Embedding> embedding;
    SearchStats stats;
};

/// Decides whether `host` contains the family as a spanning subgraph. The
/// least unused vertex is always the minimum vertex of the next cycle; the
/// search branches over which remaining order (largest first) that cycle has
/// and whether the anchor is a junction or a middle vertex. Throws
/// InvalidInput when the family order differs from the host order.
SpanningResult solve_spanning(const ThreeGraph& host, const CycleFamilySpec& spec,
                              std::uint64_t budget = kUnlimitedBudget);

struct SpanningCount {
    std::uint64_t count = 0;  // unordered sets of cycles
    std::vector<Embedding> examples;
    SearchStats stats;
};

/// Enumerates every spanning copy of the family (each copy once), keeping at
/// most `keep` of them.
SpanningCount count_spanning(const ThreeGraph& host, const CycleFamilySpec& spec,
                             std::uint64_t budget = kUnlimitedBudget, std::size_t keep = 16);

struct CycleSearch {
    std::optional<LooseCycle> cycle;
    SearchStats stats;
};

/// Loose cycle on t vertices inside `allowed`. Tries a greedy path-then-close
/// pass first, then falls back to exhaustive search.
CycleSearch find_loose_cycle(const ThreeGraph& host, int t, const VertexSet& allowed,
                             std::uint64_t budget = kUnlimitedBudget);

struct PathSearch {
    std::optional<LoosePath> path;
    SearchStats stats;
};

/// Loose path with `edges` hyperedges inside `allowed`, first vertex in
/// `start` and last vertex in `end`. Exhaustive.
PathSearch find_loose_path(const ThreeGraph& host, int edges, const VertexSet& start, const VertexSet& end,
                           const VertexSet& allowed, std::uint64_t budget = kUnlimitedBudget);

struct PancyclicEntry {
    int q = 0;
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<LooseCycle> cycle;
};

/// find_loose_cycle for every even q in 6..n.
std::vector<PancyclicEntry> greedy_pancyclic_report(const ThreeGraph& host,
                                                    std::uint64_t budget_per_q = kUnlimitedBudget);

struct PathFeasibility {
    int edges = 0;
    int start_part = 0;
    int end_part = 0;
    SearchStatus status = SearchStatus::Exhausted;
};

/// For every length 1..max_edges and every ordered pair of parts (i <= j),
/// whether a loose path with endpoints in parts i and j exists inside the
/// union of the parts.
std::vector<PathFeasibility> path_feasibility_table(const ThreeGraph& host, const std::vector<VertexSet>& parts,
                                                    int max_edges, std::uint64_t budget = kUnlimitedBudget);

}  // namespace loosecyc
