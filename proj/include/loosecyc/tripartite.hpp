#pragma once

#include <array>
#include <vector>

namespace loosecyc {

using PartCounts = std::array<int, 3>;

/// Per-cycle color counts against three parts. Row i gives how many vertices
/// of cycle i land in V1, V2 and V3.
struct Allocation {
    PartCounts parts{};
    std::vector<int> cycle_lengths;
    std::vector<PartCounts> rows;
};

/// One unit move of the induction: part `gain` grows by one and part `lose`
/// shrinks by one, realized by re-coloring a single cycle.
struct TransferStep {
    int gain = 0;
    int lose = 0;
    int kind = 1;  // 1: the cycle had x_lose >= x_gain + 2; 2: no such cycle existed
    int cycle = 0;
};

/// A family of 2-uniform cycles embedded in the complete tripartite graph
/// with parts V1 = [0, v1), V2 = [v1, v1 + v2), V3 = [v1 + v2, n).
struct TripartiteEmbedding {
    Allocation allocation;
    std::vector<std::vector<int>> cycles;  // vertex ids in cyclic order
    std::vector<TransferStep> steps;        // in sorted-part coordinates
};

bool row_colorable(const PartCounts& row, int cycle_length);

/// k <= v(1) <= v(2) <= v(3) <= (n - k)/2 on the sorted part sizes.
bool verify_window(const PartCounts& parts, int odd_cycles);

/// Embeds cycles of the given lengths (each >= 3) into the complete tripartite
/// graph with the given part sizes. Starts from the colorings
/// (0 or 1, floor(m/2), floor(m/2)) at part sizes (k, (n-k)/2, (n-k)/2) and
/// walks to the target by unit transfers, one re-colored cycle per step.
/// Throws InvalidInput outside the window; ClaimViolation if a step fails.
TripartiteEmbedding embed_tripartite(const PartCounts& parts, const std::vector<int>& cycle_lengths);

/// True when every cycle is properly colored by part membership, the cycles
/// are disjoint, and together they cover every part exactly.
bool verify_tripartite(const TripartiteEmbedding& emb);

/// x_i = (v_j + v_h - v_i) / 2. Throws InvalidInput when the sum is odd or a
/// coordinate would be negative.
PartCounts triple_split(int v1, int v2, int v3);

}  // namespace loosecyc
