#include "loosecyc/tripartite.hpp"

#include "loosecyc/coloring.hpp"
#include "loosecyc/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace loosecyc {

namespace {

// Indices of `v` ordered by value, ties by index.
std::array<int, 3> ascending_order(const PartCounts& v) {
    std::array<int, 3> idx{0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return v[x] < v[y]; });
    return idx;
}

bool is_sorted3(const PartCounts& v) { return v[0] <= v[1] && v[1] <= v[2]; }

// Moves one vertex of some cycle from part `lose` to part `gain`.
TransferStep transfer(std::vector<PartCounts>& rows, PartCounts& sizes, int gain, int lose) {
    TransferStep step{gain, lose, 1, -1};
    for (std::size_t c = 0; c < rows.size(); ++c) {
        if (rows[c][lose] >= rows[c][gain] + 2) {
            step.cycle = static_cast<int>(c);
            break;
        }
    }
    if (step.cycle < 0) {
        step.kind = 2;
        int qualifying = 0;
        for (std::size_t c = 0; c < rows.size(); ++c) {
            if (rows[c][lose] >= rows[c][gain] + 1) {
                if (qualifying++ == 0) step.cycle = static_cast<int>(c);
            }
        }
        // Column difference is >= 2 and no row differs by 2, so two rows differ by 1.
        if (qualifying < 2) throw ClaimViolation("transfer: fewer than two cycles can give up a vertex");
    }
    auto& row = rows[static_cast<std::size_t>(step.cycle)];
    row[gain] += 1;
    row[lose] -= 1;
    sizes[gain] += 1;
    sizes[lose] -= 1;
    return step;
}

}  // namespace

bool row_colorable(const PartCounts& row, int cycle_length) {
    if (row[0] < 0 || row[1] < 0 || row[2] < 0) return false;
    if (row[0] + row[1] + row[2] != cycle_length) return false;
    return *std::max_element(row.begin(), row.end()) <= cycle_length / 2;
}

bool verify_window(const PartCounts& parts, int odd_cycles) {
    PartCounts s = parts;
    std::sort(s.begin(), s.end());
    const int n = s[0] + s[1] + s[2];
    return odd_cycles <= s[0] && 2 * s[2] <= n - odd_cycles;
}

TripartiteEmbedding embed_tripartite(const PartCounts& parts, const std::vector<int>& cycle_lengths) {
    if (cycle_lengths.empty()) throw InvalidInput("no cycles to embed");
    int n = 0;
    int k = 0;
    for (int m : cycle_lengths) {
        if (m < 3) throw InvalidInput("graph cycles need length >= 3");
        n += m;
        k += m % 2;
    }
    if (parts[0] < 0 || parts[1] < 0 || parts[2] < 0) throw InvalidInput("negative part size");
    if (parts[0] + parts[1] + parts[2] != n) throw InvalidInput("part sizes must sum to the total cycle length");
    if (!verify_window(parts, k)) {
        throw InvalidInput("part sizes outside the window k <= v1 <= v2 <= v3 <= (n-k)/2");
    }

    const auto order = ascending_order(parts);
    PartCounts target{parts[order[0]], parts[order[1]], parts[order[2]]};

    // Base case in sorted coordinates.
    std::vector<PartCounts> rows;
    for (int m : cycle_lengths) rows.push_back({m % 2, m / 2, m / 2});
    PartCounts sizes{k, (n - k) / 2, (n - k) / 2};

    TripartiteEmbedding out;
    while (sizes != target) {
        static constexpr std::array<std::array<int, 2>, 3> kMoves{{{0, 2}, {0, 1}, {1, 2}}};
        bool moved = false;
        for (auto [gain, lose] : kMoves) {
            if (sizes[gain] >= target[gain] || sizes[lose] <= target[lose]) continue;
            PartCounts next = sizes;
            next[gain] += 1;
            next[lose] -= 1;
            if (!is_sorted3(next)) continue;
            out.steps.push_back(transfer(rows, sizes, gain, lose));
            for (std::size_t c = 0; c < rows.size(); ++c) {
                if (!row_colorable(rows[c], cycle_lengths[c])) {
                    throw ClaimViolation("transfer produced an uncolorable row");
                }
            }
            moved = true;
            break;
        }
        if (!moved) throw ClaimViolation("no sorted unit transfer leads toward the target part sizes");
    }

    // Back to the caller's part order.
    out.allocation.parts = parts;
    out.allocation.cycle_lengths = cycle_lengths;
    for (const auto& r : rows) {
        PartCounts row{};
        for (int s = 0; s < 3; ++s) row[order[s]] = r[s];
        out.allocation.rows.push_back(row);
    }

    // Concrete placement: color each cycle, then hand out vertices part by part.
    PartCounts next_free{0, parts[0], parts[0] + parts[1]};
    for (std::size_t c = 0; c < rows.size(); ++c) {
        const auto& row = out.allocation.rows[c];
        const auto by_size = ascending_order(row);  // green, blue, red
        const auto coloring = color_cycle(cycle_lengths[c], row[by_size[0]], row[by_size[1]], row[by_size[2]]);
        std::vector<int> vertices;
        for (Color col : coloring.colors) {
            const int part = col == Color::Green ? by_size[0] : col == Color::Blue ? by_size[1] : by_size[2];
            vertices.push_back(next_free[part]++);
        }
        out.cycles.push_back(std::move(vertices));
    }
    return out;
}

bool verify_tripartite(const TripartiteEmbedding& emb) {
    const auto& parts = emb.allocation.parts;
    const int n = parts[0] + parts[1] + parts[2];
    auto part_of = [&](int v) { return v < parts[0] ? 0 : v < parts[0] + parts[1] ? 1 : 2; };
    if (emb.cycles.size() != emb.allocation.cycle_lengths.size()) return false;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    int placed = 0;
    for (std::size_t c = 0; c < emb.cycles.size(); ++c) {
        const auto& cyc = emb.cycles[c];
        if (static_cast<int>(cyc.size()) != emb.allocation.cycle_lengths[c]) return false;
        PartCounts seen{};
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int v = cyc[i];
            if (v < 0 || v >= n || used[v]) return false;
            used[v] = 1;
            ++placed;
            ++seen[part_of(v)];
            if (part_of(v) == part_of(cyc[(i + 1) % cyc.size()])) return false;
        }
        if (seen != emb.allocation.rows[c]) return false;
    }
    return placed == n;
}

PartCounts triple_split(int v1, int v2, int v3) {
    const int total = v1 + v2 + v3;
    if (total % 2 != 0) throw InvalidInput("triple_split needs an even total");
    PartCounts x{(v2 + v3 - v1) / 2, (v1 + v3 - v2) / 2, (v1 + v2 - v3) / 2};
    for (int xi : x) {
        if (xi < 0) throw InvalidInput("triple_split: part sizes violate the triangle inequality");
    }
    return x;
}

}  // namespace loosecyc
