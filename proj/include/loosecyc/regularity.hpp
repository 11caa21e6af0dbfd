#pragma once

#include "loosecyc/hypercore.hpp"
#include "loosecyc/rational.hpp"
#include "loosecyc/solver.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace loosecyc {

/// Three disjoint vertex sets of a host; only crossing edges (one vertex in
/// each part) count. The host must outlive the view.
class TripartiteView {
public:
    using Parts = std::array<std::vector<Vertex>, 3>;

    /// Throws InvalidInput on out-of-range, repeated or shared vertices.
    TripartiteView(const ThreeGraph& host, Parts parts);

    const ThreeGraph& host() const { return *host_; }
    const Parts& parts() const { return parts_; }
    const std::vector<Vertex>& part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
    int part_size(int i) const { return static_cast<int>(part(i).size()); }

    /// Crossing edges.
    std::int64_t edge_count() const;
    /// Crossing edges through x, where x lies in part i.
    std::int64_t degree(int i, Vertex x) const;

private:
    const ThreeGraph* host_;
    Parts parts_;
};

/// e / (|V1||V2||V3|). Throws InvalidInput on an empty part.
Rational density(const TripartiteView& view);
/// Density of the sub-triple (V1', V2', V3'), which need not be disjoint
/// from anything outside the view.
Rational density(const ThreeGraph& host, const TripartiteView::Parts& parts);

enum class RegularityMode { Regular, Half, Super, HalfSuper };
std::string to_string(RegularityMode m);
RegularityMode parse_regularity_mode(const std::string& text);

enum class Verdict { Holds, Violated, Inconclusive };
std::string to_string(Verdict v);

struct RegularityWitness {
    // "density" (whole triple below d), "subtriple" or "degree".
    std::string kind;
    TripartiteView::Parts subtriple;
    int part = -1;
    Vertex vertex = -1;
    Rational value;
};

struct RegularityVerdict {
    Verdict verdict = Verdict::Holds;
    bool exhaustive = false;
    std::uint64_t pairs_examined = 0;  // (V1', V2') choices looked at
    std::optional<RegularityWitness> witness;
};

/// Sub-triples range over |V_i'| >= ceil(eps |V_i|). Exhaustive when
/// prod 2^|V_i| <= budget; otherwise samples `samples` random choices of
/// (V1', V2') and reports Inconclusive if nothing fails. For each choice the
/// third part is covered exactly, so no sub-triple is skipped in exhaustive
/// mode. Degree clauses are always checked exactly. Eps and d must have
/// numerator and denominator below 2^40; 0 < eps < 1.
RegularityVerdict check_regular(const TripartiteView& view, const Rational& eps, const Rational& d,
                                RegularityMode mode, std::uint64_t budget = std::uint64_t{1} << 30,
                                std::uint64_t seed = 0, std::uint64_t samples = 20000);

struct PruneResult {
    TripartiteView view;
    std::array<std::vector<Vertex>, 3> low_degree;  // V_i''
};

/// Removes V_i'' = {v : d(v) < (d - 3 eps)|V_j||V_h|}, then keeps the
/// floor((1 - eps)|V_i|) vertices of highest degree (ties: lower id) in each
/// part. Throws ClaimViolation if some |V_i''| >= eps |V_i|, which means the
/// input was not regular.
PruneResult prune_to_superregular(const TripartiteView& view, const Rational& eps, const Rational& d);

/// A^3(p,q): pairs A_j = {2(j-1), 2j-1} for j = 1..q-p, hub B = the last 2p
/// vertices, edges {x} u A_j for x in B.
struct ApqGadget {
    int p = 0;
    int q = 0;
    std::vector<std::array<Vertex, 2>> pairs;
    std::vector<Vertex> hub;
    ThreeGraph graph;
};

ApqGadget build_apq(int p, int q);

/// One copy of A^3(p,q) inside a host.
struct ApqCopy {
    std::vector<std::array<Vertex, 2>> pairs;
    std::vector<Vertex> hub;

    std::vector<Vertex> vertices() const;
};

struct ApqTiling {
    std::vector<ApqCopy> copies;
    int covered = 0;
};

struct ApqTilingResult {
    std::optional<ApqTiling> tiling;
    SearchStats stats;
};

/// Vertex-disjoint copies covering at least min_cover vertices. Depth-first,
/// so the first descent is the greedy packing; exact within the budget.
ApqTilingResult find_apq_tiling(const ThreeGraph& host, int p, int q, int min_cover,
                                std::uint64_t budget = kUnlimitedBudget);

/// True when every gadget edge of every copy is a host edge and copies are
/// disjoint.
bool verify_apq_tiling(const ThreeGraph& host, int p, int q, const ApqTiling& tiling);

}  // namespace loosecyc
