#pragma once

#include "loosecyc/hypercore.hpp"
#include "loosecyc/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loosecyc {

/// Host whose edges are exactly the triples meeting A = {0, ..., |A|-1}.
struct ExtremalInstance {
    ThreeGraph host;
    VertexSet cover;       // A
    VertexSet complement;  // B
    CycleFamilySpec spec;
};

/// Every triple on n vertices that meets {0, ..., cover_size-1}.
ThreeGraph cover_host(int n, int cover_size);

/// |A| = (n + 2k)/4 - 1. Throws InvalidInput when spec.order() != n.
ExtremalInstance build_extremal(int n, const CycleFamilySpec& spec);

struct ExtremalReport {
    int expected_codegree = 0;
    int measured_codegree = 0;
    int cover_size = 0;
    int cover_number = 0;
    bool codegree_ok = false;
    bool cover_ok = false;
    std::optional<SearchStats> solver;  // present when the solver ran
    bool solver_ok = true;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Checks min codegree == |A| (pair classes derived analytically, then
/// confirmed by queries), cover_number(spec) > |A|, and optionally that the
/// solver exhausts within `budget`. A timeout counts as a failure.
ExtremalReport verify_extremal(int n, const CycleFamilySpec& spec, bool use_solver,
                               std::uint64_t budget = kUnlimitedBudget);

/// Same checks on an arbitrary instance (used for the |A| + 1 boundary).
ExtremalReport verify_cover_instance(const ThreeGraph& host, int cover_size, const CycleFamilySpec& spec,
                                     bool use_solver, std::uint64_t budget = kUnlimitedBudget);

}  // namespace loosecyc
