#pragma once

#include "loosecyc/hypercore.hpp"
#include "loosecyc/solver.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace loosecyc {

inline constexpr int kExperimentSchema = 1;

struct ExperimentConfig {
    int n_min = 6;
    int n_max = 12;
    int trials = 1;
    std::uint64_t seed = 1;
    std::uint64_t budget = 50'000'000;
    int threads = 1;
};

/// One solver run. `generator` is "extremal", "complete" or "codegree:<t>"
/// with t the requested floor; `delta2` is the host's measured min codegree.
struct ExperimentRecord {
    int n = 0;
    std::string family;  // orders joined with '+'
    int k = 0;
    std::string generator;
    std::uint64_t seed = 0;
    int delta2 = 0;
    SearchStatus status = SearchStatus::Exhausted;
    std::uint64_t nodes = 0;
    double ms = 0.0;
    std::optional<Embedding> embedding;
    int family_index = 0;  // position in families_of_order(n); orders rows
};

/// Rebuilds the host a record describes. Pure function of the record's
/// n, family, generator and seed.
ThreeGraph regenerate_host(const ExperimentRecord& row);

/// For every even n in range and every family of order n: the extremal host,
/// the complete host, and `trials` codegree-floor hosts at each of
/// floor((n+2k)/4) - 1, floor((n+2k)/4), floor((n+2k)/4) + 1 (when <= n-2).
/// Rows run on `threads` workers and come back sorted by (n, family, seed,
/// generator).
std::vector<ExperimentRecord> run_threshold_experiment(const ExperimentConfig& config);

/// "# schema=1 rng=mt19937_64 seed=S budget=B" then the header
/// n,family,k,generator,seed,delta2,status,nodes,ms.
void write_experiment_csv(std::ostream& out, const ExperimentConfig& config,
                          const std::vector<ExperimentRecord>& rows);
std::vector<ExperimentRecord> read_experiment_csv(std::istream& in);

/// JSON sidecar holding the embedding of every found row.
void write_experiment_sidecar(std::ostream& out, const ExperimentConfig& config,
                              const std::vector<ExperimentRecord>& rows);
/// Attaches the sidecar's embeddings to CSV rows (matched by n, family,
/// generator, seed).
void attach_sidecar(std::istream& sidecar, std::vector<ExperimentRecord>& rows);

struct ReverifyReport {
    int found_rows = 0;
    int verified = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Regenerates each found row's host and re-verifies its stored embedding.
ReverifyReport reverify_rows(const std::vector<ExperimentRecord>& rows);

}  // namespace loosecyc
