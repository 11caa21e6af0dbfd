#include "loosecyc/experiment.hpp"

#include "loosecyc/error.hpp"
#include "loosecyc/extremal.hpp"
#include "loosecyc/generators.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

namespace loosecyc {

namespace {

constexpr const char* kHeader = "n,family,k,generator,seed,delta2,status,nodes,ms";

SearchStatus parse_status(const std::string& s) {
    for (auto st : {SearchStatus::Found, SearchStatus::Exhausted, SearchStatus::Timeout}) {
        if (to_string(st) == s) return st;
    }
    throw InvalidInput("unknown status '" + s + "'");
}

CycleFamilySpec family_of(const std::string& text) {
    std::string commas = text;
    std::replace(commas.begin(), commas.end(), '+', ',');
    return parse_family(commas);
}

auto row_key(const ExperimentRecord& r) { return std::tie(r.n, r.family_index, r.seed, r.generator); }

std::string match_key(const ExperimentRecord& r) {
    return std::to_string(r.n) + "|" + r.family + "|" + r.generator + "|" + std::to_string(r.seed);
}

}  // namespace

ThreeGraph regenerate_host(const ExperimentRecord& row) {
    if (row.generator == "extremal") return build_extremal(row.n, family_of(row.family)).host;
    if (row.generator == "complete") return complete_graph(row.n);
    if (row.generator.rfind("codegree:", 0) == 0) {
        return gen_codegree_floor(row.n, std::stoi(row.generator.substr(9)), row.seed).graph;
    }
    throw InvalidInput("unknown generator '" + row.generator + "'");
}

std::vector<ExperimentRecord> run_threshold_experiment(const ExperimentConfig& config) {
    if (config.n_min < 0 || config.n_max < config.n_min || config.trials < 0 || config.threads < 1) {
        throw InvalidInput("bad experiment configuration");
    }
    std::vector<ExperimentRecord> rows;
    for (int n = config.n_min; n <= config.n_max; ++n) {
        const auto families = families_of_order(n);
        for (std::size_t fi = 0; fi < families.size(); ++fi) {
            const auto& spec = families[fi];
            ExperimentRecord base;
            base.n = n;
            base.family = format_family(spec, '+');
            base.k = spec.odd_count();
            base.family_index = static_cast<int>(fi);
            base.seed = 0;

            base.generator = "extremal";
            rows.push_back(base);
            base.generator = "complete";
            rows.push_back(base);

            const int f = (n + 2 * spec.odd_count()) / 4;
            for (int target = f - 1; target <= f + 1; ++target) {
                if (target < 0 || target > n - 2) continue;
                for (int t = 0; t < config.trials; ++t) {
                    ExperimentRecord row = base;
                    row.generator = "codegree:" + std::to_string(target);
                    row.seed = mix_seed(config.seed ^ mix_seed(static_cast<std::uint64_t>(n) << 32 | fi) ^
                                        mix_seed(static_cast<std::uint64_t>(target) << 16 | static_cast<std::uint64_t>(t)));
                    rows.push_back(row);
                }
            }
        }
    }

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::string error;
    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            auto& row = rows[i];
            try {
                const ThreeGraph host = regenerate_host(row);
                row.delta2 = host.min_codegree();
                auto res = solve_spanning(host, family_of(row.family), config.budget);
                row.status = res.stats.status;
                row.nodes = res.stats.nodes;
                row.ms = res.stats.ms;
                row.embedding = std::move(res.embedding);
            } catch (const std::exception& e) {
                std::lock_guard lock(error_mutex);
                if (error.empty()) error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < config.threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (!error.empty()) throw InvalidInput("experiment row failed: " + error);

    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return row_key(a) < row_key(b); });
    return rows;
}

void write_experiment_csv(std::ostream& out, const ExperimentConfig& config,
                          const std::vector<ExperimentRecord>& rows) {
    out << "# schema=" << kExperimentSchema << " rng=mt19937_64 seed=" << config.seed << " budget=" << config.budget
        << "\n";
    out << kHeader << "\n";
    for (const auto& r : rows) {
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(3) << r.ms;
        out << r.n << ',' << r.family << ',' << r.k << ',' << r.generator << ',' << r.seed << ',' << r.delta2 << ','
            << to_string(r.status) << ',' << r.nodes << ',' << ms.str() << "\n";
    }
}

std::vector<ExperimentRecord> read_experiment_csv(std::istream& in) {
    std::vector<ExperimentRecord> rows;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            if (line != kHeader) throw InvalidInput("unexpected CSV header '" + line + "'");
            header = true;
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
        if (cells.size() != 9) throw InvalidInput("CSV row with " + std::to_string(cells.size()) + " cells");
        ExperimentRecord r;
        r.n = std::stoi(cells[0]);
        r.family = cells[1];
        r.k = std::stoi(cells[2]);
        r.generator = cells[3];
        r.seed = std::stoull(cells[4]);
        r.delta2 = std::stoi(cells[5]);
        r.status = parse_status(cells[6]);
        r.nodes = std::stoull(cells[7]);
        r.ms = std::stod(cells[8]);
        rows.push_back(std::move(r));
    }
    if (!header) throw InvalidInput("CSV has no header");
    return rows;
}

void write_experiment_sidecar(std::ostream& out, const ExperimentConfig& config,
                              const std::vector<ExperimentRecord>& rows) {
    nlohmann::json doc;
    doc["schema"] = kExperimentSchema;
    doc["rng"] = "mt19937_64";
    doc["seed"] = config.seed;
    doc["budget"] = config.budget;
    doc["embeddings"] = nlohmann::json::array();
    for (const auto& r : rows) {
        if (!r.embedding) continue;
        nlohmann::json cycles = nlohmann::json::array();
        for (const auto& c : r.embedding->cycles) cycles.push_back(c.vertices());
        doc["embeddings"].push_back(
            {{"n", r.n}, {"family", r.family}, {"generator", r.generator}, {"seed", r.seed}, {"cycles", cycles}});
    }
    out << doc.dump(1) << "\n";
}

void attach_sidecar(std::istream& sidecar, std::vector<ExperimentRecord>& rows) {
    const auto doc = nlohmann::json::parse(sidecar);
    if (doc.value("schema", 0) != kExperimentSchema) throw InvalidInput("unsupported sidecar schema");
    std::map<std::string, Embedding> by_key;
    for (const auto& e : doc.at("embeddings")) {
        ExperimentRecord key;
        key.n = e.at("n").get<int>();
        key.family = e.at("family").get<std::string>();
        key.generator = e.at("generator").get<std::string>();
        key.seed = e.at("seed").get<std::uint64_t>();
        Embedding emb;
        for (const auto& c : e.at("cycles")) emb.cycles.push_back(LooseCycle::from_vertices(c.get<std::vector<Vertex>>()));
        by_key[match_key(key)] = std::move(emb);
    }
    for (auto& r : rows) {
        if (auto it = by_key.find(match_key(r)); it != by_key.end()) r.embedding = it->second;
    }
}

ReverifyReport reverify_rows(const std::vector<ExperimentRecord>& rows) {
    ReverifyReport rep;
    for (const auto& r : rows) {
        if (r.status != SearchStatus::Found) continue;
        ++rep.found_rows;
        const std::string where = r.family + " on " + r.generator + " (n=" + std::to_string(r.n) + ")";
        if (!r.embedding) {
            rep.failures.push_back("no stored embedding for " + where);
            continue;
        }
        const auto check = verify_embedding(regenerate_host(r), family_of(r.family), *r.embedding, true);
        if (check.ok) {
            ++rep.verified;
        } else {
            rep.failures.push_back(where + ": " + check.violation);
        }
    }
    return rep;
}

}  // namespace loosecyc
