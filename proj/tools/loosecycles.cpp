// Command-line front end for the loosecyc library.
#include "loosecyc/allocate.hpp"
#include "loosecyc/coloring.hpp"
#include "loosecyc/error.hpp"
#include "loosecyc/experiment.hpp"
#include "loosecyc/extremal.hpp"
#include "loosecyc/generators.hpp"
#include "loosecyc/hypercore.hpp"
#include "loosecyc/regularity.hpp"
#include "loosecyc/solver.hpp"
#include "loosecyc/tripartite.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace loosecyc;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kAbsent = 1;
constexpr int kInconclusive = 2;
constexpr int kUsage = 64;
constexpr int kInternal = 70;

struct Globals {
    std::uint64_t seed = 1;
    std::uint64_t budget = kUnlimitedBudget;
    std::string out;
    std::string format = "json";
};

int exit_for(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return kOk;
        case SearchStatus::Exhausted: return kAbsent;
        case SearchStatus::Timeout: return kInconclusive;
    }
    return kInternal;
}

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw InvalidInput("cannot write '" + g.out + "'");
    f << text;
}

void emit_json(const Globals& g, const Json& j) { emit(g, j.dump(2) + "\n"); }

std::vector<int> int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidInput("bad integer '" + item + "'");
        }
    }
    return out;
}

// "0-5;6-11;12,14" -> three vertex lists.
std::vector<std::vector<Vertex>> vertex_groups(const std::string& text) {
    std::vector<std::vector<Vertex>> groups;
    std::stringstream ss(text);
    for (std::string group; std::getline(ss, group, ';');) {
        std::vector<Vertex> members;
        std::stringstream gs(group);
        for (std::string item; std::getline(gs, item, ',');) {
            const auto dash = item.find('-', 1);
            if (dash == std::string::npos) {
                members.push_back(int_list(item).at(0));
            } else {
                const int lo = int_list(item.substr(0, dash)).at(0);
                const int hi = int_list(item.substr(dash + 1)).at(0);
                if (hi < lo) throw InvalidInput("bad range '" + item + "'");
                for (int v = lo; v <= hi; ++v) members.push_back(v);
            }
        }
        groups.push_back(std::move(members));
    }
    return groups;
}

Json cycle_json(const LooseCycle& c) { return Json(c.vertices()); }

Json embedding_json(const Embedding& e) {
    Json cycles = Json::array();
    for (const auto& c : e.cycles) cycles.push_back(cycle_json(c));
    return cycles;
}

Json stats_json(const SearchStats& s) {
    return Json{{"status", to_string(s.status)}, {"nodes", s.nodes}, {"max_depth", s.max_depth}, {"ms", s.ms}};
}

void save_graph(const Globals& g, const ThreeGraph& h, const Json& meta) {
    if (g.out.empty()) {
        write_h3(std::cout, h);
    } else {
        save_h3(g.out, h);
        std::cerr << meta.dump() << "\n";
    }
}

Json balance_json(const BalanceAssignment& a) {
    Json bins = Json::array();
    const auto sums = a.sums();
    const auto dev = a.deviations();
    const auto odd = a.odd_counts();
    for (std::size_t b = 0; b < a.bin_count(); ++b) {
        std::vector<int> members;
        for (std::size_t c = 0; c < a.lengths.size(); ++c) {
            if (a.bin_of[c] == static_cast<int>(b)) members.push_back(a.lengths[c]);
        }
        bins.push_back({{"target", a.targets[b]}, {"cycles", members}, {"sum", sums[b]}, {"deviation", dev[b]},
                        {"odd_cycles", odd[b]}});
    }
    const auto [s, s2] = badness(a);
    return Json{{"feasible", a.feasible}, {"method", a.method}, {"tol", a.tol}, {"odd_cap", a.odd_cap},
                {"swaps", a.swaps}, {"S", s}, {"S_prime", s2}, {"bins", bins}};
}

TripartiteView view_from(const ThreeGraph& h, const std::string& parts_text) {
    const auto groups = vertex_groups(parts_text);
    if (groups.size() != 3) throw InvalidInput("--parts needs exactly three groups separated by ';'");
    return TripartiteView(h, {groups[0], groups[1], groups[2]});
}

Json parts_json(const TripartiteView::Parts& p) { return Json{p[0], p[1], p[2]}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Loose-cycle families in 3-graphs: solver, constructions and checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "64-bit seed for generators and sampling")->capture_default_str();
    app.add_option("--budget", g.budget, "search node budget");
    app.add_option("--out", g.out, "output file (directory for experiment)");
    app.add_option("--format", g.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    int result = kOk;
    std::function<int()> action;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a host and write it as .h3");
    gen->require_subcommand(1);
    int gen_n = 0;
    std::string gen_family;
    double gen_p = 0.5;
    int gen_delta = 0;
    int gen_pp = 1, gen_q = 2;
    auto* gen_ext = gen->add_subcommand("extremal", "cover construction for a family");
    gen_ext->add_option("--n", gen_n)->required();
    gen_ext->add_option("--family", gen_family)->required();
    gen_ext->callback([&] {
        action = [&] {
            const auto inst = build_extremal(gen_n, parse_family(gen_family));
            save_graph(g, inst.host, {{"n", gen_n}, {"cover", inst.cover.members()}, {"edges", inst.host.size()}});
            return kOk;
        };
    });
    auto* gen_rand = gen->add_subcommand("random", "each triple with probability p");
    gen_rand->add_option("--n", gen_n)->required();
    gen_rand->add_option("--p", gen_p)->required();
    gen_rand->callback([&] {
        action = [&] {
            const auto h = gen_random(gen_n, gen_p, g.seed);
            save_graph(g, h, {{"n", gen_n}, {"edges", h.size()}, {"seed", g.seed}});
            return kOk;
        };
    });
    auto* gen_cd = gen->add_subcommand("codegree", "random host with min codegree at least the target");
    gen_cd->add_option("--n", gen_n)->required();
    gen_cd->add_option("--delta2", gen_delta)->required();
    gen_cd->callback([&] {
        action = [&] {
            const auto inst = gen_codegree_floor(gen_n, gen_delta, g.seed);
            save_graph(g, inst.graph,
                       {{"n", gen_n}, {"target", inst.target}, {"achieved", inst.achieved}, {"seed", g.seed}});
            std::cerr << "achieved min codegree " << inst.achieved << "\n";
            return kOk;
        };
    });
    auto* gen_full = gen->add_subcommand("complete", "complete 3-graph");
    gen_full->add_option("--n", gen_n)->required();
    gen_full->callback([&] {
        action = [&] {
            save_graph(g, complete_graph(gen_n), {{"n", gen_n}});
            return kOk;
        };
    });
    auto* gen_apq = gen->add_subcommand("apq", "A^3(p,q) gadget");
    gen_apq->add_option("--p", gen_pp)->required();
    gen_apq->add_option("--q", gen_q)->required();
    gen_apq->callback([&] {
        action = [&] {
            const auto gad = build_apq(gen_pp, gen_q);
            save_graph(g, gad.graph, {{"p", gen_pp}, {"q", gen_q}});
            return kOk;
        };
    });

    // codegree
    std::string file;
    auto* cod = app.add_subcommand("codegree", "minimum codegree of a host");
    cod->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    cod->callback([&] {
        action = [&] {
            const auto h = load_h3(file);
            if (g.format == "text") {
                emit(g, std::to_string(h.min_codegree()) + "\n");
            } else {
                emit_json(g, {{"n", h.order()}, {"edges", h.size()}, {"min_codegree", h.min_codegree()}});
            }
            return kOk;
        };
    });

    // solve
    std::string family;
    bool all = false, pancyclic = false;
    std::string path_parts;
    int max_edges = 3;
    std::size_t keep = 16;
    auto* solve = app.add_subcommand("solve", "search for a spanning loose-cycle family");
    solve->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    solve->add_option("--family", family, "cycle orders, e.g. 6,8");
    solve->add_flag("--all", all, "count every spanning copy");
    solve->add_option("--keep", keep, "copies kept with --all");
    solve->add_flag("--pancyclic", pancyclic, "report loose cycles for every even order");
    solve->add_option("--paths", path_parts, "parts for a loose-path feasibility table, e.g. 0-3;4-7;8-11");
    solve->add_option("--max-edges", max_edges, "longest path in the table");
    solve->callback([&] {
        action = [&] {
            const auto h = load_h3(file);
            if (pancyclic) {
                Json rows = Json::array();
                bool any_timeout = false;
                std::string csv = "q,status,cycle\n";
                for (const auto& e : greedy_pancyclic_report(h, g.budget)) {
                    any_timeout = any_timeout || e.status == SearchStatus::Timeout;
                    Json row{{"q", e.q}, {"status", to_string(e.status)}};
                    std::string cyc;
                    if (e.cycle) {
                        row["cycle"] = cycle_json(*e.cycle);
                        for (Vertex v : e.cycle->vertices()) cyc += (cyc.empty() ? "" : " ") + std::to_string(v);
                    }
                    csv += std::to_string(e.q) + "," + to_string(e.status) + "," + cyc + "\n";
                    rows.push_back(row);
                }
                if (g.format == "json") emit_json(g, {{"n", h.order()}, {"min_codegree", h.min_codegree()}, {"report", rows}});
                else emit(g, csv);
                return any_timeout ? kInconclusive : kOk;
            }
            if (!path_parts.empty()) {
                std::vector<VertexSet> parts;
                for (const auto& grp : vertex_groups(path_parts)) parts.push_back(VertexSet::of(h.order(), grp));
                Json rows = Json::array();
                std::string csv = "edges,start_part,end_part,status\n";
                for (const auto& r : path_feasibility_table(h, parts, max_edges, g.budget)) {
                    rows.push_back({{"edges", r.edges}, {"start_part", r.start_part + 1}, {"end_part", r.end_part + 1},
                                    {"status", to_string(r.status)}});
                    csv += std::to_string(r.edges) + "," + std::to_string(r.start_part + 1) + "," +
                           std::to_string(r.end_part + 1) + "," + to_string(r.status) + "\n";
                }
                if (g.format == "json") emit_json(g, rows);
                else emit(g, csv);
                return kOk;
            }
            if (family.empty()) throw InvalidInput("solve needs --family, --pancyclic or --paths");
            const auto spec = parse_family(family);
            if (all) {
                const auto c = count_spanning(h, spec, g.budget, keep);
                Json j{{"status", to_string(c.stats.status)}, {"count", c.count}, {"nodes", c.stats.nodes},
                       {"ms", c.stats.ms}};
                Json ex = Json::array();
                for (const auto& e : c.examples) ex.push_back(embedding_json(e));
                j["examples"] = ex;
                if (g.format == "text") emit(g, to_string(c.stats.status) + " " + std::to_string(c.count) + "\n");
                else emit_json(g, j);
                return exit_for(c.stats.status);
            }
            const auto res = solve_spanning(h, spec, g.budget);
            Json j{{"status", to_string(res.stats.status)}};
            if (res.embedding) j["embedding"] = embedding_json(*res.embedding);
            j["nodes"] = res.stats.nodes;
            j["ms"] = res.stats.ms;
            if (g.format == "text") {
                std::string text = to_string(res.stats.status) + "\n";
                if (res.embedding) {
                    for (const auto& c : res.embedding->cycles) {
                        for (Vertex v : c.vertices()) text += std::to_string(v) + " ";
                        text.back() = '\n';
                    }
                }
                emit(g, text);
            } else {
                emit_json(g, j);
            }
            return exit_for(res.stats.status);
        };
    });

    // color-cycle
    int cc_n = 0;
    std::string sizes;
    auto* cc = app.add_subcommand("color-cycle", "proper (a,b,c)-coloring of the cycle C_n");
    cc->add_option("--n", cc_n)->required();
    cc->add_option("--sizes", sizes, "a,b,c with a <= b <= c")->required();
    cc->callback([&] {
        action = [&] {
            const auto abc = int_list(sizes);
            if (abc.size() != 3) throw InvalidInput("--sizes needs three numbers");
            CycleColoring col;
            try {
                col = color_cycle(cc_n, abc[0], abc[1], abc[2]);
            } catch (const InvalidInput& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kAbsent;
            }
            if (g.format == "json") {
                emit_json(g, {{"n", cc_n}, {"sizes", abc}, {"coloring", to_string(col)}, {"proper", is_proper(col)}});
            } else {
                emit(g, to_string(col) + "\n");
            }
            return kOk;
        };
    });

    // embed-tripartite
    std::string parts_text, cycles_text;
    auto* et = app.add_subcommand("embed-tripartite", "cycles in a complete tripartite graph");
    et->add_option("--parts", parts_text, "v1,v2,v3")->required();
    et->add_option("--cycles", cycles_text, "graph-cycle lengths m1,m2,...")->required();
    et->callback([&] {
        action = [&] {
            const auto p = int_list(parts_text);
            if (p.size() != 3) throw InvalidInput("--parts needs three sizes");
            const auto emb = embed_tripartite({p[0], p[1], p[2]}, int_list(cycles_text));
            if (g.format == "json") {
                Json rows = Json::array();
                for (std::size_t i = 0; i < emb.cycles.size(); ++i) {
                    rows.push_back({{"length", emb.allocation.cycle_lengths[i]},
                                    {"counts", emb.allocation.rows[i]},
                                    {"vertices", emb.cycles[i]}});
                }
                emit_json(g, {{"parts", p}, {"cycles", rows}, {"steps", emb.steps.size()},
                              {"verified", verify_tripartite(emb)}});
            } else {
                std::string text;
                for (std::size_t i = 0; i < emb.cycles.size(); ++i) {
                    const auto& r = emb.allocation.rows[i];
                    text += "C" + std::to_string(emb.allocation.cycle_lengths[i]) + " (" + std::to_string(r[0]) + "," +
                            std::to_string(r[1]) + "," + std::to_string(r[2]) + "):";
                    for (int v : emb.cycles[i]) text += " " + std::to_string(v);
                    text += "\n";
                }
                emit(g, text);
            }
            return kOk;
        };
    });

    // apportion
    std::int64_t ap_q = 0;
    std::string weights_text;
    auto* ap = app.add_subcommand("apportion", "round q * weights to integers summing to q");
    ap->add_option("--q", ap_q)->required();
    ap->add_option("--weights", weights_text, "w1,w2,... (decimals or fractions)")->required();
    ap->callback([&] {
        action = [&] {
            std::vector<Rational> w;
            std::stringstream ss(weights_text);
            for (std::string item; std::getline(ss, item, ',');) w.push_back(parse_rational(item));
            const auto out = apportion(ap_q, w);
            if (g.format == "json") emit_json(g, {{"q", ap_q}, {"parts", out}});
            else {
                std::string text;
                for (auto x : out) text += (text.empty() ? "" : ",") + std::to_string(x);
                emit(g, text + "\n");
            }
            return kOk;
        };
    });

    // good-pair
    std::int64_t gp_n = 0, gp_k = 0;
    std::string eta_text;
    auto* gp = app.add_subcommand("good-pair", "(n,k,eta)-good pair with a = ceil(100/eta)");
    gp->add_option("--n", gp_n)->required();
    gp->add_option("--k", gp_k)->required();
    gp->add_option("--eta", eta_text)->required();
    gp->callback([&] {
        action = [&] {
            const auto pair = good_pair(gp_n, gp_k, parse_rational(eta_text));
            if (g.format == "json") {
                emit_json(g, {{"a", pair.a}, {"b", pair.b}, {"low", to_string(pair.low)}, {"high", to_string(pair.high)},
                              {"low_approx", to_double(pair.low)}, {"high_approx", to_double(pair.high)}});
            } else {
                emit(g, std::to_string(pair.a) + " " + std::to_string(pair.b) + "\n");
            }
            return kOk;
        };
    });

    // balance
    std::string targets_text;
    std::int64_t tol = 0;
    int odd_cap = 0;
    auto* bal = app.add_subcommand("balance", "split cycles into bins with target sums");
    bal->add_option("--targets", targets_text)->required();
    bal->add_option("--cycles", cycles_text, "loose-cycle orders")->required();
    bal->add_option("--tol", tol)->required();
    bal->add_option("--odd-cap", odd_cap)->required();
    bal->callback([&] {
        action = [&] {
            std::vector<std::int64_t> targets;
            for (int t : int_list(targets_text)) targets.push_back(t);
            const auto a = balance_partition(targets, int_list(cycles_text), tol, odd_cap);
            emit_json(g, balance_json(a));
            return a.feasible ? kOk : kAbsent;
        };
    });

    // reg
    auto* reg = app.add_subcommand("reg", "regularity checks on a tripartite view");
    reg->require_subcommand(1);
    std::string eps_text, d_text, mode_text = "regular";
    std::uint64_t samples = 20000;
    auto* reg_check = reg->add_subcommand("check", "decide a regularity predicate");
    reg_check->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    reg_check->add_option("--parts", parts_text, "e.g. 0-5;6-11;12-17")->required();
    reg_check->add_option("--eps", eps_text)->required();
    reg_check->add_option("--d", d_text)->required();
    reg_check->add_option("--mode", mode_text, "regular, half, super or half-super");
    reg_check->add_option("--samples", samples, "sampled (V1',V2') choices when not exhaustive");
    reg_check->callback([&] {
        action = [&] {
            const auto h = load_h3(file);
            const auto view = view_from(h, parts_text);
            const std::uint64_t budget = g.budget == kUnlimitedBudget ? std::uint64_t{1} << 30 : g.budget;
            const auto v = check_regular(view, parse_rational(eps_text), parse_rational(d_text),
                                         parse_regularity_mode(mode_text), budget, g.seed, samples);
            Json j{{"verdict", to_string(v.verdict)}, {"exhaustive", v.exhaustive},
                   {"density", to_string(density(view))}, {"pairs_examined", v.pairs_examined}};
            if (v.witness) {
                Json w{{"kind", v.witness->kind}, {"value", to_string(v.witness->value)}};
                if (v.witness->kind == "degree") {
                    w["part"] = v.witness->part + 1;
                    w["vertex"] = v.witness->vertex;
                } else {
                    w["subtriple"] = parts_json(v.witness->subtriple);
                }
                j["witness"] = w;
            }
            if (g.format == "text") emit(g, to_string(v.verdict) + "\n");
            else emit_json(g, j);
            switch (v.verdict) {
                case Verdict::Holds: return kOk;
                case Verdict::Violated: return kAbsent;
                case Verdict::Inconclusive: return kInconclusive;
            }
            return kInternal;
        };
    });
    auto* reg_prune = reg->add_subcommand("prune", "drop low-degree vertices and trim each part");
    reg_prune->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    reg_prune->add_option("--parts", parts_text)->required();
    reg_prune->add_option("--eps", eps_text)->required();
    reg_prune->add_option("--d", d_text)->required();
    reg_prune->callback([&] {
        action = [&] {
            const auto h = load_h3(file);
            const auto pr = prune_to_superregular(view_from(h, parts_text), parse_rational(eps_text),
                                                  parse_rational(d_text));
            emit_json(g, {{"parts", parts_json(pr.view.parts())},
                          {"low_degree", parts_json(pr.low_degree)},
                          {"density", to_string(density(pr.view))}});
            return kOk;
        };
    });

    // tile
    int tile_p = 1, tile_q = 2, min_cover = 0;
    auto* tile = app.add_subcommand("tile", "vertex-disjoint A^3(p,q) copies");
    tile->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    tile->add_option("--p", tile_p)->required();
    tile->add_option("--q", tile_q)->required();
    tile->add_option("--min-cover", min_cover)->required();
    tile->callback([&] {
        action = [&] {
            const auto h = load_h3(file);
            const auto r = find_apq_tiling(h, tile_p, tile_q, min_cover, g.budget);
            Json j = stats_json(r.stats);
            if (r.tiling) {
                Json copies = Json::array();
                for (const auto& c : r.tiling->copies) copies.push_back({{"pairs", c.pairs}, {"hub", c.hub}});
                j["covered"] = r.tiling->covered;
                j["copies"] = copies;
            }
            emit_json(g, j);
            return exit_for(r.stats.status);
        };
    });

    // verify
    auto* ver = app.add_subcommand("verify", "re-check constructions");
    ver->require_subcommand(1);
    int ver_n = 0;
    bool use_solver = false;
    auto* ver_ext = ver->add_subcommand("extremal", "codegree, cover and optional solver checks");
    ver_ext->add_option("--n", ver_n)->required();
    ver_ext->add_option("--family", family)->required();
    ver_ext->add_flag("--solver", use_solver, "also certify non-containment by search");
    ver_ext->callback([&] {
        action = [&] {
            const auto rep = verify_extremal(ver_n, parse_family(family), use_solver, g.budget);
            Json j{{"ok", rep.ok()}, {"min_codegree", rep.measured_codegree}, {"expected_codegree", rep.expected_codegree},
                   {"cover_size", rep.cover_size}, {"cover_number", rep.cover_number}, {"failures", rep.failures}};
            if (rep.solver) j["solver"] = stats_json(*rep.solver);
            emit_json(g, j);
            if (rep.ok()) return kOk;
            return rep.solver && rep.solver->status == SearchStatus::Timeout ? kInconclusive : kInternal;
        };
    });

    // experiment
    ExperimentConfig cfg;
    bool reverify = false;
    auto* exp = app.add_subcommand("experiment", "threshold experiment over all families");
    exp->add_option("--n-min", cfg.n_min)->capture_default_str();
    exp->add_option("--n-max", cfg.n_max)->capture_default_str();
    exp->add_option("--trials", cfg.trials)->capture_default_str();
    exp->add_option("--threads", cfg.threads)->capture_default_str();
    exp->add_flag("--reverify", reverify, "reload the written files and re-check every embedding");
    exp->callback([&] {
        action = [&] {
            cfg.seed = g.seed;
            if (g.budget != kUnlimitedBudget) cfg.budget = g.budget;
            const auto rows = run_threshold_experiment(cfg);
            int timeouts = 0;
            for (const auto& r : rows) timeouts += r.status == SearchStatus::Timeout;
            if (g.out.empty()) {
                write_experiment_csv(std::cout, cfg, rows);
            } else {
                std::filesystem::create_directories(g.out);
                const auto dir = std::filesystem::path(g.out);
                {
                    std::ofstream csv(dir / "results.csv");
                    write_experiment_csv(csv, cfg, rows);
                    std::ofstream side(dir / "embeddings.json");
                    write_experiment_sidecar(side, cfg, rows);
                }
                if (reverify) {
                    std::ifstream csv(dir / "results.csv");
                    auto loaded = read_experiment_csv(csv);
                    std::ifstream side(dir / "embeddings.json");
                    attach_sidecar(side, loaded);
                    const auto rep = reverify_rows(loaded);
                    std::cerr << "re-verified " << rep.verified << " of " << rep.found_rows << " found rows\n";
                    for (const auto& f : rep.failures) std::cerr << "  " << f << "\n";
                    if (!rep.ok()) return kInternal;
                }
                std::cerr << rows.size() << " rows written to " << (dir / "results.csv").string() << "\n";
            }
            return timeouts > 0 ? kInconclusive : kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        result = action ? action() : kUsage;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ClaimViolation& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return result;
}
