// Command-line front end: decompose, verify, exact solvers, G^b, generators,
// subdivision bridges and the corpus benchmark.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "tpw/errors.hpp"
#include "tpw/exact.hpp"
#include "tpw/gadgets.hpp"
#include "tpw/io.hpp"
#include "tpw/pipeline.hpp"
#include "tpw/separator.hpp"
#include "tpw/subdivision.hpp"
#include "tpw/wood.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace tpw;

namespace {

constexpr int kOk = 0;
constexpr int kReject = 1;
constexpr int kUsage = 2;

int result(int code, const std::string& status, const std::string& reason = "", const std::string& extra = "") {
    std::cout << "RESULT status=" << status;
    if (!reason.empty()) std::cout << " reason=" << reason;
    if (!extra.empty()) std::cout << ' ' << extra;
    std::cout << '\n';
    return code;
}

void write_or_print(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        write_text(path, text);
    }
}

std::string certificate_reason(const RejectionCertificate& cert) {
    if (std::holds_alternative<TreewidthLB>(cert)) return "treewidth_lb";
    if (std::holds_alternative<LargeComponent>(cert)) return "large_component";
    return "block_degree";
}

Step1 parse_step1(const std::string& text, std::uint64_t seed) {
    if (text == "exact") return Step1::exact();
    if (text == "heur:min-fill" || text == "heur") return Step1::heuristic(EliminationStrategy::MinFill, seed);
    if (text == "heur:min-degree") return Step1::heuristic(EliminationStrategy::MinDegree, seed);
    if (text.starts_with("import:")) return Step1::import(text.substr(7));
    throw CLI::ValidationError("--step1", "expected exact, heur:min-fill, heur:min-degree or import:FILE");
}

json range_json(const VertexRange& r) { return {{"first", r.first + 1}, {"size", r.size}}; }

// ---- decompose ----

struct DecomposeArgs {
    int k = 1;
    std::string step1 = "heur:min-fill";
    std::optional<int> b;
    std::uint64_t seed = 0;
    int threads = 1;
    bool balanced = false;
    std::string input;
    std::string output;
    std::string trace;
};

int run_decompose(const DecomposeArgs& a) {
    const Graph g = read_gr(a.input);
    PipelineParams params;
    params.k = a.k;
    params.step1 = parse_step1(a.step1, a.seed);
    params.b_override = a.b;
    params.threads = a.threads;
    params.balanced_walk = a.balanced;
    const PipelineOutcome out = run_pipeline(g, params);
    if (!a.trace.empty()) {
        std::ostringstream text;
        for (const auto& rec : out.trace) text << rec.format() << '\n';
        write_text(a.trace, text.str());
    }
    if (!out.accepted) {
        std::cerr << describe(*out.certificate) << '\n';
        return result(kReject, "reject", certificate_reason(*out.certificate), "b=" + std::to_string(out.b));
    }
    write_or_print(a.output, to_tp(out.tp, g.num_vertices()));
    return result(kOk, "accept", "", "width=" + std::to_string(out.width) + " b=" + std::to_string(out.b));
}

// ---- verify ----

int report_verify(const VerifyResult& r) {
    if (r.ok()) return result(kOk, "valid", "", "width=" + std::to_string(r.width));
    std::cerr << r.violation->describe() << '\n';
    return result(kReject, "invalid", clause_name(r.violation->clause));
}

int run_verify(const std::string& kind, const std::string& graph_path, const std::string& decomp_path) {
    const Graph g = read_gr(graph_path);
    if (kind == "tp") {
        const TpFile f = read_tp(decomp_path);
        if (f.n != g.num_vertices()) return result(kReject, "invalid", "vertex_count");
        return report_verify(verify_tp(g, f.tp));
    }
    if (kind == "td" || kind == "domino") {
        const TdFile f = read_td(decomp_path);
        if (f.n != g.num_vertices()) return result(kReject, "invalid", "vertex_count");
        return report_verify(kind == "td" ? verify_td(g, f.td) : verify_domino(g, f.td));
    }
    const TcdFile f = read_tcd(decomp_path);
    if (f.n != g.num_vertices()) return result(kReject, "invalid", "vertex_count");
    const TcdReport r = verify_tcd(g, f.tcd);
    if (!r.ok()) {
        std::cerr << r.violation->describe() << '\n';
        return result(kReject, "invalid", clause_name(r.violation->clause));
    }
    return result(kOk, "valid", "",
                  "width=" + std::to_string(r.width) + " nice=" + (r.nice ? "1" : "0") + " offending_node=" +
                      std::to_string(r.offending_node >= 0 ? r.offending_node + 1 : 0));
}

// ---- gen ----

struct GenArgs {
    std::string family;
    std::vector<std::string> params;
    std::uint64_t seed = 0;
    std::string output;
    std::string meta;
};

int param_int(const GenArgs& a, std::size_t i, const char* name) {
    if (i >= a.params.size()) throw CLI::ValidationError("gen " + a.family, std::string("missing parameter ") + name);
    return std::stoi(a.params[i]);
}

TcmisInstance parse_tcmis(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    const json j = json::parse(in);
    TcmisInstance inst;
    inst.tree_nodes = j.at("tree_nodes").get<int>();
    inst.k = j.at("k").get<int>();
    inst.r = j.at("r").get<int>();
    for (const auto& e : j.value("tree_edges", json::array())) inst.tree_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    for (const auto& e : j.value("edges", json::array())) {
        inst.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(), e.at(3).get<int>(), e.at(4).get<int>(),
                              e.at(5).get<int>()});
    }
    return inst;
}

std::vector<json> tcmis_records(const TcmisGadget& g) {
    std::vector<json> out;
    out.push_back({{"kind", "params"},
                   {"k", g.k},
                   {"r", g.r},
                   {"L", g.l},
                   {"N", g.n_sub},
                   {"chain_length", g.chain_length},
                   {"max_degree", g.max_degree}});
    for (int x = 0; x < g.trunk_nodes; ++x) {
        json rec = {{"kind", "trunk"}, {"node", x}, {"parent", g.trunk_parent[x]}, {"p", g.p[x]}, {"check_edge", g.check_edge[x]}};
        rec.update(range_json(g.a[x]));
        out.push_back(rec);
    }
    for (std::size_t i = 0; i < g.chain.size(); ++i) {
        for (std::size_t c = 0; c < g.chain[i].size(); ++c) {
            for (std::size_t gamma = 0; gamma < g.chain[i][c].size(); ++gamma) {
                json rec = {{"kind", "chain"}, {"node", i}, {"color", c + 1}, {"position", gamma + 1}};
                rec.update(range_json(g.chain[i][c][gamma]));
                out.push_back(rec);
            }
        }
    }
    for (const auto& cl : g.clusters) {
        json rec = {{"kind", "cluster"}, {"owner", cl.owner}};
        rec.update(range_json(cl.c));
        out.push_back(rec);
    }
    for (const auto& s : g.overshoots) out.push_back({{"kind", "overshoot"}, {"message", s}});
    return out;
}

std::vector<json> domino_records(const DominoReduction& red) {
    std::vector<json> out;
    out.push_back({{"kind", "params"}, {"k", red.k}, {"d", red.d}, {"L", red.l}, {"M", red.m}});
    for (std::size_t v = 0; v < red.clique.size(); ++v) {
        json rec = {{"kind", "clique"}, {"vertex", v + 1}};
        rec.update(range_json(red.clique[v]));
        out.push_back(rec);
    }
    for (const auto& [w, s] : red.pendant) {
        json rec = {{"kind", "pendant"}, {"owner", w + 1}};
        rec.update(range_json(s));
        out.push_back(rec);
    }
    for (const auto& [e, z] : red.z) out.push_back({{"kind", "edge"}, {"u", e.u + 1}, {"v", e.v + 1}, {"z", z + 1}});
    return out;
}

int run_gen(const GenArgs& a) {
    Graph g;
    std::vector<json> records;
    Rng rng(a.seed);
    const std::string& f = a.family;
    if (f == "grid") {
        g = gen_grid(param_int(a, 0, "m"));
    } else if (f == "wall") {
        g = gen_wall(param_int(a, 0, "m"));
    } else if (f == "fan") {
        g = gen_fan(param_int(a, 0, "m"));
    } else if (f == "kbip") {
        g = gen_complete_bipartite(param_int(a, 0, "a"), param_int(a, 1, "b"));
    } else if (f == "multitree") {
        if (a.params.empty()) throw CLI::ValidationError("gen multitree", "missing TREE.gr");
        g = gen_multiple_tree(read_gr(a.params[0]), param_int(a, 1, "m"));
    } else if (f == "tcmis") {
        if (a.params.empty()) throw CLI::ValidationError("gen tcmis", "missing INSTANCE.json");
        TcmisGadget gadget = gen_tcmis_gadget(parse_tcmis(a.params[0]));
        records = tcmis_records(gadget);
        g = std::move(gadget.h);
    } else if (f == "domino") {
        if (a.params.empty()) throw CLI::ValidationError("gen domino", "missing IN.gr");
        DominoReduction red = gen_domino_reduction(read_gr(a.params[0]), param_int(a, 1, "k"));
        records = domino_records(red);
        g = std::move(red.h);
    } else if (f == "tree") {
        g = gen_random_tree(param_int(a, 0, "n"), rng);
    } else if (f == "gnp") {
        if (a.params.size() < 2) throw CLI::ValidationError("gen gnp", "expected N P");
        g = gen_gnp(param_int(a, 0, "n"), std::stod(a.params[1]), rng);
    } else if (f == "path") {
        g = gen_path(param_int(a, 0, "n"));
    } else if (f == "cycle") {
        g = gen_cycle(param_int(a, 0, "n"));
    } else if (f == "complete") {
        g = gen_complete(param_int(a, 0, "n"));
    } else {
        throw CLI::ValidationError("gen", "unknown family " + f);
    }
    write_or_print(a.output, to_gr(g));
    if (!a.meta.empty()) {
        std::ostringstream text;
        for (const auto& rec : records) text << rec.dump() << '\n';
        write_text(a.meta, text.str());
    }
    return kOk;
}

// ---- bench ----

struct BenchRow {
    std::string instance;
    int n = 0;
    int m = 0;
    int k = 0;
    std::string status;
    std::string reason;
    int width = 0;
    int w = -1;
    int b = 0;
    int width_h = 0;
    int delta_h = 0;
    double bound = 0;
    std::vector<double> millis;
};

BenchRow bench_one(const fs::path& file, int k) {
    BenchRow row;
    row.instance = file.filename().string();
    row.k = k;
    row.millis.assign(5, 0.0);
    try {
        const Graph g = read_gr(file.string());
        row.n = g.num_vertices();
        row.m = g.num_edges();
        PipelineParams params;
        params.k = k;
        const PipelineOutcome out = run_pipeline(g, params);
        row.status = out.accepted ? "accept" : "reject";
        if (out.certificate) row.reason = certificate_reason(*out.certificate);
        row.width = out.width;
        row.b = out.b;
        row.w = out.td.num_nodes() > 0 ? out.td.width() : -1;
        for (const auto& rec : out.trace) {
            const int step = rec.step.back() - '1';
            if (step >= 0 && step < 5) row.millis[step] += rec.get("millis").value_or(0.0);
            if (rec.step == "step4") {
                row.delta_h = static_cast<int>(rec.get("delta_H").value_or(0));
                row.width_h = static_cast<int>(rec.get("width_H").value_or(0));
            }
        }
        if (out.accepted) row.bound = WoodConstants::bound(std::max(0, out.td_h.width()), std::max(1, row.delta_h));
    } catch (const std::exception& e) {
        row.status = "error";
        row.reason = e.what();
        std::replace(row.reason.begin(), row.reason.end(), ',', ';');
    }
    return row;
}

int run_bench(const std::string& dir, const std::vector<int>& ks, const std::string& report, int threads) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".gr") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<std::pair<fs::path, int>> jobs;
    for (const auto& f : files) {
        for (int k : ks) jobs.emplace_back(f, k);
    }
    std::vector<BenchRow> rows(jobs.size());
    std::size_t next = 0;
    std::mutex lock;
    auto worker = [&] {
        for (;;) {
            std::size_t i = 0;
            {
                std::lock_guard guard(lock);
                if (next >= jobs.size()) return;
                i = next++;
            }
            rows[i] = bench_one(jobs[i].first, jobs[i].second);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& x, const BenchRow& y) {
        return std::tie(x.instance, x.k) < std::tie(y.instance, y.k);
    });
    std::ostringstream csv;
    csv << "instance,n,m,k,status,reason,width,w,b,width_H,delta_H,wood_bound,ms_step1,ms_step2,ms_step3,ms_step4,ms_step5\n";
    for (const auto& r : rows) {
        csv << r.instance << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.status << ',' << r.reason << ',' << r.width << ','
            << r.w << ',' << r.b << ',' << r.width_h << ',' << r.delta_h << ',' << r.bound;
        for (double ms : r.millis) csv << ',' << ms;
        csv << '\n';
    }
    write_or_print(report, csv.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree-partition toolkit"};
    app.require_subcommand(1);

    DecomposeArgs dec;
    auto* decompose = app.add_subcommand("decompose", "tree-partition of width O(k^7) or a rejection certificate");
    decompose->add_option("-k", dec.k, "target tree-partition-width")->required()->check(CLI::PositiveNumber);
    decompose->add_option("--step1", dec.step1, "exact | heur:min-fill | heur:min-degree | import:FILE");
    decompose->add_option("--b", dec.b, "separator threshold override");
    decompose->add_option("--seed", dec.seed, "heuristic tie-break seed");
    decompose->add_option("--threads", dec.threads, "worker threads for G^b")->check(CLI::PositiveNumber);
    decompose->add_flag("--balanced-walk", dec.balanced, "drive the separator walk with the balanced tree");
    decompose->add_option("input", dec.input, "graph (.gr)")->required();
    decompose->add_option("-o", dec.output, "output tree-partition (.tp)");
    decompose->add_option("--trace", dec.trace, "step trace file");

    std::string verify_kind;
    std::string verify_graph;
    std::string verify_decomp;
    auto* verify = app.add_subcommand("verify", "check a decomposition against a graph");
    verify->add_option("kind", verify_kind)->required()->check(CLI::IsMember({"tp", "td", "domino", "tcd"}));
    verify->add_option("graph", verify_graph)->required();
    verify->add_option("decomposition", verify_decomp)->required();

    int tpw_kmax = kExactTpwCap;
    std::string tpw_input;
    std::string tpw_output;
    auto* exact_tpw_cmd = app.add_subcommand("exact-tpw", "exact tree-partition-width (small graphs)");
    exact_tpw_cmd->add_option("--kmax", tpw_kmax);
    exact_tpw_cmd->add_option("input", tpw_input)->required();
    exact_tpw_cmd->add_option("-o", tpw_output, "optimal tree-partition (.tp)");

    int domino_kmax = kExactDominoCap;
    std::string domino_input;
    std::string domino_output;
    auto* exact_domino_cmd = app.add_subcommand("exact-domino", "exact domino treewidth (small graphs)");
    exact_domino_cmd->add_option("--kmax", domino_kmax);
    exact_domino_cmd->add_option("input", domino_input)->required();
    exact_domino_cmd->add_option("-o", domino_output, "optimal domino decomposition (.td)");

    int gb_b = 1;
    int gb_threads = 1;
    std::string gb_input;
    std::string gb_output;
    auto* gb = app.add_subcommand("gb", "graph of pairs with minimum separator at least b");
    gb->add_option("-b", gb_b)->required();
    gb->add_option("--threads", gb_threads)->check(CLI::PositiveNumber);
    gb->add_option("input", gb_input)->required();
    gb->add_option("-o", gb_output);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph family or reduction");
    gen_cmd->add_option("family", gen.family, "grid|wall|fan|kbip|multitree|tcmis|domino|tree|gnp|path|cycle|complete")->required();
    gen_cmd->add_option("params", gen.params, "family parameters");
    gen_cmd->add_option("--seed", gen.seed);
    gen_cmd->add_option("-o", gen.output);
    gen_cmd->add_option("--meta", gen.meta, "JSON-lines registry sidecar");

    std::vector<std::string> from_tcd;
    std::vector<std::string> lift;
    std::string counts_path;
    std::string bridge_output;
    std::string bridge_graph;
    auto* bridge = app.add_subcommand("bridge", "tree-partitions of subdivisions");
    auto* opt_tcd = bridge->add_option("--from-tcd", from_tcd, "IN.gr IN.tcd")->expected(2);
    auto* opt_lift = bridge->add_option("--lift", lift, "IN.gr IN.tp")->expected(2);
    opt_tcd->excludes(opt_lift);
    bridge->add_option("--counts", counts_path, "subdivision counts for --lift");
    bridge->add_option("-o", bridge_output, "output tree-partition (.tp)");
    bridge->add_option("--graph-out", bridge_graph, "output subdivided graph (.gr)");

    std::string bench_dir;
    std::vector<int> bench_ks;
    std::string bench_report;
    int bench_threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    auto* bench = app.add_subcommand("bench", "run the pipeline over a corpus directory");
    bench->add_option("corpus", bench_dir)->required()->check(CLI::ExistingDirectory);
    bench->add_option("-k", bench_ks)->required();
    bench->add_option("--report", bench_report);
    bench->add_option("--threads", bench_threads)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*decompose) return run_decompose(dec);
        if (*verify) return run_verify(verify_kind, verify_graph, verify_decomp);
        if (*exact_tpw_cmd) {
            const Graph g = read_gr(tpw_input);
            const ExactTpwResult r = exact_tpw(g, tpw_kmax);
            if (!r.width) return result(kReject, "exceeds", "kmax", "kmax=" + std::to_string(tpw_kmax));
            if (!tpw_output.empty()) write_text(tpw_output, to_tp(r.witness, g.num_vertices()));
            return result(kOk, "ok", "", "tpw=" + std::to_string(*r.width));
        }
        if (*exact_domino_cmd) {
            const Graph g = read_gr(domino_input);
            const ExactDominoResult r = exact_domino_tw(g, domino_kmax);
            if (!r.width) return result(kReject, "exceeds", "kmax", "kmax=" + std::to_string(domino_kmax));
            if (!domino_output.empty()) write_text(domino_output, to_td(r.witness, g.num_vertices()));
            return result(kOk, "ok", "", "domino_tw=" + std::to_string(*r.width));
        }
        if (*gb) {
            const Graph g = read_gr(gb_input);
            const Graph out = build_gb(g, gb_b, all_pairs(g.num_vertices()), gb_threads);
            write_or_print(gb_output, to_gr(out));
            return kOk;
        }
        if (*gen_cmd) return run_gen(gen);
        if (*bridge) {
            SubdividedPartition out;
            std::optional<double> bound;
            if (!from_tcd.empty()) {
                const Graph g = read_gr(from_tcd[0]);
                const TcdFile f = read_tcd(from_tcd[1]);
                const TcdReport report = verify_tcd(g, f.tcd);
                if (!report.ok()) return result(kReject, "invalid", clause_name(report.violation->clause));
                if (!report.nice) return result(kReject, "not_nice", "", "offending_node=" + std::to_string(report.offending_node + 1));
                out = tcd_to_subdivision_tp(g, f.tcd);
                bound = tcd_bridge_bound(report.width);
            } else if (!lift.empty()) {
                const Graph g = read_gr(lift[0]);
                const TpFile f = read_tp(lift[1]);
                const VerifyResult check = verify_tp(g, f.tp);
                if (!check.ok()) return result(kReject, "invalid", clause_name(check.violation->clause));
                const auto counts = counts_path.empty() ? std::map<Edge, int>{} : read_counts(counts_path, g);
                out = tp_lift_subdivision(g, f.tp, counts);
                bound = static_cast<double>(check.width) * (check.width + 1);
            } else {
                std::cerr << "bridge needs --from-tcd or --lift\n";
                return kUsage;
            }
            if (!bridge_graph.empty()) write_text(bridge_graph, to_gr(out.graph));
            write_or_print(bridge_output, to_tp(out.tp, out.graph.num_vertices()));
            std::ostringstream extra;
            extra << "width=" << out.tp.width() << " bound=" << *bound;
            return result(kOk, "ok", "", extra.str());
        }
        if (*bench) return run_bench(bench_dir, bench_ks, bench_report, bench_threads);
    } catch (const ParseError& e) {
        std::cerr << e.what() << '\n';
        return result(kUsage, "error", "parse");
    } catch (const ValidationError& e) {
        std::cerr << e.what() << '\n';
        return result(kReject, "invalid", "import");
    } catch (const CapacityError& e) {
        std::cerr << e.what() << '\n';
        return result(kUsage, "error", "capacity");
    } catch (const ContractViolation& e) {
        std::cerr << e.what() << '\n';
        return result(kUsage, "error", "precondition");
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return result(kUsage, "error", "io");
    }
    return kUsage;
}
