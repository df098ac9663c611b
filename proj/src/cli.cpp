#include "nudcode/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "nudcode/colorgraph.hpp"
#include "nudcode/coloring.hpp"
#include "nudcode/contamination.hpp"
#include "nudcode/corpus.hpp"
#include "nudcode/errors.hpp"
#include "nudcode/flows.hpp"
#include "nudcode/json_io.hpp"
#include "nudcode/netcode.hpp"
#include "nudcode/netgraph.hpp"
#include "nudcode/reduction.hpp"
#include "nudcode/solver.hpp"

namespace nudcode::cli {

namespace {

namespace fs = std::filesystem;

class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(ErrorClass::usage, what) {}
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

NetworkInstance load_network(const std::string& path) { return parse_network(read_file(path)); }

PathDecomposition load_paths(const NetworkInstance& g, const std::string& path) {
    return parse_paths(g, read_file(path));
}

std::uint64_t resolve_seed(const std::string& flag) {
    std::string text = flag;
    if (text.empty()) {
        const char* env = std::getenv("NUDCODE_SEED");
        if (!env || !*env) return 0;
        text = env;
    }
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size() || text[0] == '-') throw std::invalid_argument(text);
        return v;
    } catch (const std::logic_error&) {
        throw UsageError("seed must be a non-negative integer, got '" + text + "'");
    }
}

int exit_for(Outcome o) {
    switch (o) {
        case Outcome::solution: return exit_ok;
        case Outcome::infeasible: return exit_infeasible;
        case Outcome::unknown: return exit_unknown;
    }
    return exit_unknown;
}

int exit_for(const Error& e) {
    switch (e.error_class()) {
        case ErrorClass::input_data: return exit_data;
        case ErrorClass::usage: return exit_usage;
        case ErrorClass::unknown: return exit_unknown;
        case ErrorClass::internal: return exit_internal;
    }
    return exit_internal;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

// ---- solve ---------------------------------------------------------------

struct SolveArgs {
    std::vector<std::string> files;
    std::string nbar;
    std::size_t ceiling = 3;
    std::string seed;
    double timeout = 30;
    std::string paths;
    std::string format = "text";
    std::string emit_dot;
    std::string code_out;
    std::size_t jobs = 1;
    bool no_berge = false;
};

struct SolveResult {
    int code = exit_ok;
    std::string text;
    ojson json;
};

SolveResult solve_file(const std::string& file, const SolveArgs& a, std::uint64_t seed) {
    SolveResult res;
    try {
        const NetworkInstance g = load_network(file);
        SolveOptions opts;
        opts.seed = seed;
        opts.timeout_seconds = a.timeout;
        opts.check_berge = !a.no_berge;
        opts.auto_ceiling = a.ceiling;
        if (a.nbar == "auto") {
            opts.auto_nbar = true;
        } else if (!a.nbar.empty()) {
            try {
                std::size_t used = 0;
                const long long v = std::stoll(a.nbar, &used);
                if (used != a.nbar.size() || v < 1) throw std::invalid_argument(a.nbar);
                opts.nbar = static_cast<std::size_t>(v);
            } catch (const std::logic_error&) {
                throw UsageError("--nbar expects a positive integer or 'auto'");
            }
        }
        if (!a.paths.empty()) opts.paths = load_paths(g, a.paths);

        const SolveReport rep = solve(g, opts);
        res.code = exit_for(rep.outcome);
        res.json = solve_report_json(g, rep);

        std::ostringstream t;
        t << "outcome: " << outcome_name(rep.outcome) << "\n";
        t << "n: " << rep.decomposition.n() << " (n_j: ";
        for (std::size_t j = 0; j < rep.decomposition.sink_count(); ++j) {
            t << (j ? " " : "") << rep.decomposition.paths_to(j);
        }
        t << ")\n";
        for (const Attempt& at : rep.attempts) {
            t << "nbar " << at.nbar << ": " << outcome_name(at.outcome) << ", omega " << at.omega << ", "
              << at.vertices << " vertices, " << at.edges << " edges";
            if (at.berge_checked) {
                t << ", "
                  << (at.berge.status == BergeStatus::berge     ? "berge"
                      : at.berge.status == BergeStatus::not_berge ? "not berge"
                                                                  : "berge unknown");
            }
            if (!at.note.empty()) t << " (" << at.note << ")";
            t << "\n";
        }
        if (rep.assignment) {
            const StreamAssignment& sa = *rep.assignment;
            t << "rates: " << join(sa.rates) << "\n";
            t << "assignment:";
            for (std::size_t p = 0; p < sa.stream_of_path.size(); ++p) {
                t << " " << path_name(rep.decomposition.id_of(p)) << "=" << sa.stream_of_path[p];
            }
            t << "\n";
        }
        if (!rep.diagnostic.empty()) t << "diagnostic: " << rep.diagnostic << "\n";

        if (!a.code_out.empty() && rep.assignment) {
            SynthesisOptions so;
            so.seed = seed;
            const LinearCode code = synthesize_code(g, rep.decomposition, *rep.assignment, so);
            write_file(a.code_out, code_to_json(g, code));
            t << "code: " << a.code_out << "\n";
        }
        if (!a.emit_dot.empty()) {
            fs::create_directories(a.emit_dot);
            const std::string base = (fs::path(a.emit_dot) / stem_of(file)).string();
            write_file(base + ".network.dot", network_to_dot(g));
            if (rep.graph) {
                const std::vector<std::size_t>* colors = rep.coloring ? &rep.coloring->color_of : nullptr;
                write_file(base + ".coloring.dot", coloring_graph_to_dot(*rep.graph, colors));
            }
        }
        res.text = t.str();
    } catch (const Error& e) {
        res.code = exit_for(e);
        res.text = std::string("error: ") + e.what() + "\n";
        res.json = ojson{{"schema", 1}, {"error", e.what()}};
    }
    return res;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    if (a.files.size() > 1 && (!a.paths.empty() || !a.code_out.empty())) {
        throw UsageError("--paths and --code-out need a single network file");
    }
    const std::uint64_t seed = resolve_seed(a.seed);
    std::vector<SolveResult> results(a.files.size());
    const std::size_t jobs = std::max<std::size_t>(1, std::min(a.jobs, a.files.size()));
    if (jobs == 1) {
        for (std::size_t i = 0; i < a.files.size(); ++i) results[i] = solve_file(a.files[i], a, seed);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < jobs; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i; (i = next++) < a.files.size();) results[i] = solve_file(a.files[i], a, seed);
            });
        }
        for (auto& t : pool) t.join();
    }

    int code = exit_ok;
    for (const auto& r : results) code = std::max(code, r.code);
    if (a.format == "json") {
        if (a.files.size() == 1) {
            out << results[0].json.dump(2) << "\n";
        } else {
            ojson arr = ojson::array();
            for (std::size_t i = 0; i < results.size(); ++i) {
                ojson o;
                o["file"] = a.files[i];
                o["report"] = results[i].json;
                arr.push_back(o);
            }
            out << arr.dump(2) << "\n";
        }
    } else {
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (a.files.size() > 1) out << "== " << a.files[i] << "\n";
            (results[i].code >= exit_usage ? err : out) << results[i].text;
        }
    }
    return code;
}

// ---- analyze -------------------------------------------------------------

struct AnalyzeArgs {
    std::string file;
    std::string paths;
    std::size_t nbar = 0;
    double timeout = 30;
    std::string format = "text";
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
    const NetworkInstance g = load_network(a.file);
    const PathDecomposition d = a.paths.empty() ? decompose(g) : load_paths(g, a.paths);
    const ContaminationReport r = contamination_sets(g, d);
    const std::size_t nbar = a.nbar ? a.nbar : d.n();
    const ColoringGraph cg = build_coloring_graph(d, r, nbar);
    const std::size_t omega = max_clique_size(cg);
    const BergeVerdict berge = is_berge(cg.graph, a.timeout > 0 ? Deadline::after_seconds(a.timeout) : Deadline{});

    if (a.format == "json") {
        ojson j;
        j["schema"] = 1;
        std::vector<std::size_t> nj;
        for (std::size_t s = 0; s < d.sink_count(); ++s) nj.push_back(d.paths_to(s));
        j["n_j"] = nj;
        j["n"] = d.n();
        j["nbar"] = nbar;
        ojson c = contamination_json(d, r);
        j["contamination"] = c["contamination"];
        j["m"] = c["m"];
        ojson ov = ojson::object();
        for (const auto& [pair, edges] : r.overlap_edges) {
            ojson list = ojson::array();
            for (EdgeId e : edges) list.push_back(edge_label(g, e));
            ov[path_name(d.id_of(pair.first)) + "|" + path_name(d.id_of(pair.second))] = list;
        }
        j["overlaps"] = ov;
        ojson gj;
        gj["vertices"] = cg.graph.vertex_count();
        gj["edges"] = cg.graph.edge_count();
        gj["fictitious"] = cg.graph.vertex_count() - d.total_paths();
        gj["omega"] = omega;
        ojson b = witness_json(cg, berge);
        gj["berge"] = b["verdict"];
        gj["witness"] = b["witness"];
        gj["omega_exceeds_nbar"] = omega > nbar;
        j["coloring_graph"] = gj;
        out << j.dump(2) << "\n";
    } else {
        out << "sinks: " << d.sink_count() << "\n";
        for (std::size_t s = 0; s < d.sink_count(); ++s) {
            out << "  " << g.name(g.sink(s)) << ": n_" << s + 1 << " = " << d.paths_to(s) << "\n";
        }
        out << "n: " << d.n() << ", nbar: " << nbar << "\n";
        out << "contamination:\n";
        for (std::size_t p = 0; p < r.sets.size(); ++p) {
            out << "  D" << path_name(d.id_of(p)) << " = {";
            for (std::size_t i = 0; i < r.sets[p].size(); ++i) out << (i ? ", " : "") << path_name(d.id_of(r.sets[p][i]));
            out << "}\n";
        }
        out << "m:\n";
        for (const auto& row : r.m) out << "  " << join(row) << "\n";
        out << "coloring graph: " << cg.graph.vertex_count() << " vertices, " << cg.graph.edge_count()
            << " edges, omega " << omega << "\n";
        out << "berge: "
            << (berge.status == BergeStatus::berge ? "yes" : berge.status == BergeStatus::not_berge ? "no" : "unknown");
        if (berge.witness) {
            out << " (" << (berge.witness->kind == CycleKind::hole ? "hole" : "antihole") << ":";
            for (std::size_t v : berge.witness->cycle) out << " " << cg.vertex_name(v);
            out << ")";
        }
        out << "\n";
        if (berge.status == BergeStatus::berge) {
            out << "decision: " << (omega <= nbar ? "colorable with nbar colors" : "infeasible at nbar") << "\n";
        } else if (omega > nbar) {
            out << "decision: infeasible at nbar\n";
        }
    }
    return exit_ok;
}

// ---- reduce --------------------------------------------------------------

struct ReduceArgs {
    std::string file;
    std::string net_out;
    std::string paths_out;
    std::string mapping_out;
};

std::string sink_name(const ReductionOutput& r, std::size_t j) { return r.network.name(r.network.sink(j)); }

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
    const ColoringInstance c = parse_coloring(read_file(a.file));
    const ReductionOutput r = reduce_coloring_to_network(c);
    write_file(a.net_out, serialize_network(r.network));
    std::string paths_out = a.paths_out;
    if (paths_out.empty()) paths_out = (fs::path(a.net_out).replace_extension(".paths")).string();
    write_file(paths_out, serialize_paths(r.network, r.paths));
    if (!a.mapping_out.empty()) {
        ojson j;
        j["schema"] = 1;
        ojson links = ojson::object();
        for (std::size_t v = 0; v < c.vertices.size(); ++v) links[c.vertices[v]] = edge_label(r.network, r.vertex_to_link[v]);
        j["vertex_to_link"] = links;
        ojson sinks = ojson::array();
        for (std::size_t k = 0; k < c.edges.size(); ++k) {
            sinks.push_back({{"edge", {c.vertices[c.edges[k].first], c.vertices[c.edges[k].second]}},
                             {"sink", sink_name(r, r.edge_to_sink[k])}});
        }
        j["edge_to_sink"] = sinks;
        ojson vs = ojson::object();
        for (std::size_t v = 0; v < c.vertices.size(); ++v) vs[c.vertices[v]] = sink_name(r, r.vertex_to_sink[v]);
        j["vertex_to_sink"] = vs;
        j["color_sink"] = sink_name(r, r.color_sink);
        write_file(a.mapping_out, j.dump(2) + "\n");
    }
    out << "sinks: " << r.network.sink_count() << "\npaths: " << r.paths.total_paths()
        << "\nedges: " << r.network.edge_count() << "\nnetwork: " << a.net_out << "\npaths file: " << paths_out
        << "\n";
    return exit_ok;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
    std::string file;
    std::string document;
    std::string paths;
    std::string format = "text";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const NetworkInstance g = load_network(a.file);
    const PathDecomposition d = a.paths.empty() ? decompose(g) : load_paths(g, a.paths);
    const ContaminationReport r = contamination_sets(g, d);
    const StreamAssignment sa = assignment_from_json(d, read_file(a.document));
    const VerifyResult v = verify_assignment(d, r, sa);
    if (a.format == "json") {
        ojson j;
        j["schema"] = 1;
        j["accepted"] = v.ok;
        j["checks"] = v.checks;
        j["rates"] = sa.rates;
        j["violations"] = violations_json(d, v);
        out << j.dump(2) << "\n";
    } else {
        out << (v.ok ? "accepted" : "rejected") << " (" << v.checks << " contamination checks)\n";
        for (const Violation& x : v.violations) out << "  " << x.message << "\n";
    }
    return v.ok ? exit_ok : exit_infeasible;
}

// ---- simulate ------------------------------------------------------------

struct SimulateArgs {
    std::string file;
    std::string code;
    std::size_t trials = 1000;
    std::string seed;
    std::string format = "text";
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
    const NetworkInstance g = load_network(a.file);
    const LinearCode code = code_from_json(g, read_file(a.code));
    const bool consistent = check_consistency(g, code);
    const SimulationReport rep = simulate(g, code, a.trials, resolve_seed(a.seed));
    const bool ok = consistent && rep.all_exact();
    if (a.format == "json") {
        ojson j;
        j["schema"] = 1;
        j["consistent"] = consistent;
        j["trials"] = rep.trials;
        ojson sinks = ojson::array();
        for (std::size_t s = 0; s < rep.sinks.size(); ++s) {
            sinks.push_back({{"sink", g.name(g.sink(s))},
                             {"exact", rep.sinks[s].exact},
                             {"rate", code.sinks[s].streams.size()}});
        }
        j["sinks"] = sinks;
        j["all_exact"] = rep.all_exact();
        out << j.dump(2) << "\n";
    } else {
        out << "consistent: " << (consistent ? "yes" : "no") << "\n";
        for (std::size_t s = 0; s < rep.sinks.size(); ++s) {
            out << g.name(g.sink(s)) << ": " << rep.sinks[s].exact << "/" << rep.sinks[s].trials
                << " exact decodes at rate " << code.sinks[s].streams.size() << "\n";
        }
    }
    return ok ? exit_ok : exit_infeasible;
}

// ---- oracle --------------------------------------------------------------

struct OracleArgs {
    std::string file;
    std::string paths;
    std::size_t nbar = 0;
    std::size_t cap = 24;
    std::size_t max_nbar = 4;
    std::string format = "text";
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
    const NetworkInstance g = load_network(a.file);
    const PathDecomposition d = a.paths.empty() ? decompose(g) : load_paths(g, a.paths);
    const ContaminationReport r = contamination_sets(g, d);
    const std::size_t nbar = a.nbar ? a.nbar : d.n();
    const auto found = brute_force_assign(d, r, nbar, BruteForceCaps{a.cap, a.max_nbar});
    if (a.format == "json") {
        ojson j;
        j["schema"] = 1;
        j["n"] = d.n();
        j["nbar"] = nbar;
        j["paths"] = d.total_paths();
        j["feasible"] = found.has_value();
        j["assignment"] = found ? assignment_json(d, *found)["assignment"] : ojson(nullptr);
        out << j.dump(2) << "\n";
    } else {
        out << "n: " << d.n() << ", nbar: " << nbar << ", paths: " << d.total_paths() << "\n";
        out << (found ? "feasible" : "infeasible") << "\n";
        if (found) {
            out << "assignment:";
            for (std::size_t p = 0; p < found->stream_of_path.size(); ++p) {
                out << " " << path_name(d.id_of(p)) << "=" << found->stream_of_path[p];
            }
            out << "\n";
        }
    }
    return found ? exit_ok : exit_infeasible;
}

// ---- gen -----------------------------------------------------------------

struct GenArgs {
    std::string kind;
    CorpusParams params;
    std::string seed;
    std::string dir = ".";
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    const auto files = generate_corpus(a.kind, a.params, resolve_seed(a.seed));
    fs::create_directories(a.dir);
    for (const auto& f : files) {
        const std::string path = (fs::path(a.dir) / f.filename).string();
        write_file(path, f.contents);
        out << path << "\n";
    }
    return exit_ok;
}

// ---- export-dot ----------------------------------------------------------

struct DotArgs {
    std::string file;
    std::string paths;
    bool coloring_graph = false;
    std::size_t nbar = 0;
    std::string output;
};

int cmd_dot(const DotArgs& a, std::ostream& out) {
    const NetworkInstance g = load_network(a.file);
    std::string dot;
    if (a.coloring_graph) {
        const PathDecomposition d = a.paths.empty() ? decompose(g) : load_paths(g, a.paths);
        const ContaminationReport r = contamination_sets(g, d);
        dot = coloring_graph_to_dot(build_coloring_graph(d, r, a.nbar ? a.nbar : d.n()));
    } else {
        dot = network_to_dot(g);
    }
    if (a.output.empty()) {
        out << dot;
    } else {
        write_file(a.output, dot);
    }
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Non-uniform demand network coding solver"};
    app.name("nudcode");
    app.require_subcommand(1);
    const auto formats = CLI::IsMember({"json", "text"});

    SolveArgs sv;
    auto* solve_cmd = app.add_subcommand("solve", "Decide and construct a saturating, decodable stream assignment");
    solve_cmd->add_option("files", sv.files, "Network files")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--nbar", sv.nbar, "Stream budget: integer or 'auto' (default n)");
    solve_cmd->add_option("--ceiling", sv.ceiling, "Extra budgets tried by --nbar auto")->capture_default_str();
    solve_cmd->add_option("--seed", sv.seed, "Seed (default $NUDCODE_SEED or 0)");
    solve_cmd->add_option("--timeout", sv.timeout, "Search time limit in seconds; 0 disables")->capture_default_str();
    solve_cmd->add_option("--paths", sv.paths, "Path decomposition override")->check(CLI::ExistingFile);
    solve_cmd->add_option("--format", sv.format)->check(formats)->capture_default_str();
    solve_cmd->add_option("--emit-dot", sv.emit_dot, "Write network and coloring-graph DOT files here");
    solve_cmd->add_option("--code-out", sv.code_out, "Synthesize a linear code and write it as JSON");
    solve_cmd->add_option("--jobs", sv.jobs, "Solve files concurrently")->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--no-berge", sv.no_berge, "Skip the odd hole/antihole search");

    AnalyzeArgs an;
    auto* analyze_cmd = app.add_subcommand("analyze", "Paths, contamination, overlap counts and coloring-graph stats");
    analyze_cmd->add_option("file", an.file)->required()->check(CLI::ExistingFile);
    analyze_cmd->add_option("--paths", an.paths)->check(CLI::ExistingFile);
    analyze_cmd->add_option("--nbar", an.nbar)->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--timeout", an.timeout, "Berge search limit in seconds")->capture_default_str();
    analyze_cmd->add_option("--format", an.format)->check(formats)->capture_default_str();

    ReduceArgs rd;
    auto* reduce_cmd = app.add_subcommand("reduce", "Build a network from a graph coloring instance");
    reduce_cmd->add_option("file", rd.file, "Coloring instance")->required()->check(CLI::ExistingFile);
    reduce_cmd->add_option("-o,--output", rd.net_out, "Network file to write")->required();
    reduce_cmd->add_option("--paths-out", rd.paths_out, "Path file (default: output with .paths)");
    reduce_cmd->add_option("--mapping-out", rd.mapping_out, "JSON vertex/edge to network mapping");

    VerifyArgs vf;
    auto* verify_cmd = app.add_subcommand("verify", "Check an assignment or coloring document");
    verify_cmd->add_option("file", vf.file)->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("document", vf.document)->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("--paths", vf.paths)->check(CLI::ExistingFile);
    verify_cmd->add_option("--format", vf.format)->check(formats)->capture_default_str();

    SimulateArgs sm;
    auto* simulate_cmd = app.add_subcommand("simulate", "Send random symbols through a code and decode at each sink");
    simulate_cmd->add_option("file", sm.file)->required()->check(CLI::ExistingFile);
    simulate_cmd->add_option("code", sm.code)->required()->check(CLI::ExistingFile);
    simulate_cmd->add_option("--trials", sm.trials)->capture_default_str();
    simulate_cmd->add_option("--seed", sm.seed);
    simulate_cmd->add_option("--format", sm.format)->check(formats)->capture_default_str();

    OracleArgs oc;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive stream-assignment search");
    oracle_cmd->add_option("file", oc.file)->required()->check(CLI::ExistingFile);
    oracle_cmd->add_option("--paths", oc.paths)->check(CLI::ExistingFile);
    oracle_cmd->add_option("--nbar", oc.nbar)->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--cap", oc.cap, "Maximum total paths")->capture_default_str();
    oracle_cmd->add_option("--max-nbar", oc.max_nbar)->capture_default_str();
    oracle_cmd->add_option("--format", oc.format)->check(formats)->capture_default_str();

    GenArgs gn;
    auto* gen_cmd = app.add_subcommand("gen", "Write instance files");
    gen_cmd->add_option("kind", gn.kind)
        ->required()
        ->check(CLI::IsMember({"cycle", "complete", "random-gnp", "paper-fixtures"}));
    gen_cmd->add_option("--size", gn.params.size, "Cycle length, clique size or vertex count")->capture_default_str();
    gen_cmd->add_option("--p", gn.params.probability)->capture_default_str();
    gen_cmd->add_option("--colors", gn.params.colors)->check(CLI::PositiveNumber)->capture_default_str();
    gen_cmd->add_option("--count", gn.params.count)->capture_default_str();
    gen_cmd->add_option("--seed", gn.seed);
    gen_cmd->add_option("-o,--output-dir", gn.dir)->capture_default_str();

    DotArgs dt;
    auto* dot_cmd = app.add_subcommand("export-dot", "DOT rendering of a network or its coloring graph");
    dot_cmd->add_option("file", dt.file)->required()->check(CLI::ExistingFile);
    dot_cmd->add_flag("--coloring-graph", dt.coloring_graph);
    dot_cmd->add_option("--paths", dt.paths)->check(CLI::ExistingFile);
    dot_cmd->add_option("--nbar", dt.nbar)->check(CLI::PositiveNumber);
    dot_cmd->add_option("-o,--output", dt.output);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*solve_cmd) return cmd_solve(sv, out, err);
        if (*analyze_cmd) return cmd_analyze(an, out);
        if (*reduce_cmd) return cmd_reduce(rd, out);
        if (*verify_cmd) return cmd_verify(vf, out);
        if (*simulate_cmd) return cmd_simulate(sm, out);
        if (*oracle_cmd) return cmd_oracle(oc, out);
        if (*gen_cmd) return cmd_gen(gn, out);
        if (*dot_cmd) return cmd_dot(dt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_for(e);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_usage;
}

}  // namespace nudcode::cli
