#include "nudcode/solver.hpp"

#include <algorithm>
#include <chrono>

#include "nudcode/errors.hpp"

namespace nudcode {

std::vector<std::size_t> achieved_rates(const PathDecomposition& d, const StreamAssignment& a) {
    std::vector<std::size_t> rates(d.sink_count(), 0);
    for (std::size_t p = 0; p < a.stream_of_path.size() && p < d.total_paths(); ++p) {
        if (a.stream_of_path[p] != 0) ++rates[d.id_of(p).sink];
    }
    return rates;
}

VerifyResult verify_assignment(const PathDecomposition& d, const ContaminationReport& r, const StreamAssignment& a) {
    const std::size_t total = d.total_paths();
    if (a.stream_of_path.size() != total) {
        throw ShapeError("assignment covers " + std::to_string(a.stream_of_path.size()) + " paths, decomposition has " +
                         std::to_string(total));
    }
    if (r.sets.size() != total) throw ShapeError("contamination report does not match decomposition");
    if (a.nbar == 0) throw ShapeError("assignment has no stream budget");

    VerifyResult res;
    auto fail = [&](ViolationKind kind, std::size_t sink, std::size_t stream, std::size_t path, std::string msg) {
        res.ok = false;
        res.violations.push_back({kind, sink, stream, path, std::move(msg)});
    };

    const std::size_t t = d.sink_count();
    std::vector<std::vector<char>> holds(t, std::vector<char>(a.nbar + 1, 0));
    for (std::size_t p = 0; p < total; ++p) {
        const PathId id = d.id_of(p);
        const std::size_t s = a.stream_of_path[p];
        if (s == 0) {
            fail(ViolationKind::unassigned, id.sink, 0, p, "path " + path_name(id) + " has no stream");
            continue;
        }
        if (s > a.nbar) {
            fail(ViolationKind::out_of_range, id.sink, s, p,
                 "path " + path_name(id) + " uses stream " + std::to_string(s) + " beyond n-bar " +
                     std::to_string(a.nbar));
            continue;
        }
        if (holds[id.sink][s]) {
            fail(ViolationKind::duplicate_stream, id.sink, s, p,
                 "sink " + std::to_string(id.sink + 1) + " gets stream " + std::to_string(s) + " twice (path " +
                     path_name(id) + ")");
        }
        holds[id.sink][s] = 1;
    }

    for (std::size_t q = 0; q < total; ++q) {
        const std::size_t s = a.stream_of_path[q];
        for (std::size_t j = 0; j < t; ++j) {
            if (j == r.path_sink[q] || !r.contaminates_sink(q, j)) continue;
            ++res.checks;
            if (s == 0 || s > a.nbar) continue;  // reported above
            if (!holds[j][s]) {
                fail(ViolationKind::contaminant, j, s, q,
                     "sink " + std::to_string(j + 1) + " is contaminated by stream " + std::to_string(s) +
                         " from path " + path_name(d.id_of(q)) + " but carries no path with that stream");
            }
        }
    }
    return res;
}

namespace {

class BruteForce {
public:
    BruteForce(const PathDecomposition& d, const ContaminationReport& r, std::size_t nbar)
        : d_(d), r_(r), nbar_(nbar), total_(d.total_paths()), t_(d.sink_count()), f_(total_, 0),
          used_(t_, std::vector<char>(nbar + 1, 0)), req_(t_, std::vector<std::size_t>(nbar + 1, 0)),
          assigned_(t_, 0) {
        hits_.resize(total_);
        for (std::size_t p = 0; p < total_; ++p) {
            for (std::size_t j = 0; j < t_; ++j) {
                if (j != r.path_sink[p] && r.contaminates_sink(p, j)) hits_[p].push_back(j);
            }
        }
    }

    std::optional<StreamAssignment> run() {
        if (!extend(0)) return std::nullopt;
        StreamAssignment a{f_, nbar_, {}};
        a.rates = achieved_rates(d_, a);
        return a;
    }

private:
    bool feasible(std::size_t j) const {
        std::size_t need = 0;
        for (std::size_t c = 1; c <= nbar_; ++c) {
            if (req_[j][c] && !used_[j][c]) ++need;
        }
        return need <= d_.paths_to(j) - assigned_[j];
    }

    bool extend(std::size_t p) {
        if (p == total_) {
            return verify_assignment(d_, r_, StreamAssignment{f_, nbar_, {}}).ok;
        }
        const std::size_t j = r_.path_sink[p];
        for (std::size_t c = 1; c <= nbar_; ++c) {
            if (used_[j][c]) continue;
            f_[p] = c;
            used_[j][c] = 1;
            ++assigned_[j];
            for (std::size_t h : hits_[p]) ++req_[h][c];

            bool ok = feasible(j);
            for (std::size_t h : hits_[p]) ok = ok && feasible(h);
            if (ok && extend(p + 1)) return true;

            for (std::size_t h : hits_[p]) --req_[h][c];
            --assigned_[j];
            used_[j][c] = 0;
            f_[p] = 0;
        }
        return false;
    }

    const PathDecomposition& d_;
    const ContaminationReport& r_;
    std::size_t nbar_;
    std::size_t total_;
    std::size_t t_;
    std::vector<std::size_t> f_;
    std::vector<std::vector<char>> used_;
    std::vector<std::vector<std::size_t>> req_;  // [j][c]: assigned contaminants of j with stream c
    std::vector<std::size_t> assigned_;
    std::vector<std::vector<std::size_t>> hits_;
};

}  // namespace

std::optional<StreamAssignment> brute_force_assign(const PathDecomposition& d, const ContaminationReport& r,
                                                   std::size_t nbar, const BruteForceCaps& caps) {
    if (d.total_paths() > caps.max_paths) {
        throw CapError(std::to_string(d.total_paths()) + " paths exceed the brute-force cap of " +
                       std::to_string(caps.max_paths));
    }
    if (nbar > caps.max_nbar) {
        throw CapError("n-bar " + std::to_string(nbar) + " exceeds the brute-force cap of " +
                       std::to_string(caps.max_nbar));
    }
    if (nbar == 0) throw BudgetError("n-bar must be positive");
    if (nbar < d.n()) return std::nullopt;
    return BruteForce(d, r, nbar).run();
}

StreamAssignment assignment_from_coloring(const PathDecomposition& d, const ColoringGraph& cg, const Coloring& c) {
    if (c.color_of.size() != cg.vertices.size()) throw ShapeError("coloring does not match the coloring graph");
    StreamAssignment a;
    a.nbar = cg.stream_budget;
    a.stream_of_path.resize(d.total_paths());
    for (std::size_t p = 0; p < d.total_paths(); ++p) {
        const PathId id = d.id_of(p);
        a.stream_of_path[p] = c.color_of.at(cg.regular_vertex(id.sink, id.k));
    }
    a.rates = achieved_rates(d, a);
    return a;
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::solution: return "solution";
        case Outcome::infeasible: return "infeasible";
        case Outcome::unknown: return "unknown";
    }
    return "unknown";
}

SolveReport solve(const NetworkInstance& g, const SolveOptions& opts) {
    using clock = std::chrono::steady_clock;
    const auto started = clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(clock::now() - started).count(); };

    SolveReport rep;
    if (opts.paths) {
        validate_decomposition(g, *opts.paths);
        rep.decomposition = *opts.paths;
    } else {
        rep.decomposition = decompose(g);
    }
    const PathDecomposition& d = rep.decomposition;
    rep.contamination = contamination_sets(g, d);
    const std::size_t n = d.n();

    std::vector<std::size_t> budgets;
    if (opts.auto_nbar) {
        for (std::size_t k = 0; k <= opts.auto_ceiling; ++k) budgets.push_back(n + k);
    } else {
        budgets.push_back(opts.nbar.value_or(n));
    }

    const bool limited = opts.timeout_seconds > 0;
    const Deadline deadline = limited ? Deadline::after_seconds(opts.timeout_seconds) : Deadline{};
    bool any_unknown = false;
    bool all_clique = true;

    for (std::size_t nbar : budgets) {
        ColoringGraph cg = build_coloring_graph(d, rep.contamination, nbar);
        Attempt at;
        at.nbar = nbar;
        at.vertices = cg.graph.vertex_count();
        at.edges = cg.graph.edge_count();
        at.omega = max_clique_size(cg);

        if (opts.check_berge) {
            double budget = opts.berge_timeout_seconds;
            if (limited) budget = std::min(budget, std::max(0.0, opts.timeout_seconds - elapsed()));
            at.berge = is_berge(cg.graph, budget > 0 ? Deadline::after_seconds(budget) : Deadline{});
            at.berge_checked = true;
            if (at.berge.witness)
                for (std::size_t v : at.berge.witness->cycle) at.witness_names.push_back(cg.vertex_name(v));
        }

        if (at.omega > nbar) {
            at.outcome = Outcome::infeasible;
            at.note = "clique of size " + std::to_string(at.omega) + " exceeds n-bar " + std::to_string(nbar);
            rep.attempts.push_back(std::move(at));
            rep.graph = std::move(cg);
            continue;
        }
        all_clique = false;

        std::optional<Coloring> coloring;
        try {
            if (nbar == 2) {
                coloring = two_colorable(cg.graph);
                at.used_two_coloring = true;
            } else {
                ColoringOptions co;
                co.seed = opts.seed;
                co.deadline = deadline;
                co.clique_hint = max_clique_vertices(cg);
                coloring = color_exact(cg.graph, nbar, co, &at.coloring);
            }
        } catch (const TimeoutError&) {
            at.outcome = Outcome::unknown;
            at.note = "coloring search timed out";
            any_unknown = true;
            rep.attempts.push_back(std::move(at));
            rep.graph = std::move(cg);
            continue;
        }

        if (!coloring) {
            at.outcome = Outcome::infeasible;
            at.note = "no proper coloring with n-bar colors";
            rep.attempts.push_back(std::move(at));
            rep.graph = std::move(cg);
            continue;
        }

        StreamAssignment a = assignment_from_coloring(d, cg, *coloring);
        const VerifyResult v = verify_assignment(d, rep.contamination, a);
        if (!v.ok) throw StructureError("coloring produced an assignment that fails verification: " +
                                        v.violations.front().message);
        at.outcome = Outcome::solution;
        rep.attempts.push_back(std::move(at));
        rep.outcome = Outcome::solution;
        rep.assignment = std::move(a);
        rep.coloring = std::move(coloring);
        rep.graph = std::move(cg);
        rep.seconds = elapsed();
        return rep;
    }

    rep.outcome = any_unknown ? Outcome::unknown : Outcome::infeasible;
    if (rep.outcome == Outcome::infeasible && all_clique) {
        if (opts.auto_nbar) {
            rep.diagnostic = "ω exceeds n̄ for all n̄ ≤ n+" + std::to_string(opts.auto_ceiling) + " (n = " +
                             std::to_string(n) + ")";
        } else {
            rep.diagnostic = "ω = " + std::to_string(rep.attempts.back().omega) + " exceeds n̄ = " +
                             std::to_string(budgets.back());
        }
    } else if (rep.outcome == Outcome::infeasible) {
        rep.diagnostic = "no n̄-coloring of the coloring graph for any n̄ tried";
    } else {
        rep.diagnostic = "search budget exhausted before a verdict";
    }
    rep.seconds = elapsed();
    return rep;
}

}  // namespace nudcode
