#include "nudcode/colorgraph.hpp"

#include <algorithm>
#include <sstream>

#include "nudcode/errors.hpp"

namespace nudcode {

std::string ColoringGraph::vertex_name(std::size_t v) const {
    const ColoringVertex& cv = vertices.at(v);
    return std::string(cv.kind == VertexKind::regular ? "v" : "w") + std::to_string(cv.sink + 1) + "." +
           std::to_string(cv.slot + 1);
}

std::optional<std::size_t> ColoringGraph::find_vertex(std::string_view name) const {
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (vertex_name(v) == name) return v;
    }
    return std::nullopt;
}

ColoringGraph build_coloring_graph(const PathDecomposition& d, const ContaminationReport& r, std::size_t nbar) {
    if (nbar < d.n()) {
        throw BudgetError("stream budget " + std::to_string(nbar) + " is below n = " + std::to_string(d.n()));
    }
    if (r.sets.size() != d.total_paths()) throw ShapeError("contamination report does not match decomposition");

    ColoringGraph cg;
    cg.stream_budget = nbar;
    const std::size_t t = d.sink_count();
    std::size_t flat = 0;
    for (std::size_t j = 0; j < t; ++j) {
        cg.group_begin.push_back(cg.vertices.size());
        cg.regular_count.push_back(d.paths_to(j));
        for (std::size_t k = 0; k < d.paths_to(j); ++k) {
            cg.vertices.push_back({j, k, VertexKind::regular, flat++});
        }
        for (std::size_t k = 0; k < nbar - d.paths_to(j); ++k) {
            cg.vertices.push_back({j, k, VertexKind::fictitious, 0});
        }
    }
    cg.group_begin.push_back(cg.vertices.size());

    cg.graph = UndirectedGraph(cg.vertices.size());
    for (std::size_t j = 0; j < t; ++j) {
        for (std::size_t a = cg.group_begin[j]; a < cg.group_begin[j + 1]; ++a) {
            for (std::size_t b = a + 1; b < cg.group_begin[j + 1]; ++b) cg.graph.add_edge(a, b);
        }
    }
    for (std::size_t j = 0; j < t; ++j) {
        for (std::size_t k = 0; k < d.paths_to(j); ++k) {
            const std::size_t p = d.flat({j, k});
            for (std::size_t jp = 0; jp < t; ++jp) {
                if (jp == j || !r.contaminates_sink(p, jp)) continue;
                for (std::size_t kp = 0; kp < cg.fictitious_count(jp); ++kp) {
                    cg.graph.add_edge(cg.regular_vertex(j, k), cg.fictitious_vertex(jp, kp));
                }
            }
        }
    }
    return cg;
}

void check_structure(const ColoringGraph& g) {
    const std::size_t t = g.sink_count();
    if (g.group_begin.size() != t + 1 || g.group_begin.back() != g.vertices.size() ||
        g.graph.vertex_count() != g.vertices.size()) {
        throw StructureError("coloring graph bookkeeping is inconsistent");
    }
    std::vector<std::size_t> group(g.vertices.size());
    for (std::size_t j = 0; j < t; ++j) {
        if (g.group_begin[j + 1] - g.group_begin[j] != g.stream_budget) {
            throw StructureError("sink subgraph " + std::to_string(j + 1) + " does not have n-bar vertices");
        }
        for (std::size_t v = g.group_begin[j]; v < g.group_begin[j + 1]; ++v) {
            group[v] = j;
            const bool regular = v - g.group_begin[j] < g.regular_count[j];
            if (g.vertices[v].sink != j || (g.vertices[v].kind == VertexKind::regular) != regular) {
                throw StructureError("vertex " + std::to_string(v) + " is misplaced");
            }
            for (std::size_t u = g.group_begin[j]; u < v; ++u) {
                if (!g.graph.adjacent(u, v)) throw StructureError("sink subgraph " + std::to_string(j + 1) + " is not a clique");
            }
        }
    }
    for (auto [u, v] : g.graph.edge_list()) {
        if (group[u] == group[v]) continue;
        if (g.vertices[u].kind == g.vertices[v].kind) {
            throw StructureError("cross edge " + g.vertex_name(u) + "-" + g.vertex_name(v) + " joins vertices of one kind");
        }
    }
    for (std::size_t j = 0; j < t; ++j) {
        for (std::size_t k = 0; k < g.regular_count[j]; ++k) {
            const std::size_t v = g.regular_vertex(j, k);
            for (std::size_t jp = 0; jp < t; ++jp) {
                if (jp == j) continue;
                std::size_t hits = 0;
                for (std::size_t kp = 0; kp < g.fictitious_count(jp); ++kp) {
                    hits += g.graph.adjacent(v, g.fictitious_vertex(jp, kp)) ? 1 : 0;
                }
                if (hits != 0 && hits != g.fictitious_count(jp)) {
                    throw StructureError(g.vertex_name(v) + " reaches only part of sink subgraph " + std::to_string(jp + 1));
                }
            }
        }
    }
}

namespace {

// m_{j,j'} counted on the graph, or 0 when sink j' has no fictitious vertices.
std::size_t graph_overlap_count(const ColoringGraph& g, std::size_t j, std::size_t jp) {
    if (g.fictitious_count(jp) == 0) return 0;
    std::size_t m = 0;
    for (std::size_t k = 0; k < g.regular_count[j]; ++k) {
        if (g.graph.adjacent(g.regular_vertex(j, k), g.fictitious_vertex(jp, 0))) ++m;
    }
    return m;
}

struct BestPair {
    std::size_t excess = 0;
    std::size_t j = 0;
    std::size_t jp = 0;
};

BestPair best_pair(const ColoringGraph& g) {
    check_structure(g);
    BestPair best;
    for (std::size_t j = 0; j < g.sink_count(); ++j) {
        for (std::size_t jp = 0; jp < g.sink_count(); ++jp) {
            if (j == jp) continue;
            const std::size_t m = graph_overlap_count(g, j, jp);
            if (m > g.regular_count[jp] && m - g.regular_count[jp] > best.excess) {
                best = {m - g.regular_count[jp], j, jp};
            }
        }
    }
    return best;
}

}  // namespace

std::size_t max_clique_size(const ColoringGraph& g) { return g.stream_budget + best_pair(g).excess; }

std::vector<std::size_t> max_clique_vertices(const ColoringGraph& g) {
    const BestPair best = best_pair(g);
    std::vector<std::size_t> clique;
    if (best.excess == 0) {
        if (g.sink_count() == 0) return clique;
        for (std::size_t v = g.group_begin[0]; v < g.group_begin[1]; ++v) clique.push_back(v);
        return clique;
    }
    for (std::size_t k = 0; k < g.regular_count[best.j]; ++k) {
        const std::size_t v = g.regular_vertex(best.j, k);
        if (g.graph.adjacent(v, g.fictitious_vertex(best.jp, 0))) clique.push_back(v);
    }
    for (std::size_t k = 0; k < g.fictitious_count(best.jp); ++k) clique.push_back(g.fictitious_vertex(best.jp, k));
    return clique;
}

namespace {

class InducedCycleSearch {
public:
    InducedCycleSearch(const UndirectedGraph& g, std::size_t length, const Deadline& deadline)
        : g_(g), n_(g.vertex_count()), length_(length), deadline_(deadline), adj_(n_ * n_, 0), on_path_(n_, 0) {
        for (auto [u, v] : g.edge_list()) {
            adj_[u * n_ + v] = 1;
            adj_[v * n_ + u] = 1;
        }
    }

    std::optional<std::vector<std::size_t>> run() {
        if (length_ < 3 || length_ > n_) return std::nullopt;
        for (std::size_t s = 0; s < n_; ++s) {
            path_.assign(1, s);
            on_path_[s] = 1;
            const bool found = extend();
            on_path_[s] = 0;
            if (found) return path_;
        }
        return std::nullopt;
    }

private:
    bool adj(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }

    bool extend() {
        if ((++steps_ & 0x3ff) == 0 && deadline_.expired()) throw TimeoutError("odd-hole search budget exhausted");
        const std::size_t i = path_.size();
        const std::size_t start = path_.front();
        for (std::size_t x : g_.neighbors(path_.back())) {
            if (x <= start || on_path_[x]) continue;
            bool chord = false;
            for (std::size_t m = 1; m + 1 < i && !chord; ++m) chord = adj(x, path_[m]);
            if (chord) continue;
            const bool closes = i >= 2 && adj(x, start);
            if (closes) {
                if (i + 1 == length_) {
                    path_.push_back(x);
                    return true;
                }
                continue;
            }
            if (i + 1 >= length_) continue;
            path_.push_back(x);
            on_path_[x] = 1;
            if (extend()) return true;
            on_path_[x] = 0;
            path_.pop_back();
        }
        return false;
    }

    const UndirectedGraph& g_;
    std::size_t n_;
    std::size_t length_;
    const Deadline& deadline_;
    std::vector<char> adj_;
    std::vector<char> on_path_;
    std::vector<std::size_t> path_;
    std::size_t steps_ = 0;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_induced_cycle(const UndirectedGraph& g, std::size_t length,
                                                           const Deadline& deadline) {
    return InducedCycleSearch(g, length, deadline).run();
}

HoleSearchResult find_odd_hole_or_antihole(const UndirectedGraph& g, std::size_t max_len, const Deadline& deadline) {
    if (max_len < 5 || max_len % 2 == 0) throw ValidationError("max_len must be odd and at least 5");
    HoleSearchResult result;
    try {
        std::optional<UndirectedGraph> complement;
        const std::size_t top = std::min(max_len, g.vertex_count());
        for (std::size_t len = 5; len <= top; len += 2) {
            if (auto c = find_induced_cycle(g, len, deadline)) {
                result.status = SearchStatus::found;
                result.witness = OddCycleWitness{CycleKind::hole, std::move(*c)};
                return result;
            }
            // A 5-antihole is itself a 5-hole, so complements start at 7.
            if (len >= 7) {
                if (!complement) complement = g.complement();
                if (auto c = find_induced_cycle(*complement, len, deadline)) {
                    result.status = SearchStatus::found;
                    result.witness = OddCycleWitness{CycleKind::antihole, std::move(*c)};
                    return result;
                }
            }
        }
    } catch (const TimeoutError&) {
        result.status = SearchStatus::budget_exhausted;
        result.witness.reset();
    }
    return result;
}

BergeVerdict is_berge(const UndirectedGraph& g, const Deadline& deadline) {
    std::size_t max_len = g.vertex_count() % 2 == 1 ? g.vertex_count() : g.vertex_count() - 1;
    if (g.vertex_count() < 5) return {BergeStatus::berge, std::nullopt};
    const HoleSearchResult r = find_odd_hole_or_antihole(g, max_len, deadline);
    switch (r.status) {
        case SearchStatus::found: return {BergeStatus::not_berge, r.witness};
        case SearchStatus::budget_exhausted: return {BergeStatus::unknown, std::nullopt};
        case SearchStatus::none_found: break;
    }
    return {BergeStatus::berge, std::nullopt};
}

std::string coloring_graph_to_dot(const ColoringGraph& g, const std::vector<std::size_t>* colors) {
    std::ostringstream out;
    out << "graph coloring {\n";
    for (std::size_t j = 0; j < g.sink_count(); ++j) {
        out << "  subgraph cluster_" << j + 1 << " {\n    label=\"sink " << j + 1 << "\";\n";
        for (std::size_t v = g.group_begin[j]; v < g.group_begin[j + 1]; ++v) {
            out << "    \"" << g.vertex_name(v) << "\" [shape=circle";
            if (g.vertices[v].kind == VertexKind::fictitious) out << ", style=dashed";
            if (colors) out << ", xlabel=\"" << colors->at(v) << "\"";
            out << "];\n";
        }
        out << "  }\n";
    }
    for (auto [u, v] : g.graph.edge_list()) {
        out << "  \"" << g.vertex_name(u) << "\" -- \"" << g.vertex_name(v) << "\"";
        if (g.vertices[u].sink != g.vertices[v].sink) out << " [style=bold]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace nudcode
