#include "nudcode/contamination.hpp"

#include <algorithm>

#include "nudcode/errors.hpp"

namespace nudcode {

bool ContaminationReport::contaminates(std::size_t p, std::size_t q) const {
    const auto& s = sets.at(p);
    return std::binary_search(s.begin(), s.end(), q);
}

bool ContaminationReport::contaminates_sink(std::size_t p, std::size_t j) const {
    return std::any_of(sets.at(p).begin(), sets.at(p).end(), [&](std::size_t q) { return path_sink[q] == j; });
}

namespace {

struct Occurrence {
    std::size_t path;
    std::size_t position;
};

}  // namespace

ContaminationReport contamination_sets(const NetworkInstance& g, const PathDecomposition& d) {
    const std::size_t total = d.total_paths();
    ContaminationReport r;
    r.path_sink.resize(total);
    for (std::size_t j = 0; j < d.sink_count(); ++j) r.paths_per_sink.push_back(d.paths_to(j));

    std::vector<std::vector<Occurrence>> on_edge(g.edge_count());
    for (std::size_t p = 0; p < total; ++p) {
        r.path_sink[p] = d.id_of(p).sink;
        const Path& path = d.path(p);
        for (std::size_t i = 0; i < path.size(); ++i) on_edge.at(path[i]).push_back({p, i});
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& occ = on_edge[e];
        for (std::size_t a = 0; a < occ.size(); ++a) {
            for (std::size_t b = a + 1; b < occ.size(); ++b) {
                std::size_t p = occ[a].path, q = occ[b].path;
                if (r.path_sink[p] == r.path_sink[q]) {
                    throw StructureError("paths " + path_name(d.id_of(p)) + " and " + path_name(d.id_of(q)) +
                                         " to the same sink share edge " + edge_label(g, e));
                }
                r.overlap_edges[{std::min(p, q), std::max(p, q)}].push_back(e);
            }
        }
    }

    // down[p][i]: paths contaminated by p at edges at or after position i
    // on p. One extra slot at the end stays empty.
    std::vector<std::vector<std::vector<char>>> down(total);
    for (std::size_t p = 0; p < total; ++p) {
        down[p].assign(d.path(p).size() + 1, std::vector<char>(total, 0));
    }

    auto merge = [](std::vector<char>& into, const std::vector<char>& from) {
        bool changed = false;
        for (std::size_t i = 0; i < into.size(); ++i) {
            if (from[i] && !into[i]) {
                into[i] = 1;
                changed = true;
            }
        }
        return changed;
    };

    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t p = 0; p < total; ++p) {
            const Path& path = d.path(p);
            for (std::size_t i = path.size(); i-- > 0;) {
                auto& cur = down[p][i];
                bool grew = merge(cur, down[p][i + 1]);
                for (const Occurrence& o : on_edge[path[i]]) {
                    if (o.path == p) continue;
                    if (!cur[o.path]) {
                        cur[o.path] = 1;
                        grew = true;
                    }
                    grew |= merge(cur, down[o.path][o.position + 1]);
                }
                changed |= grew;
            }
        }
        if (changed) ++r.iterations;
    }

    r.sets.resize(total);
    for (std::size_t p = 0; p < total; ++p) {
        for (std::size_t q = 0; q < total; ++q) {
            // Spread back onto the path's own sink is never a decodability
            // constraint, so D_jk keeps other sinks only.
            if (down[p][0][q] && r.path_sink[q] != r.path_sink[p]) r.sets[p].push_back(q);
        }
    }
    r.m = overlap_matrix(r);
    return r;
}

std::vector<std::vector<std::size_t>> overlap_matrix(const ContaminationReport& r) {
    const std::size_t t = r.paths_per_sink.size();
    std::vector<std::vector<std::size_t>> m(t, std::vector<std::size_t>(t, 0));
    for (std::size_t p = 0; p < r.sets.size(); ++p) {
        std::vector<char> hit(t, 0);
        for (std::size_t q : r.sets[p]) hit[r.path_sink[q]] = 1;
        for (std::size_t j = 0; j < t; ++j) {
            if (hit[j] && j != r.path_sink[p]) ++m[r.path_sink[p]][j];
        }
    }
    return m;
}

}  // namespace nudcode
