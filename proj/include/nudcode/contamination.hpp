#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "nudcode/flows.hpp"
#include "nudcode/netgraph.hpp"

namespace nudcode {

// Contamination sets D_jk, keyed by flat path index.
struct ContaminationReport {
    // sets[p]: sorted flat indices of paths to other sinks contaminated by p.
    std::vector<std::vector<std::size_t>> sets;
    // m[j][j']: number of paths to sink j contaminating some path to sink j'.
    std::vector<std::vector<std::size_t>> m;
    // Shared edges for every pair (a < b) of paths to different sinks.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<EdgeId>> overlap_edges;
    std::vector<std::size_t> path_sink;
    std::vector<std::size_t> paths_per_sink;
    // Propagation passes that changed at least one set.
    std::size_t iterations = 0;

    bool contaminates(std::size_t p, std::size_t q) const;
    // True iff p contaminates some path to sink j.
    bool contaminates_sink(std::size_t p, std::size_t j) const;
};

// Least fixed point of the recursive contamination definition. "Downstream"
// is read along the contaminated path: an overlap at edge e lets p pick up
// everything q spreads at edges strictly after e on q.
ContaminationReport contamination_sets(const NetworkInstance& g, const PathDecomposition& d);

// m_{j,j'} recomputed from the sets; zero diagonal.
std::vector<std::vector<std::size_t>> overlap_matrix(const ContaminationReport& r);

}  // namespace nudcode
