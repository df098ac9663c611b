#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nudcode/netgraph.hpp"

namespace nudcode {

// Edge sequence from the source to one sink.
using Path = std::vector<EdgeId>;

// Path p_{j,k}, 0-based. Printed 1-based as "j.k".
struct PathId {
    std::size_t sink = 0;
    std::size_t k = 0;
    friend bool operator==(const PathId&, const PathId&) = default;
    friend auto operator<=>(const PathId&, const PathId&) = default;
};

std::string path_name(PathId id);

// Per-sink sets of edge-disjoint paths. Paths are also addressed by a flat
// index: sinks in order, paths in order within a sink.
struct PathDecomposition {
    std::vector<std::vector<Path>> per_sink;

    std::size_t sink_count() const noexcept { return per_sink.size(); }
    std::size_t paths_to(std::size_t j) const { return per_sink.at(j).size(); }
    // n = max_j n_j
    std::size_t n() const noexcept;
    std::size_t total_paths() const noexcept;

    std::size_t flat(PathId id) const;
    PathId id_of(std::size_t flat_index) const;
    const Path& path(PathId id) const { return per_sink.at(id.sink).at(id.k); }
    const Path& path(std::size_t flat_index) const { return path(id_of(flat_index)); }

    friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;
};

// Max-flow value from the source to sink j (0-based) under unit capacities.
std::size_t maxflow_value(const NetworkInstance& g, std::size_t j);

// Maximum edge-disjoint path sets for every sink. Augmenting paths come from
// a depth-first search that scans edges in file position order; the flow is
// then split into paths by walking from the source along the lowest-position
// unused flow edge.
PathDecomposition decompose(const NetworkInstance& g);

// Checks contiguity, per-sink edge-disjointness and saturation (|P_j| equal
// to the max-flow value). Throws ValidationError.
void validate_decomposition(const NetworkInstance& g, const PathDecomposition& d);

// Path override file: `path <sink-id> <node> <node> ...`. Consecutive nodes
// map to the lowest-position edge between them not yet used by that sink.
PathDecomposition parse_paths(const NetworkInstance& g, std::string_view text);
std::string serialize_paths(const NetworkInstance& g, const PathDecomposition& d);

}  // namespace nudcode
