#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nudcode/coloring.hpp"
#include "nudcode/flows.hpp"
#include "nudcode/netgraph.hpp"
#include "nudcode/solver.hpp"
#include "nudcode/undirected_graph.hpp"

namespace nudcode {

// Graph coloring question: can `graph` be colored with `colors` colors?
struct ColoringInstance {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // unordered pairs of vertex indices
    std::size_t colors = 0;

    UndirectedGraph graph() const;
};

// Lines `vertex <id>`, `edge <a> <b>`, `colors <n>`; `#` comments.
// Edges must name declared vertices.
ColoringInstance parse_coloring(std::string_view text);
std::string serialize_coloring(const ColoringInstance& c);
// Throws ValidationError on self-loops, duplicates or bad ids.
void validate_coloring(const ColoringInstance& c);

// Network built from a coloring instance. Each coloring vertex v becomes a
// link vin_v -> vout_v. Every path is s -> x_p -> vin_v -> vout_v -> sink,
// so paths meet only on links. Sinks: one per coloring edge (two paths, the
// first through the lexicographically smaller endpoint), one per vertex (one
// path), then `tc` with `colors` parallel edges from s.
struct ReductionOutput {
    NetworkInstance network;
    PathDecomposition paths;
    std::vector<EdgeId> vertex_to_link;
    std::vector<std::size_t> edge_to_sink;
    std::vector<std::size_t> vertex_to_sink;
    std::size_t color_sink = 0;
};

ReductionOutput reduce_coloring_to_network(const ColoringInstance& c);

// Streams from a vertex coloring: both paths of an edge sink take their
// endpoints' colors, vertex sinks their vertex's color, tc takes 1..colors.
StreamAssignment assignment_from_vertex_coloring(const ReductionOutput& out, const ColoringInstance& c,
                                                 const Coloring& col);
// Vertex v gets the stream of its one-path sink.
Coloring pull_back_coloring(const ReductionOutput& out, const ColoringInstance& c, const StreamAssignment& a);

struct EquivalenceOptions {
    std::size_t vertex_cap = 20;  // chromatic oracle
    BruteForceCaps brute{40, 4};  // above this, fall back to solve()
    double timeout_seconds = 60;
};

struct EquivalenceVerdict {
    bool consistent = false;
    bool counts_ok = false;
    std::size_t chromatic = 0;
    bool colorable = false;
    bool network_solvable = false;
    std::string method;  // "brute-force" or "solve"
    bool pullback_ok = true;
    bool forward_ok = true;
    std::string detail;
};

EquivalenceVerdict check_equivalence(const ColoringInstance& c, const ReductionOutput& out,
                                     const EquivalenceOptions& opts = {});

}  // namespace nudcode
