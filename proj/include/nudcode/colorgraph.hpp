#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nudcode/contamination.hpp"
#include "nudcode/flows.hpp"
#include "nudcode/undirected_graph.hpp"

namespace nudcode {

enum class VertexKind { regular, fictitious };

struct ColoringVertex {
    std::size_t sink = 0;  // 0-based
    std::size_t slot = 0;  // 0-based within its kind
    VertexKind kind = VertexKind::regular;
    std::size_t path = 0;  // flat path index, regular vertices only
};

// Coloring graph: one clique of stream_budget vertices per sink (its regular
// vertices, then its fictitious ones), plus edges from a regular vertex to
// every fictitious vertex of each other sink it contaminates.
struct ColoringGraph {
    UndirectedGraph graph;
    std::vector<ColoringVertex> vertices;
    std::vector<std::size_t> group_begin;    // size t + 1
    std::vector<std::size_t> regular_count;  // n_j
    std::size_t stream_budget = 0;           // n-bar

    std::size_t sink_count() const noexcept { return regular_count.size(); }
    std::size_t fictitious_count(std::size_t j) const { return stream_budget - regular_count.at(j); }
    std::size_t regular_vertex(std::size_t j, std::size_t k) const { return group_begin.at(j) + k; }
    std::size_t fictitious_vertex(std::size_t j, std::size_t k) const {
        return group_begin.at(j) + regular_count.at(j) + k;
    }
    // "v<j>.<k>" or "w<j>.<k>", 1-based.
    std::string vertex_name(std::size_t v) const;
    std::optional<std::size_t> find_vertex(std::string_view name) const;
};

// Throws BudgetError when nbar < n.
ColoringGraph build_coloring_graph(const PathDecomposition& d, const ContaminationReport& r, std::size_t nbar);

// Throws StructureError unless g has the layout build_coloring_graph produces.
void check_structure(const ColoringGraph& g);

// Maximum clique via the pairwise sink-subgraph formula:
//   nbar + max over j != j' of max(0, m_{j,j'} - n_{j'}),
// with m read off the graph. Throws StructureError on foreign graphs.
std::size_t max_clique_size(const ColoringGraph& g);
// A clique attaining max_clique_size().
std::vector<std::size_t> max_clique_vertices(const ColoringGraph& g);

enum class CycleKind { hole, antihole };

struct OddCycleWitness {
    CycleKind kind = CycleKind::hole;
    std::vector<std::size_t> cycle;  // in cyclic order
};

enum class SearchStatus { none_found, found, budget_exhausted };

struct HoleSearchResult {
    SearchStatus status = SearchStatus::none_found;
    std::optional<OddCycleWitness> witness;
};

// Induced odd cycle of exact length `length`, smallest start vertex first.
std::optional<std::vector<std::size_t>> find_induced_cycle(const UndirectedGraph& g, std::size_t length,
                                                           const Deadline& deadline = {});

// Exhaustive search for an odd hole or odd antihole with length in
// [5, max_len], shortest lengths first. max_len must be odd and >= 5.
HoleSearchResult find_odd_hole_or_antihole(const UndirectedGraph& g, std::size_t max_len,
                                           const Deadline& deadline = {});

enum class BergeStatus { berge, not_berge, unknown };

struct BergeVerdict {
    BergeStatus status = BergeStatus::berge;
    std::optional<OddCycleWitness> witness;
};

BergeVerdict is_berge(const UndirectedGraph& g, const Deadline& deadline = {});

// Optional per-vertex colors (1-based) are written as labels.
std::string coloring_graph_to_dot(const ColoringGraph& g, const std::vector<std::size_t>* colors = nullptr);

}  // namespace nudcode
