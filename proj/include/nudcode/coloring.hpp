#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nudcode/undirected_graph.hpp"

namespace nudcode {

struct Coloring {
    std::vector<std::size_t> color_of;  // 1-based colors
    std::size_t budget = 0;
};

// Every vertex colored within 1..budget, adjacent vertices differ.
bool is_proper(const UndirectedGraph& g, const Coloring& c);

struct ColoringOptions {
    std::uint64_t seed = 0;  // 0 keeps plain index tie-breaking
    Deadline deadline;
    // A known clique to pre-color. Checked; falls back to a search when absent.
    std::optional<std::vector<std::size_t>> clique_hint;
};

struct ColoringStats {
    std::size_t nodes = 0;        // branch nodes visited
    std::size_t clique_size = 0;  // size of the pre-colored clique
};

// Exact decision: a proper coloring using at most `budget` colors, or none.
// DSATUR branch and bound. Throws TimeoutError when the deadline passes.
std::optional<Coloring> color_exact(const UndirectedGraph& g, std::size_t budget, const ColoringOptions& opts = {},
                                    ColoringStats* stats = nullptr);

// Branch-and-bound maximum clique, vertices sorted. Gives up improving after
// `node_limit` branch nodes (0 = no limit) and returns the best found.
std::vector<std::size_t> find_max_clique(const UndirectedGraph& g, std::size_t node_limit = 0);

// Exact chromatic number for small graphs. CapError above `cap` vertices.
std::size_t chromatic_number_oracle(const UndirectedGraph& g, std::size_t cap = 20);

// BFS bipartition.
std::optional<Coloring> two_colorable(const UndirectedGraph& g);

}  // namespace nudcode
