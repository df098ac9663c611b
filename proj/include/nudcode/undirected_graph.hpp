#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace nudcode {

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(std::size_t vertices) : adj_(vertices) {}

    std::size_t vertex_count() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edges_; }

    // Idempotent; self-loops are rejected.
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const;
    std::span<const std::size_t> neighbors(std::size_t v) const { return adj_.at(v); }
    std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }

    std::vector<std::pair<std::size_t, std::size_t>> edge_list() const;
    UndirectedGraph complement() const;
    UndirectedGraph induced(std::span<const std::size_t> vertices) const;

    friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

private:
    std::vector<std::vector<std::size_t>> adj_;
    std::size_t edges_ = 0;
};

UndirectedGraph complete_graph(std::size_t n);
UndirectedGraph cycle_graph(std::size_t n);

// Wall-clock limit shared by the search routines. Default: unlimited.
class Deadline {
public:
    Deadline() = default;
    static Deadline after_seconds(double seconds);
    bool expired() const;
    bool unlimited() const noexcept { return !at_.has_value(); }

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace nudcode
