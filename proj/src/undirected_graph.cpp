#include "nudcode/undirected_graph.hpp"

#include <algorithm>

#include "nudcode/errors.hpp"

namespace nudcode {

void UndirectedGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= adj_.size() || v >= adj_.size()) throw IndexError("vertex out of range");
    if (u == v) throw ValidationError("self-loop on vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edges_;
}

bool UndirectedGraph::adjacent(std::size_t u, std::size_t v) const {
    const auto& au = adj_.at(u);
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<std::pair<std::size_t, std::size_t>> UndirectedGraph::edge_list() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edges_);
    for (std::size_t u = 0; u < adj_.size(); ++u) {
        for (std::size_t v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

UndirectedGraph UndirectedGraph::complement() const {
    const std::size_t n = adj_.size();
    UndirectedGraph c(n);
    for (std::size_t u = 0; u < n; ++u) {
        std::size_t i = 0;
        for (std::size_t v = 0; v < n; ++v) {
            while (i < adj_[u].size() && adj_[u][i] < v) ++i;
            bool linked = i < adj_[u].size() && adj_[u][i] == v;
            if (v != u && !linked) c.adj_[u].push_back(v);
        }
        c.edges_ += c.adj_[u].size();
    }
    c.edges_ /= 2;
    return c;
}

UndirectedGraph UndirectedGraph::induced(std::span<const std::size_t> vertices) const {
    UndirectedGraph sub(vertices.size());
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (adjacent(vertices[a], vertices[b])) sub.add_edge(a, b);
        }
    }
    return sub;
}

UndirectedGraph complete_graph(std::size_t n) {
    UndirectedGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

UndirectedGraph cycle_graph(std::size_t n) {
    UndirectedGraph g(n);
    for (std::size_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

Deadline Deadline::after_seconds(double seconds) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
    return d;
}

bool Deadline::expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }

}  // namespace nudcode
