#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nudcode {

using NodeId = std::size_t;
using EdgeId = std::size_t;

// Unit-capacity directed link. Capacity k is expressed as k parallel edges.
struct Edge {
    NodeId tail;
    NodeId head;
};

// Single-source, multi-sink acyclic network. Immutable once built; the
// constructor enforces every structural invariant.
class NetworkInstance {
public:
    NetworkInstance(std::vector<std::string> node_names, std::vector<Edge> edges, NodeId source,
                    std::vector<NodeId> sinks);

    std::size_t node_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t sink_count() const noexcept { return sinks_.size(); }

    const std::string& name(NodeId v) const { return names_.at(v); }
    std::optional<NodeId> find(std::string_view name) const;

    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    NodeId source() const noexcept { return source_; }
    // Sink j (0-based here; 1-based in file order and printed names).
    NodeId sink(std::size_t j) const;
    std::span<const NodeId> sinks() const noexcept { return sinks_; }

    // Incident edges in increasing edge position.
    std::span<const EdgeId> out_edges(NodeId v) const { return out_.at(v); }
    std::span<const EdgeId> in_edges(NodeId v) const { return in_.at(v); }

    // Equality on names, sink order and edge sequence.
    friend bool operator==(const NetworkInstance& a, const NetworkInstance& b);

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<Edge> edges_;
    NodeId source_;
    std::vector<NodeId> sinks_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
};

// Accumulates nodes by name in first-seen order, then validates on build().
class NetworkBuilder {
public:
    NodeId node(std::string_view name);
    NetworkBuilder& source(std::string_view name);
    NetworkBuilder& sink(std::string_view name);
    NetworkBuilder& edge(std::string_view tail, std::string_view head);
    NetworkInstance build() const;

    bool has_source() const noexcept { return source_.has_value(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<Edge> edges_;
    std::optional<NodeId> source_;
    std::vector<NodeId> sinks_;
};

// A topological completion of the node partial order. Ties are broken by
// node name so the result depends only on the instance.
struct EdgeOrder {
    std::vector<std::size_t> node_rank;
    std::vector<NodeId> nodes_in_order;

    std::size_t rank(NodeId v) const { return node_rank.at(v); }
    // e precedes-or-equals e' iff rank(tail e) <= rank(tail e').
    bool precedes(const NetworkInstance& g, EdgeId e, EdgeId e_prime) const;
    // Edges sorted by tail rank, then head rank, then position.
    std::vector<EdgeId> edges_in_order(const NetworkInstance& g) const;
};

EdgeOrder topological_order(const NetworkInstance& g);

NetworkInstance parse_network(std::string_view text);
std::string serialize_network(const NetworkInstance& g);
std::string network_to_dot(const NetworkInstance& g);

// "<tail>-><head>#<position>", used in code files and reports.
std::string edge_label(const NetworkInstance& g, EdgeId e);

bool is_valid_node_id(std::string_view id) noexcept;

struct RandomNetworkParams {
    std::size_t nodes = 8;           // including the source
    std::size_t sinks = 2;
    double edge_probability = 0.35;  // forward pair probability
    double parallel_probability = 0.1;
};

// Random acyclic instance on nodes n0..n{N-1} with n0 as the source. Every
// sink is made reachable by adding an edge from a reachable earlier node.
NetworkInstance random_network(const RandomNetworkParams& params, std::uint64_t seed);

}  // namespace nudcode
