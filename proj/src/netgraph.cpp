#include "nudcode/netgraph.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>
#include <tuple>

#include "nudcode/errors.hpp"

namespace nudcode {

bool is_valid_node_id(std::string_view id) noexcept {
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

NetworkInstance::NetworkInstance(std::vector<std::string> node_names, std::vector<Edge> edges,
                                 NodeId source, std::vector<NodeId> sinks)
    : names_(std::move(node_names)), edges_(std::move(edges)), source_(source), sinks_(std::move(sinks)) {
    const std::size_t n = names_.size();
    for (NodeId v = 0; v < n; ++v) {
        if (!is_valid_node_id(names_[v])) throw ValidationError("invalid node id '" + names_[v] + "'");
        if (!index_.emplace(names_[v], v).second) throw ValidationError("duplicate node id '" + names_[v] + "'");
    }
    if (source_ >= n) throw ValidationError("source is not a node");
    if (sinks_.empty()) throw ValidationError("network has no sinks");
    for (std::size_t j = 0; j < sinks_.size(); ++j) {
        if (sinks_[j] >= n) throw ValidationError("sink is not a node");
        if (sinks_[j] == source_) throw ValidationError("sink '" + names_[sinks_[j]] + "' equals the source");
        for (std::size_t i = 0; i < j; ++i) {
            if (sinks_[i] == sinks_[j]) throw ValidationError("duplicate sink '" + names_[sinks_[j]] + "'");
        }
    }

    out_.assign(n, {});
    in_.assign(n, {});
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        const auto [tail, head] = edges_[e];
        if (tail >= n || head >= n) throw ValidationError("edge endpoint is not a node");
        if (tail == head) throw CycleError("self-loop at '" + names_[tail] + "'");
        out_[tail].push_back(e);
        in_[head].push_back(e);
    }
    if (!in_[source_].empty()) throw ValidationError("source '" + names_[source_] + "' has incoming edges");

    // Kahn's algorithm only to detect cycles; the canonical order lives in topological_order().
    std::vector<std::size_t> indeg(n);
    std::vector<NodeId> stack;
    for (NodeId v = 0; v < n; ++v) {
        indeg[v] = in_[v].size();
        if (indeg[v] == 0) stack.push_back(v);
    }
    std::size_t seen = 0;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        ++seen;
        for (EdgeId e : out_[v]) {
            if (--indeg[edges_[e].head] == 0) stack.push_back(edges_[e].head);
        }
    }
    if (seen != n) throw CycleError("network contains a directed cycle");

    std::vector<char> reach(n, 0);
    std::vector<NodeId> frontier{source_};
    reach[source_] = 1;
    while (!frontier.empty()) {
        NodeId v = frontier.back();
        frontier.pop_back();
        for (EdgeId e : out_[v]) {
            NodeId w = edges_[e].head;
            if (!reach[w]) {
                reach[w] = 1;
                frontier.push_back(w);
            }
        }
    }
    for (NodeId t : sinks_) {
        if (!reach[t]) throw UnreachableSinkError("sink '" + names_[t] + "' is unreachable from the source");
    }
}

std::optional<NodeId> NetworkInstance::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

NodeId NetworkInstance::sink(std::size_t j) const {
    if (j >= sinks_.size()) throw IndexError("sink index " + std::to_string(j + 1) + " out of range");
    return sinks_[j];
}

bool operator==(const NetworkInstance& a, const NetworkInstance& b) {
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count() ||
        a.sink_count() != b.sink_count())
        return false;
    if (a.name(a.source()) != b.name(b.source())) return false;
    for (std::size_t j = 0; j < a.sink_count(); ++j) {
        if (a.name(a.sinks_[j]) != b.name(b.sinks_[j])) return false;
    }
    for (EdgeId e = 0; e < a.edge_count(); ++e) {
        if (a.name(a.edges_[e].tail) != b.name(b.edges_[e].tail) ||
            a.name(a.edges_[e].head) != b.name(b.edges_[e].head))
            return false;
    }
    return std::all_of(a.names_.begin(), a.names_.end(), [&](const std::string& s) { return b.find(s).has_value(); });
}

NodeId NetworkBuilder::node(std::string_view name) {
    auto [it, inserted] = index_.emplace(std::string(name), names_.size());
    if (inserted) names_.emplace_back(name);
    return it->second;
}

NetworkBuilder& NetworkBuilder::source(std::string_view name) {
    if (source_) throw DuplicateSourceError("source declared more than once");
    source_ = node(name);
    return *this;
}

NetworkBuilder& NetworkBuilder::sink(std::string_view name) {
    sinks_.push_back(node(name));
    return *this;
}

NetworkBuilder& NetworkBuilder::edge(std::string_view tail, std::string_view head) {
    NodeId t = node(tail);
    NodeId h = node(head);
    edges_.push_back({t, h});
    return *this;
}

NetworkInstance NetworkBuilder::build() const {
    if (!source_) throw ValidationError("network has no source");
    return NetworkInstance(names_, edges_, *source_, sinks_);
}

bool EdgeOrder::precedes(const NetworkInstance& g, EdgeId e, EdgeId e_prime) const {
    return rank(g.edge(e).tail) <= rank(g.edge(e_prime).tail);
}

std::vector<EdgeId> EdgeOrder::edges_in_order(const NetworkInstance& g) const {
    std::vector<EdgeId> out(g.edge_count());
    for (EdgeId e = 0; e < out.size(); ++e) out[e] = e;
    std::sort(out.begin(), out.end(), [&](EdgeId a, EdgeId b) {
        return std::make_tuple(rank(g.edge(a).tail), rank(g.edge(a).head), a) <
               std::make_tuple(rank(g.edge(b).tail), rank(g.edge(b).head), b);
    });
    return out;
}

EdgeOrder topological_order(const NetworkInstance& g) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> indeg(n);
    auto later = [&](NodeId a, NodeId b) { return g.name(a) > g.name(b); };
    std::priority_queue<NodeId, std::vector<NodeId>, decltype(later)> ready(later);
    for (NodeId v = 0; v < n; ++v) {
        indeg[v] = g.in_edges(v).size();
        if (indeg[v] == 0) ready.push(v);
    }
    EdgeOrder order;
    order.node_rank.assign(n, 0);
    while (!ready.empty()) {
        NodeId v = ready.top();
        ready.pop();
        order.node_rank[v] = order.nodes_in_order.size();
        order.nodes_in_order.push_back(v);
        for (EdgeId e : g.out_edges(v)) {
            if (--indeg[g.edge(e).head] == 0) ready.push(g.edge(e).head);
        }
    }
    return order;
}

NetworkInstance parse_network(std::string_view text) {
    NetworkBuilder builder;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

        std::istringstream in(line);
        std::vector<std::string> tok;
        for (std::string t; in >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        for (std::size_t i = 1; i < tok.size(); ++i) {
            if (!is_valid_node_id(tok[i])) throw SyntaxError(line_no, "invalid node id '" + tok[i] + "'");
        }
        const std::string& kw = tok[0];
        if (kw == "source") {
            if (tok.size() != 2) throw SyntaxError(line_no, "expected 'source <id>'");
            if (builder.has_source()) throw DuplicateSourceError("line " + std::to_string(line_no) + ": second source declaration");
            builder.source(tok[1]);
        } else if (kw == "sink") {
            if (tok.size() != 2) throw SyntaxError(line_no, "expected 'sink <id>'");
            builder.sink(tok[1]);
        } else if (kw == "edge") {
            if (tok.size() != 3) throw SyntaxError(line_no, "expected 'edge <tail> <head>'");
            builder.edge(tok[1], tok[2]);
        } else {
            throw SyntaxError(line_no, "unknown directive '" + kw + "'");
        }
    }
    return builder.build();
}

std::string serialize_network(const NetworkInstance& g) {
    std::ostringstream out;
    out << "source " << g.name(g.source()) << '\n';
    for (NodeId t : g.sinks()) out << "sink " << g.name(t) << '\n';
    for (const Edge& e : g.edges()) out << "edge " << g.name(e.tail) << ' ' << g.name(e.head) << '\n';
    return out.str();
}

std::string network_to_dot(const NetworkInstance& g) {
    std::ostringstream out;
    out << "digraph network {\n  rankdir=TB;\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out << "  \"" << g.name(v) << "\"";
        if (v == g.source()) {
            out << " [shape=diamond]";
        } else if (std::find(g.sinks().begin(), g.sinks().end(), v) != g.sinks().end()) {
            out << " [shape=doublecircle]";
        }
        out << ";\n";
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out << "  \"" << g.name(g.edge(e).tail) << "\" -> \"" << g.name(g.edge(e).head) << "\" [label=\"" << e
            << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string edge_label(const NetworkInstance& g, EdgeId e) {
    return g.name(g.edge(e).tail) + "->" + g.name(g.edge(e).head) + "#" + std::to_string(e);
}

NetworkInstance random_network(const RandomNetworkParams& params, std::uint64_t seed) {
    if (params.nodes < 2) throw ValidationError("random network needs at least two nodes");
    if (params.sinks < 1 || params.sinks >= params.nodes) throw ValidationError("bad sink count for random network");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution edge_coin(params.edge_probability);
    std::bernoulli_distribution parallel_coin(params.parallel_probability);

    const std::size_t n = params.nodes;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("n" + std::to_string(i));

    std::vector<Edge> edges;
    std::vector<char> reach(n, 0);
    reach[0] = 1;
    for (std::size_t j = 1; j < n; ++j) {
        std::vector<std::size_t> reachable_pred;
        for (std::size_t i = 0; i < j; ++i) {
            if (reach[i]) reachable_pred.push_back(i);
            if (edge_coin(rng)) {
                edges.push_back({i, j});
                if (parallel_coin(rng)) edges.push_back({i, j});
                if (reach[i]) reach[j] = 1;
            }
        }
        if (!reach[j]) {
            std::uniform_int_distribution<std::size_t> pick(0, reachable_pred.size() - 1);
            edges.push_back({reachable_pred[pick(rng)], j});
            reach[j] = 1;
        }
    }

    std::vector<NodeId> candidates;
    for (std::size_t i = 1; i < n; ++i) candidates.push_back(i);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    candidates.resize(params.sinks);
    std::sort(candidates.begin(), candidates.end());
    return NetworkInstance(std::move(names), std::move(edges), 0, std::move(candidates));
}

}  // namespace nudcode
