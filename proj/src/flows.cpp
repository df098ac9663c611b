#include "nudcode/flows.hpp"

#include <algorithm>
#include <sstream>

#include "nudcode/errors.hpp"

namespace nudcode {

std::string path_name(PathId id) { return std::to_string(id.sink + 1) + "." + std::to_string(id.k + 1); }

std::size_t PathDecomposition::n() const noexcept {
    std::size_t best = 0;
    for (const auto& ps : per_sink) best = std::max(best, ps.size());
    return best;
}

std::size_t PathDecomposition::total_paths() const noexcept {
    std::size_t total = 0;
    for (const auto& ps : per_sink) total += ps.size();
    return total;
}

std::size_t PathDecomposition::flat(PathId id) const {
    if (id.sink >= per_sink.size() || id.k >= per_sink[id.sink].size()) {
        throw IndexError("no path " + path_name(id));
    }
    std::size_t base = 0;
    for (std::size_t j = 0; j < id.sink; ++j) base += per_sink[j].size();
    return base + id.k;
}

PathId PathDecomposition::id_of(std::size_t flat_index) const {
    std::size_t rest = flat_index;
    for (std::size_t j = 0; j < per_sink.size(); ++j) {
        if (rest < per_sink[j].size()) return {j, rest};
        rest -= per_sink[j].size();
    }
    throw IndexError("flat path index " + std::to_string(flat_index) + " out of range");
}

namespace {

// Unit-capacity augmenting-path max flow. flow[e] is 0 or 1.
class UnitFlow {
public:
    UnitFlow(const NetworkInstance& g, NodeId target) : g_(g), target_(target), flow_(g.edge_count(), 0) {}

    std::size_t run() {
        std::size_t value = 0;
        while (augment()) ++value;
        return value;
    }

    const std::vector<char>& flow() const { return flow_; }

private:
    // Forward residual edges first, then reverse ones, each by position.
    bool augment() {
        visited_.assign(g_.node_count(), 0);
        return dfs(g_.source());
    }

    bool dfs(NodeId v) {
        if (v == target_) return true;
        visited_[v] = 1;
        for (EdgeId e : g_.out_edges(v)) {
            NodeId w = g_.edge(e).head;
            if (flow_[e] == 0 && !visited_[w] && dfs(w)) {
                flow_[e] = 1;
                return true;
            }
        }
        for (EdgeId e : g_.in_edges(v)) {
            NodeId w = g_.edge(e).tail;
            if (flow_[e] == 1 && !visited_[w] && dfs(w)) {
                flow_[e] = 0;
                return true;
            }
        }
        return false;
    }

    const NetworkInstance& g_;
    NodeId target_;
    std::vector<char> flow_;
    std::vector<char> visited_;
};

std::vector<Path> split_flow(const NetworkInstance& g, NodeId target, std::vector<char> flow) {
    std::vector<Path> paths;
    for (;;) {
        Path p;
        NodeId v = g.source();
        while (v != target) {
            auto outs = g.out_edges(v);
            auto it = std::find_if(outs.begin(), outs.end(), [&](EdgeId e) { return flow[e] == 1; });
            if (it == outs.end()) break;
            flow[*it] = 0;
            p.push_back(*it);
            v = g.edge(*it).head;
        }
        if (p.empty()) break;
        if (v != target) throw StructureError("flow decomposition did not reach the sink");
        paths.push_back(std::move(p));
    }
    return paths;
}

}  // namespace

std::size_t maxflow_value(const NetworkInstance& g, std::size_t j) {
    UnitFlow f(g, g.sink(j));
    return f.run();
}

PathDecomposition decompose(const NetworkInstance& g) {
    PathDecomposition d;
    d.per_sink.reserve(g.sink_count());
    for (std::size_t j = 0; j < g.sink_count(); ++j) {
        UnitFlow f(g, g.sink(j));
        f.run();
        d.per_sink.push_back(split_flow(g, g.sink(j), f.flow()));
    }
    return d;
}

void validate_decomposition(const NetworkInstance& g, const PathDecomposition& d) {
    if (d.sink_count() != g.sink_count()) {
        throw ValidationError("decomposition has " + std::to_string(d.sink_count()) + " sinks, network has " +
                              std::to_string(g.sink_count()));
    }
    for (std::size_t j = 0; j < d.sink_count(); ++j) {
        const std::string& sink_name = g.name(g.sink(j));
        std::vector<char> used(g.edge_count(), 0);
        for (std::size_t k = 0; k < d.paths_to(j); ++k) {
            const Path& p = d.per_sink[j][k];
            const std::string label = "path " + path_name({j, k});
            if (p.empty()) throw ValidationError(label + " is empty");
            NodeId at = g.source();
            for (EdgeId e : p) {
                if (e >= g.edge_count()) throw ValidationError(label + " uses an unknown edge");
                if (g.edge(e).tail != at) throw ValidationError(label + " is not contiguous");
                if (used[e]) throw ValidationError(label + " reuses edge " + edge_label(g, e) + " of sink " + sink_name);
                used[e] = 1;
                at = g.edge(e).head;
            }
            if (at != g.sink(j)) throw ValidationError(label + " does not end at sink " + sink_name);
        }
        const std::size_t flow = maxflow_value(g, j);
        if (d.paths_to(j) != flow) {
            throw ValidationError("sink " + sink_name + " has " + std::to_string(d.paths_to(j)) +
                                  " paths but max-flow " + std::to_string(flow));
        }
    }
}

PathDecomposition parse_paths(const NetworkInstance& g, std::string_view text) {
    PathDecomposition d;
    d.per_sink.assign(g.sink_count(), {});
    std::vector<std::vector<char>> used(g.sink_count(), std::vector<char>(g.edge_count(), 0));

    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> tok;
        for (std::string t; words >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] != "path") throw SyntaxError(line_no, "expected 'path <sink-id> <node> ...'");
        if (tok.size() < 4) throw SyntaxError(line_no, "a path needs a sink id and at least two nodes");

        auto sink_node = g.find(tok[1]);
        auto sinks = g.sinks();
        auto sit = sink_node ? std::find(sinks.begin(), sinks.end(), *sink_node) : sinks.end();
        if (sit == sinks.end()) throw SyntaxError(line_no, "'" + tok[1] + "' is not a sink");
        const std::size_t j = static_cast<std::size_t>(sit - sinks.begin());

        std::vector<NodeId> nodes;
        for (std::size_t i = 2; i < tok.size(); ++i) {
            auto v = g.find(tok[i]);
            if (!v) throw SyntaxError(line_no, "unknown node '" + tok[i] + "'");
            nodes.push_back(*v);
        }
        if (nodes.front() != g.source()) throw SyntaxError(line_no, "path must start at the source");
        if (nodes.back() != *sink_node) throw SyntaxError(line_no, "path must end at its sink");

        Path p;
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            auto outs = g.out_edges(nodes[i]);
            auto it = std::find_if(outs.begin(), outs.end(),
                                   [&](EdgeId e) { return g.edge(e).head == nodes[i + 1] && !used[j][e]; });
            if (it == outs.end()) {
                throw SyntaxError(line_no, "no unused edge " + g.name(nodes[i]) + "->" + g.name(nodes[i + 1]) +
                                               " left for sink " + tok[1]);
            }
            used[j][*it] = 1;
            p.push_back(*it);
        }
        d.per_sink[j].push_back(std::move(p));
    }
    validate_decomposition(g, d);
    return d;
}

std::string serialize_paths(const NetworkInstance& g, const PathDecomposition& d) {
    std::ostringstream out;
    for (std::size_t j = 0; j < d.sink_count(); ++j) {
        for (const Path& p : d.per_sink[j]) {
            out << "path " << g.name(g.sink(j)) << ' ' << g.name(g.source());
            for (EdgeId e : p) out << ' ' << g.name(g.edge(e).head);
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace nudcode
