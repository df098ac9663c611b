#include "nudcode/reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "nudcode/contamination.hpp"
#include "nudcode/errors.hpp"

namespace nudcode {

UndirectedGraph ColoringInstance::graph() const {
    UndirectedGraph g(vertices.size());
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

void validate_coloring(const ColoringInstance& c) {
    std::set<std::string> names;
    for (const auto& v : c.vertices) {
        if (!is_valid_node_id(v)) throw ValidationError("invalid vertex id '" + v + "'");
        if (!names.insert(v).second) throw ValidationError("duplicate vertex '" + v + "'");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [a, b] : c.edges) {
        if (a >= c.vertices.size() || b >= c.vertices.size()) throw ValidationError("edge references unknown vertex");
        if (a == b) throw ValidationError("self-loop on vertex '" + c.vertices[a] + "'");
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
            throw ValidationError("duplicate edge " + c.vertices[a] + " " + c.vertices[b]);
        }
    }
    if (c.colors == 0) throw ValidationError("color budget must be at least 1");
}

ColoringInstance parse_coloring(std::string_view text) {
    ColoringInstance c;
    std::unordered_map<std::string, std::size_t> index;
    bool have_colors = false;
    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "vertex") {
            if (tok.size() != 2 || !is_valid_node_id(tok[1])) throw SyntaxError(line_no, "expected 'vertex <id>'");
            if (index.count(tok[1])) throw ValidationError("line " + std::to_string(line_no) + ": duplicate vertex");
            index[tok[1]] = c.vertices.size();
            c.vertices.push_back(tok[1]);
        } else if (kw == "edge") {
            if (tok.size() != 3) throw SyntaxError(line_no, "expected 'edge <a> <b>'");
            auto a = index.find(tok[1]), b = index.find(tok[2]);
            if (a == index.end() || b == index.end()) {
                throw ValidationError("line " + std::to_string(line_no) + ": edge names an undeclared vertex");
            }
            c.edges.emplace_back(a->second, b->second);
        } else if (kw == "colors") {
            if (tok.size() != 2) throw SyntaxError(line_no, "expected 'colors <n>'");
            try {
                std::size_t used = 0;
                const long long v = std::stoll(tok[1], &used);
                if (used != tok[1].size() || v < 1) throw std::invalid_argument("range");
                c.colors = static_cast<std::size_t>(v);
            } catch (const std::logic_error&) {
                throw SyntaxError(line_no, "color budget must be a positive integer");
            }
            have_colors = true;
        } else {
            throw SyntaxError(line_no, "unknown directive '" + kw + "'");
        }
    }
    if (!have_colors) throw ValidationError("missing 'colors <n>' line");
    validate_coloring(c);
    return c;
}

std::string serialize_coloring(const ColoringInstance& c) {
    std::ostringstream out;
    for (const auto& v : c.vertices) out << "vertex " << v << "\n";
    for (auto [a, b] : c.edges) out << "edge " << c.vertices[a] << " " << c.vertices[b] << "\n";
    out << "colors " << c.colors << "\n";
    return out.str();
}

ReductionOutput reduce_coloring_to_network(const ColoringInstance& c) {
    validate_coloring(c);
    const std::size_t nv = c.vertices.size();
    const std::size_t ne = c.edges.size();

    NetworkBuilder b;
    b.source("s");
    for (std::size_t k = 0; k < ne; ++k) b.sink("te_" + std::to_string(k + 1));
    for (const auto& v : c.vertices) b.sink("tv_" + v);
    b.sink("tc");

    EdgeId next = 0;
    auto add = [&](const std::string& tail, const std::string& head) {
        b.edge(tail, head);
        return next++;
    };

    std::vector<EdgeId> link(nv);
    for (std::size_t v = 0; v < nv; ++v) link[v] = add("vin_" + c.vertices[v], "vout_" + c.vertices[v]);

    std::size_t private_count = 0;
    auto route = [&](std::size_t v, const std::string& sink) {
        const std::string x = "x_" + std::to_string(++private_count);
        Path p;
        p.push_back(add("s", x));
        p.push_back(add(x, "vin_" + c.vertices[v]));
        p.push_back(link[v]);
        p.push_back(add("vout_" + c.vertices[v], sink));
        return p;
    };

    PathDecomposition d;
    std::vector<std::size_t> edge_sink(ne), vertex_sink(nv);
    for (std::size_t k = 0; k < ne; ++k) {
        auto [a, bb] = c.edges[k];
        if (c.vertices[bb] < c.vertices[a]) std::swap(a, bb);
        const std::string sink = "te_" + std::to_string(k + 1);
        d.per_sink.push_back({route(a, sink), route(bb, sink)});
        edge_sink[k] = k;
    }
    for (std::size_t v = 0; v < nv; ++v) {
        d.per_sink.push_back({route(v, "tv_" + c.vertices[v])});
        vertex_sink[v] = ne + v;
    }
    std::vector<Path> color_paths;
    for (std::size_t i = 0; i < c.colors; ++i) color_paths.push_back({add("s", "tc")});
    d.per_sink.push_back(std::move(color_paths));

    NetworkInstance net = b.build();
    validate_decomposition(net, d);
    return ReductionOutput{std::move(net), std::move(d), std::move(link), std::move(edge_sink),
                           std::move(vertex_sink), ne + nv};
}

StreamAssignment assignment_from_vertex_coloring(const ReductionOutput& out, const ColoringInstance& c,
                                                 const Coloring& col) {
    if (col.color_of.size() != c.vertices.size()) throw ShapeError("coloring does not match the instance");
    const PathDecomposition& d = out.paths;
    StreamAssignment a;
    a.nbar = c.colors;
    a.stream_of_path.assign(d.total_paths(), 0);
    for (std::size_t k = 0; k < c.edges.size(); ++k) {
        auto [u, v] = c.edges[k];
        if (c.vertices[v] < c.vertices[u]) std::swap(u, v);
        a.stream_of_path[d.flat({out.edge_to_sink[k], 0})] = col.color_of[u];
        a.stream_of_path[d.flat({out.edge_to_sink[k], 1})] = col.color_of[v];
    }
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        a.stream_of_path[d.flat({out.vertex_to_sink[v], 0})] = col.color_of[v];
    }
    for (std::size_t i = 0; i < c.colors; ++i) a.stream_of_path[d.flat({out.color_sink, i})] = i + 1;
    a.rates = achieved_rates(d, a);
    return a;
}

Coloring pull_back_coloring(const ReductionOutput& out, const ColoringInstance& c, const StreamAssignment& a) {
    Coloring col;
    col.budget = a.nbar;
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        col.color_of.push_back(a.stream_of_path.at(out.paths.flat({out.vertex_to_sink[v], 0})));
    }
    return col;
}

EquivalenceVerdict check_equivalence(const ColoringInstance& c, const ReductionOutput& out,
                                     const EquivalenceOptions& opts) {
    EquivalenceVerdict v;
    const std::size_t nv = c.vertices.size(), ne = c.edges.size();
    const PathDecomposition& d = out.paths;
    v.counts_ok = out.network.sink_count() == ne + nv + 1 && d.total_paths() == 2 * ne + nv + c.colors &&
                  out.network.edge_count() == 6 * ne + 4 * nv + c.colors;

    const UndirectedGraph g = c.graph();
    v.chromatic = chromatic_number_oracle(g, opts.vertex_cap);
    v.colorable = v.chromatic <= c.colors;

    const ContaminationReport r = contamination_sets(out.network, d);
    std::optional<StreamAssignment> found;
    if (c.colors < d.n()) {
        v.method = "budget";  // fewer streams than some sink's paths
    } else if (d.total_paths() <= opts.brute.max_paths && c.colors <= opts.brute.max_nbar) {
        v.method = "brute-force";
        found = brute_force_assign(d, r, c.colors, opts.brute);
    } else {
        v.method = "solve";
        SolveOptions so;
        so.nbar = c.colors;
        so.paths = d;
        so.timeout_seconds = opts.timeout_seconds;
        so.check_berge = false;
        SolveReport rep = solve(out.network, so);
        if (rep.outcome == Outcome::unknown) throw TimeoutError("solve timed out on the reduced network");
        if (rep.assignment) found = std::move(rep.assignment);
    }
    v.network_solvable = found.has_value();

    if (found) {
        const Coloring back = pull_back_coloring(out, c, *found);
        v.pullback_ok = is_proper(g, back);
        if (!v.pullback_ok) v.detail += "pulled-back coloring is not proper; ";
    }
    if (v.colorable) {
        auto col = color_exact(g, c.colors);
        v.forward_ok = false;
        if (col) {
            const StreamAssignment a = assignment_from_vertex_coloring(out, c, *col);
            v.forward_ok = verify_assignment(d, r, a).ok;
        }
        if (!v.forward_ok) v.detail += "assignment built from a coloring is rejected; ";
    }
    if (!v.counts_ok) v.detail += "size formulas do not hold; ";
    if (v.colorable != v.network_solvable) v.detail += "colorability and solvability disagree; ";
    v.consistent = v.counts_ok && v.colorable == v.network_solvable && v.pullback_ok && v.forward_ok;
    return v;
}

}  // namespace nudcode
