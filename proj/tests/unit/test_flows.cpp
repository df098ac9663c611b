#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "nudcode/errors.hpp"
#include "nudcode/flows.hpp"
#include "oracles.hpp"

using namespace nudcode;

namespace {

std::string nodes_of(const NetworkInstance& g, const Path& p) {
    std::string s = g.name(g.edge(p.front()).tail);
    for (EdgeId e : p) s += " " + g.name(g.edge(e).head);
    return s;
}

// Same instance without the given edges.
NetworkInstance without(const NetworkInstance& g, const Path& removed) {
    NetworkBuilder b;
    b.source(g.name(g.source()));
    for (auto t : g.sinks()) b.sink(g.name(t));
    for (std::size_t v = 0; v < g.node_count(); ++v) b.node(g.name(v));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (std::find(removed.begin(), removed.end(), e) == removed.end()) {
            b.edge(g.name(g.edge(e).tail), g.name(g.edge(e).head));
        }
    }
    // Unreachable sinks would be rejected, so the caller checks flow values
    // with the oracle directly.
    return b.build();
}

}  // namespace

TEST_CASE("butterfly decomposition") {
    const auto g = testfx::network("butterfly");
    const auto d = decompose(g);
    CHECK(d.paths_to(0) == 2);
    CHECK(d.paths_to(1) == 2);
    CHECK(d.n() == 2);
    CHECK(nodes_of(g, d.path(PathId{0, 0})) == "s u t1");
    CHECK(nodes_of(g, d.path(PathId{0, 1})) == "s v w x t1");
    CHECK(nodes_of(g, d.path(PathId{1, 0})) == "s u w x t2");
    CHECK(nodes_of(g, d.path(PathId{1, 1})) == "s v t2");
    CHECK(maxflow_value(g, 0) == 2);
    CHECK_NOTHROW(validate_decomposition(g, d));
}

TEST_CASE("extended butterfly decomposition") {
    const auto g = testfx::network("extended_butterfly");
    const auto d = decompose(g);
    CHECK(d.paths_to(0) == 2);
    CHECK(d.paths_to(1) == 3);
    CHECK(d.n() == 3);
    CHECK(maxflow_value(g, 1) == 3);
}

TEST_CASE("single edge and parallel edges") {
    const auto g = parse_network("source s\nsink t1\nedge s t1\n");
    const auto d = decompose(g);
    CHECK(d.paths_to(0) == 1);
    CHECK(d.path(PathId{0, 0}) == Path{0});

    const auto star = parse_network("source s\nsink t1\nedge s t1\nedge s t1\nedge s t1\nedge s t1\n");
    CHECK(maxflow_value(star, 0) == 4);
    CHECK_THROWS_AS(maxflow_value(star, 1), IndexError);
}

TEST_CASE("flat indexing") {
    const auto d = decompose(testfx::network("extended_butterfly"));
    CHECK(d.total_paths() == 5);
    for (std::size_t i = 0; i < d.total_paths(); ++i) CHECK(d.flat(d.id_of(i)) == i);
    CHECK(d.id_of(2) == PathId{1, 0});
    CHECK(path_name(PathId{1, 2}) == "2.3");
}

TEST_CASE("path override file") {
    const auto g = testfx::network("butterfly");
    const auto d = parse_paths(g, "path t1 s u t1\npath t1 s v w x t1\npath t2 s u w x t2\npath t2 s v t2\n");
    CHECK(d == decompose(g));
    CHECK(parse_paths(g, serialize_paths(g, d)) == d);

    // not maximum
    CHECK_THROWS_AS(parse_paths(g, "path t1 s u t1\npath t2 s v t2\npath t2 s u w x t2\n"), ValidationError);
    // shared edge within a sink
    CHECK_THROWS_AS(parse_paths(g, "path t1 s u t1\npath t1 s u w x t1\npath t2 s u w x t2\npath t2 s v t2\n"),
                    SyntaxError);
    // missing edge
    CHECK_THROWS_AS(parse_paths(g, "path t1 s x t1\n"), SyntaxError);
    CHECK_THROWS_AS(parse_paths(g, "path q s u t1\n"), SyntaxError);
}

TEST_CASE("parallel edges in override map to distinct positions") {
    const auto g = parse_network("source s\nsink t\nedge s t\nedge s t\n");
    const auto d = parse_paths(g, "path t s t\npath t s t\n");
    CHECK(d.path(PathId{0, 0}) == Path{0});
    CHECK(d.path(PathId{0, 1}) == Path{1});
}

TEST_CASE("max-flow equals brute-force min cut on random DAGs") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        RandomNetworkParams p;
        p.nodes = 5 + seed % 8;  // up to 12
        p.sinks = 1 + seed % 3;
        p.edge_probability = 0.3 + 0.05 * (seed % 5);
        const auto g = random_network(p, seed);
        const auto d = decompose(g);
        CHECK_NOTHROW(validate_decomposition(g, d));
        for (std::size_t j = 0; j < g.sink_count(); ++j) {
            CHECK(d.paths_to(j) == oracle::min_cut(g, j));
            CHECK(d.paths_to(j) == maxflow_value(g, j));
        }
        CHECK(decompose(g) == d);
    }
}

TEST_CASE("removing a path lowers that sink's max-flow by one") {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        RandomNetworkParams p;
        p.nodes = 6 + seed % 6;
        p.sinks = 1;
        p.edge_probability = 0.45;
        const auto g = random_network(p, seed);
        const auto d = decompose(g);
        if (d.paths_to(0) < 2) continue;
        for (std::size_t k = 0; k < d.paths_to(0); ++k) {
            const auto h = without(g, d.path(PathId{0, k}));
            CHECK(oracle::min_cut(h, 0) == d.paths_to(0) - 1);
            ++checked;
        }
    }
    CHECK(checked > 20);
}
