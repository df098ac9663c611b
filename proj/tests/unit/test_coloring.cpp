#include <doctest.h>

#include "fixtures.hpp"
#include "nudcode/colorgraph.hpp"
#include "nudcode/coloring.hpp"
#include "nudcode/errors.hpp"
#include "oracles.hpp"

using namespace nudcode;

namespace {

ColoringGraph coloring_graph(const std::string& name, std::size_t nbar) {
    const auto g = testfx::network(name);
    const auto d = testfx::paths(g, name);
    return build_coloring_graph(d, contamination_sets(g, d), nbar);
}

UndirectedGraph disjoint_triangles() {
    UndirectedGraph g(6);
    for (std::size_t b : {0u, 3u}) {
        g.add_edge(b, b + 1);
        g.add_edge(b + 1, b + 2);
        g.add_edge(b, b + 2);
    }
    return g;
}

}  // namespace

TEST_CASE("fixture coloring graphs color with three") {
    for (const char* name : {"extended_butterfly", "non_berge"}) {
        const auto cg = coloring_graph(name, 3);
        const auto c = color_exact(cg.graph, 3);
        REQUIRE(c);
        CHECK(is_proper(cg.graph, *c));
        CHECK_FALSE(color_exact(cg.graph, 2));
    }
}

TEST_CASE("small graphs") {
    CHECK_FALSE(color_exact(complete_graph(4), 3));
    CHECK(color_exact(complete_graph(4), 4));
    CHECK_FALSE(color_exact(cycle_graph(5), 2));
    CHECK(color_exact(cycle_graph(5), 3));
    CHECK(chromatic_number_oracle(cycle_graph(5)) == 3);
    CHECK(chromatic_number_oracle(disjoint_triangles()) == 3);
    CHECK(chromatic_number_oracle(UndirectedGraph(0)) == 0);
    CHECK(chromatic_number_oracle(UndirectedGraph(4)) == 1);
    CHECK_THROWS_AS(chromatic_number_oracle(complete_graph(21)), CapError);
    CHECK_THROWS_AS(color_exact(cycle_graph(4), 0), ValidationError);

    const auto empty = color_exact(UndirectedGraph(0), 1);
    REQUIRE(empty);
    CHECK(empty->color_of.empty());
}

TEST_CASE("is_proper") {
    const auto g = cycle_graph(4);
    CHECK(is_proper(g, Coloring{{1, 2, 1, 2}, 2}));
    CHECK_FALSE(is_proper(g, Coloring{{1, 1, 2, 2}, 2}));
    CHECK_FALSE(is_proper(g, Coloring{{1, 2, 1, 3}, 2}));
    CHECK_FALSE(is_proper(g, Coloring{{1, 2, 1, 0}, 2}));
    CHECK_FALSE(is_proper(g, Coloring{{1, 2, 1}, 2}));
}

TEST_CASE("two-coloring") {
    const auto cg = coloring_graph("butterfly", 2);
    const auto c = two_colorable(cg.graph);
    REQUIRE(c);
    CHECK(is_proper(cg.graph, *c));
    CHECK_FALSE(two_colorable(cycle_graph(5)));
    CHECK(two_colorable(cycle_graph(6)));
    const auto one = two_colorable(UndirectedGraph(1));
    REQUIRE(one);
    CHECK(one->color_of == std::vector<std::size_t>{1});
}

TEST_CASE("clique hint is used and checked") {
    const auto g = disjoint_triangles();
    ColoringOptions o;
    o.clique_hint = std::vector<std::size_t>{3, 4, 5};
    ColoringStats st;
    REQUIRE(color_exact(g, 3, o, &st));
    CHECK(st.clique_size == 3);
    o.clique_hint = std::vector<std::size_t>{0, 3};  // not a clique
    REQUIRE(color_exact(g, 3, o, &st));
    CHECK(st.clique_size == 3);
}

TEST_CASE("max clique search") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto g = oracle::random_graph(6 + seed % 14, 0.2 + 0.1 * (seed % 6), seed);
        const auto c = find_max_clique(g);
        CHECK(c.size() == oracle::max_clique(g));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t k = i + 1; k < c.size(); ++k) CHECK(g.adjacent(c[i], c[k]));
    }
}

TEST_CASE("exact coloring agrees with plain backtracking") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const auto g = oracle::random_graph(4 + seed % 9, 0.15 + 0.1 * (seed % 7), seed);
        const auto chi = oracle::chromatic(g);
        CHECK(chromatic_number_oracle(g) == chi);
        for (std::size_t k = 1; k <= 5; ++k) {
            ColoringOptions o;
            o.seed = seed;
            const auto c = color_exact(g, k, o);
            CHECK(c.has_value() == oracle::k_colorable(g, k));
            if (c) CHECK(is_proper(g, *c));
        }
        CHECK(two_colorable(g).has_value() == (chi <= 2));
    }
}

TEST_CASE("Berge coloring graphs use exactly omega colors") {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        RandomNetworkParams p;
        p.nodes = 5 + seed % 6;
        p.sinks = 2 + seed % 2;
        const auto g = random_network(p, seed);
        const auto d = decompose(g);
        const auto r = contamination_sets(g, d);
        const auto cg = build_coloring_graph(d, r, d.n() + seed % 2);
        if (cg.graph.vertex_count() > 20) continue;
        if (is_berge(cg.graph).status != BergeStatus::berge) continue;
        ++checked;
        CHECK(oracle::chromatic(cg.graph) == max_clique_size(cg));
    }
    CHECK(checked > 50);
}

TEST_CASE("expired deadline raises TimeoutError") {
    // dense random graph, budget near chi: plenty of branching
    const auto g = oracle::random_graph(90, 0.5, 7);
    ColoringOptions o;
    o.deadline = Deadline::after_seconds(0);
    CHECK_THROWS_AS(color_exact(g, 12, o), TimeoutError);
}
