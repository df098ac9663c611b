#include <doctest.h>

#include <algorithm>

#include "nudcode/corpus.hpp"
#include "nudcode/errors.hpp"
#include "nudcode/reduction.hpp"
#include "oracles.hpp"

using namespace nudcode;

namespace {

void check_counts(const ColoringInstance& c, const ReductionOutput& out) {
    const std::size_t nv = c.vertices.size(), ne = c.edges.size();
    CHECK(out.network.sink_count() == ne + nv + 1);
    CHECK(out.paths.total_paths() == 2 * ne + nv + c.colors);
    CHECK(out.network.edge_count() == 6 * ne + 4 * nv + c.colors);
    CHECK(out.vertex_to_link.size() == nv);
    CHECK(out.edge_to_sink.size() == ne);
    CHECK(out.paths.paths_to(out.color_sink) == c.colors);
    for (auto j : out.edge_to_sink) CHECK(out.paths.paths_to(j) == 2);
    for (auto j : out.vertex_to_sink) CHECK(out.paths.paths_to(j) == 1);
}

}  // namespace

TEST_CASE("parse and serialize coloring instances") {
    const auto c = parse_coloring("# triangle\nvertex a\nvertex b\nvertex c\nedge a b\nedge b c\nedge c a\ncolors 3\n");
    CHECK(c.vertices.size() == 3);
    CHECK(c.edges.size() == 3);
    CHECK(c.colors == 3);
    CHECK(c.graph() == complete_graph(3));
    const auto back = parse_coloring(serialize_coloring(c));
    CHECK(back.vertices == c.vertices);
    CHECK(back.edges == c.edges);
    CHECK(back.colors == c.colors);

    CHECK_THROWS_AS(parse_coloring("vertex a\nvertex b\nedge a b\n"), ValidationError);
    CHECK_THROWS_AS(parse_coloring("vertex a\nedge a z\ncolors 2\n"), ValidationError);
    CHECK_THROWS_AS(parse_coloring("vertex a\nvertex a\ncolors 2\n"), ValidationError);
    CHECK_THROWS_AS(parse_coloring("vertex a\nedge a a\ncolors 2\n"), ValidationError);
    CHECK_THROWS_AS(parse_coloring("vertex a\ncolors 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_coloring("vertex a\ncolors two\n"), SyntaxError);
    CHECK_THROWS_AS(parse_coloring("vertex a b\ncolors 2\n"), SyntaxError);
    CHECK_THROWS_AS(parse_coloring("node a\ncolors 2\n"), SyntaxError);
    try {
        parse_coloring("vertex a\n\nbogus\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("reduced network layout") {
    const auto c = cycle_instance(5, 3);
    const auto out = reduce_coloring_to_network(c);
    check_counts(c, out);
    CHECK_NOTHROW(validate_decomposition(out.network, out.paths));
    // paths meet only on vertex links, so every overlap edge is one of them
    const auto r = contamination_sets(out.network, out.paths);
    for (const auto& [pair, edges] : r.overlap_edges)
        for (EdgeId e : edges)
            CHECK(std::find(out.vertex_to_link.begin(), out.vertex_to_link.end(), e) != out.vertex_to_link.end());
    // the color sink gets nothing from anyone
    for (std::size_t p = 0; p < r.sets.size(); ++p) CHECK_FALSE(r.contaminates_sink(p, out.color_sink));
}

TEST_CASE("fixed instances are equivalent") {
    struct Case {
        ColoringInstance c;
        bool colorable;
    };
    const std::vector<Case> cases{
        {cycle_instance(5, 2), false},    {cycle_instance(5, 3), true},     {complete_instance(2, 1), false},
        {complete_instance(2, 2), true},  {complete_instance(4, 3), false}, {complete_instance(4, 4), true},
        {cycle_instance(4, 2), true},
    };
    for (const auto& [c, colorable] : cases) {
        const auto out = reduce_coloring_to_network(c);
        check_counts(c, out);
        const auto v = check_equivalence(c, out);
        INFO(serialize_coloring(c));
        CHECK(v.consistent);
        CHECK(v.counts_ok);
        CHECK(v.colorable == colorable);
        CHECK(v.network_solvable == colorable);
        CHECK(v.detail.empty());
    }
}

TEST_CASE("forward and backward maps") {
    const auto c = cycle_instance(5, 3);
    const auto out = reduce_coloring_to_network(c);
    const auto col = color_exact(c.graph(), 3);
    REQUIRE(col);
    const auto a = assignment_from_vertex_coloring(out, c, *col);
    CHECK(verify_assignment(out.paths, contamination_sets(out.network, out.paths), a).ok);
    const auto back = pull_back_coloring(out, c, a);
    CHECK(back.color_of == col->color_of);

    // an improper coloring maps to a rejected assignment
    Coloring bad{{1, 1, 2, 1, 2}, 3};
    const auto a_bad = assignment_from_vertex_coloring(out, c, bad);
    CHECK_FALSE(verify_assignment(out.paths, contamination_sets(out.network, out.paths), a_bad).ok);
}

TEST_CASE("random G(8, 0.3) instances are equivalent") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        for (std::size_t colors : {2u, 3u}) {
            const auto c = random_gnp_instance(8, 0.3, colors, seed);
            const auto out = reduce_coloring_to_network(c);
            check_counts(c, out);
            const auto v = check_equivalence(c, out);
            INFO("seed " << seed << " colors " << colors << " " << v.detail);
            CHECK(v.consistent);
            CHECK(v.colorable == (oracle::chromatic(c.graph()) <= colors));
        }
    }
}

TEST_CASE("corpus generation") {
    CorpusParams p;
    p.size = 6;
    p.count = 4;
    const auto a = generate_corpus("random-gnp", p, 17), b = generate_corpus("random-gnp", p, 17);
    REQUIRE(a.size() == 4);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].filename == b[i].filename);
        CHECK(a[i].contents == b[i].contents);
        CHECK(parse_coloring(a[i].contents).vertices.size() == 6);
    }
    CHECK(generate_corpus("random-gnp", p, 18)[0].contents != a[0].contents);

    const auto cyc = generate_corpus("cycle", p, 0);
    REQUIRE(cyc.size() == 1);
    CHECK(parse_coloring(cyc[0].contents).graph() == cycle_graph(6));
    CHECK(parse_coloring(generate_corpus("complete", p, 0)[0].contents).graph() == complete_graph(6));

    const auto fx = generate_corpus("paper-fixtures", p, 0);
    CHECK(fx.size() >= 4);
    for (const auto& f : fx) {
        if (f.filename.ends_with(".net")) CHECK_NOTHROW(parse_network(f.contents));
    }
    CHECK_THROWS_AS(generate_corpus("petersen", p, 0), ValidationError);
    CHECK_THROWS_AS(fixture("nope"), std::out_of_range);
}
