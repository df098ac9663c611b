#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "nudcode/errors.hpp"
#include "nudcode/solver.hpp"
#include "oracles.hpp"

using namespace nudcode;

namespace {

struct Built {
    NetworkInstance g;
    PathDecomposition d;
    ContaminationReport r;
};

Built load(const std::string& name) {
    auto g = testfx::network(name);
    auto d = testfx::paths(g, name);
    auto r = contamination_sets(g, d);
    return {std::move(g), std::move(d), std::move(r)};
}

Built load_text(const std::string& text) {
    auto g = parse_network(text);
    auto d = decompose(g);
    auto r = contamination_sets(g, d);
    return {std::move(g), std::move(d), std::move(r)};
}

StreamAssignment make(std::vector<std::size_t> f, std::size_t nbar) { return {std::move(f), nbar, {}}; }

bool per_sink_distinct(const PathDecomposition& d, const StreamAssignment& a) {
    for (std::size_t j = 0; j < d.sink_count(); ++j) {
        std::set<std::size_t> seen;
        for (std::size_t k = 0; k < d.paths_to(j); ++k) seen.insert(a.stream_of_path[d.flat({j, k})]);
        if (seen.size() != d.paths_to(j)) return false;
    }
    return true;
}

// Shuffles the edge lines of a network file.
std::string shuffled(const std::string& text, std::uint64_t seed) {
    std::vector<std::string> head, edges;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) (line.rfind("edge ", 0) == 0 ? edges : head).push_back(line);
    std::mt19937_64 rng(seed);
    std::shuffle(edges.begin(), edges.end(), rng);
    std::string out;
    for (const auto& l : head) out += l + "\n";
    for (const auto& l : edges) out += l + "\n";
    return out;
}

}  // namespace

TEST_CASE("verify: butterfly assignments") {
    const auto b = load("butterfly");
    // flat order 1.1, 1.2, 2.1, 2.2
    auto good = verify_assignment(b.d, b.r, make({1, 2, 1, 2}, 2));
    CHECK(good.ok);
    CHECK(good.violations.empty());
    CHECK(good.checks > 0);

    auto dup = verify_assignment(b.d, b.r, make({1, 1, 1, 2}, 2));
    CHECK_FALSE(dup.ok);
    CHECK(std::any_of(dup.violations.begin(), dup.violations.end(),
                      [](const Violation& v) { return v.kind == ViolationKind::duplicate_stream && v.sink == 0; }));

    auto range = verify_assignment(b.d, b.r, make({1, 3, 1, 2}, 2));
    CHECK_FALSE(range.ok);
    CHECK(range.violations.front().kind == ViolationKind::out_of_range);

    auto unassigned = verify_assignment(b.d, b.r, make({1, 0, 1, 2}, 2));
    CHECK(unassigned.violations.front().kind == ViolationKind::unassigned);

    // 2.1 reaches t1 carrying stream 3, which t1 does not hold
    auto mixed = verify_assignment(b.d, b.r, make({1, 2, 3, 1}, 3));
    CHECK_FALSE(mixed.ok);
    bool found = false;
    for (const auto& v : mixed.violations) {
        if (v.kind == ViolationKind::contaminant && v.sink == 0 && v.path == 2 && v.stream == 3) found = true;
    }
    CHECK(found);

    CHECK_THROWS_AS(verify_assignment(b.d, b.r, make({1, 2, 1}, 2)), ShapeError);
}

TEST_CASE("brute force: fixtures") {
    const auto ext = load("extended_butterfly");
    CHECK_FALSE(brute_force_assign(ext.d, ext.r, 2));
    const auto a = brute_force_assign(ext.d, ext.r, 3);
    REQUIRE(a);
    CHECK(verify_assignment(ext.d, ext.r, *a).ok);
    CHECK(std::set<std::size_t>(a->stream_of_path.begin(), a->stream_of_path.end()).size() == 3);

    const auto cex = load("counterexample");
    CHECK_FALSE(brute_force_assign(cex.d, cex.r, 2));
    CHECK_FALSE(brute_force_assign(cex.d, cex.r, 3));
    CHECK_FALSE(brute_force_assign(cex.d, cex.r, 4));

    BruteForceCaps tight{2, 4};
    CHECK_THROWS_AS(brute_force_assign(cex.d, cex.r, 3, tight), CapError);
    CHECK_THROWS_AS(brute_force_assign(cex.d, cex.r, 5), CapError);
}

TEST_CASE("single sink is always solvable at n") {
    const auto b = load_text("source s\nsink t\nedge s a\nedge s b\nedge a t\nedge b t\nedge s t\n");
    CHECK(b.d.n() == 3);
    const auto rep = solve(b.g);
    REQUIRE(rep.outcome == Outcome::solution);
    CHECK(per_sink_distinct(rep.decomposition, *rep.assignment));
    CHECK(rep.assignment->rates == std::vector<std::size_t>{3});
}

TEST_CASE("solve: fixtures") {
    SUBCASE("butterfly") {
        const auto rep = solve(testfx::network("butterfly"));
        REQUIRE(rep.outcome == Outcome::solution);
        CHECK(rep.assignment->rates == std::vector<std::size_t>{2, 2});
        CHECK(rep.attempts.size() == 1);
        CHECK(rep.attempts[0].used_two_coloring);
    }
    SUBCASE("extended butterfly needs three streams") {
        const auto g = testfx::network("extended_butterfly");
        SolveOptions o;
        o.nbar = 3;
        const auto rep = solve(g, o);
        REQUIRE(rep.outcome == Outcome::solution);
        CHECK(rep.assignment->rates == std::vector<std::size_t>{2, 3});
        CHECK(rep.attempts[0].omega == 3);
        CHECK(rep.attempts[0].berge.status == BergeStatus::berge);
    }
    SUBCASE("counterexample is infeasible up to the ceiling") {
        SolveOptions o;
        o.auto_nbar = true;
        const auto rep = solve(testfx::network("counterexample"), o);
        CHECK(rep.outcome == Outcome::infeasible);
        REQUIRE(rep.attempts.size() == 4);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(rep.attempts[i].nbar == 2 + i);
            CHECK(rep.attempts[i].omega == 3 + i);
            CHECK(rep.attempts[i].outcome == Outcome::infeasible);
        }
        CHECK(rep.diagnostic == "ω exceeds n̄ for all n̄ ≤ n+3 (n = 2)");
    }
    SUBCASE("non-Berge instance is still solved") {
        const auto g = testfx::network("non_berge");
        SolveOptions o;
        o.paths = testfx::paths(g, "non_berge");
        const auto rep = solve(g, o);
        REQUIRE(rep.outcome == Outcome::solution);
        CHECK(rep.attempts[0].berge.status == BergeStatus::not_berge);
        CHECK(rep.attempts[0].witness_names.size() == 5);
        CHECK(verify_assignment(rep.decomposition, rep.contamination, *rep.assignment).ok);
    }
}

TEST_CASE("auto n-bar stops at the first feasible budget") {
    const auto ext = solve(testfx::network("extended_butterfly"), SolveOptions{.auto_nbar = true});
    REQUIRE(ext.outcome == Outcome::solution);
    CHECK(ext.attempts.size() == 1);
    CHECK(ext.assignment->nbar == 3);

    // Fictitious vertices grow with n-bar as fast as the budget does, so the
    // clique excess is the same at every attempt.
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        RandomNetworkParams p;
        p.nodes = 6 + seed % 6;
        p.sinks = 2 + seed % 3;
        p.edge_probability = 0.4;
        SolveOptions o;
        o.auto_nbar = true;
        o.check_berge = false;
        const auto rep = solve(random_network(p, seed), o);
        const auto& first = rep.attempts.front();
        for (const auto& at : rep.attempts) CHECK(at.omega - at.nbar == first.omega - first.nbar);
        if (rep.outcome == Outcome::solution) {
            CHECK(rep.assignment->nbar == rep.attempts.back().nbar);
            for (std::size_t i = 0; i + 1 < rep.attempts.size(); ++i)
                CHECK(rep.attempts[i].outcome == Outcome::infeasible);
        }
    }
}

TEST_CASE("coloring decision matches exhaustive assignment search") {
    int compared = 0, feasible = 0, infeasible = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        RandomNetworkParams p;
        p.nodes = 5 + seed % 7;
        p.sinks = 2 + seed % 3;
        p.edge_probability = 0.3 + 0.05 * (seed % 5);
        const auto g = random_network(p, seed);
        const auto d = decompose(g);
        if (d.total_paths() > 10) continue;
        const auto r = contamination_sets(g, d);
        for (std::size_t nbar = d.n(); nbar <= std::min<std::size_t>(d.n() + 1, 4); ++nbar) {
            const auto brute = brute_force_assign(d, r, nbar);
            SolveOptions o;
            o.nbar = nbar;
            o.check_berge = false;
            const auto rep = solve(g, o);
            ++compared;
            CHECK(brute.has_value() == (rep.outcome == Outcome::solution));
            if (brute) {
                ++feasible;
                CHECK(verify_assignment(d, r, *brute).ok);
                CHECK(per_sink_distinct(d, *rep.assignment));
            } else {
                ++infeasible;
            }
        }
    }
    CHECK(compared > 150);
    CHECK(feasible > 20);
    CHECK(infeasible > 20);
}

TEST_CASE("with paths fixed, outcome does not depend on edge declaration order") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        RandomNetworkParams p;
        p.nodes = 6 + seed % 5;
        p.sinks = 2 + seed % 2;
        const auto g = random_network(p, seed);
        const auto h = parse_network(shuffled(serialize_network(g), seed));
        SolveOptions o;
        o.auto_nbar = true;
        o.auto_ceiling = 1;
        o.check_berge = false;
        const auto a = solve(g, o);
        o.paths = parse_paths(h, serialize_paths(g, a.decomposition));
        const auto b = solve(h, o);
        CHECK(a.outcome == b.outcome);
        CHECK(a.contamination.m == b.contamination.m);
        if (a.outcome == Outcome::solution && b.outcome == Outcome::solution)
            CHECK(a.assignment->nbar == b.assignment->nbar);
    }
}

TEST_CASE("seeded tie-breaking still gives verified solutions") {
    const auto g = testfx::network("non_berge");
    for (std::uint64_t seed : {1u, 2u, 3u, 99u}) {
        SolveOptions o;
        o.paths = testfx::paths(g, "non_berge");
        o.seed = seed;
        const auto rep = solve(g, o);
        REQUIRE(rep.outcome == Outcome::solution);
        CHECK(verify_assignment(rep.decomposition, rep.contamination, *rep.assignment).ok);
    }
}
