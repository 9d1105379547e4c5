#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "brute_force.hpp"
#include "doctest.h"
#include "semistrong/exact_solver.hpp"

using namespace semistrong;

namespace {

const ColoringKind kKinds[] = {ColoringKind::proper, ColoringKind::uniquely_restricted, ColoringKind::semistrong,
                               ColoringKind::strong};

std::uint64_t count(const Graph& g, ColoringKind kind, std::size_t K, bool symmetry) {
    SolveRequest req;
    req.graph = g;
    req.kind = kind;
    req.palette_size = K;
    req.mode = SolveMode::enumerate;
    req.symmetry_reduction = symmetry;
    return enumerate(req, [](const EdgeColoring&) { return true; }).count;
}

}  // namespace

TEST_CASE("decide examples") {
    CHECK(decide(cycle_graph(7), ColoringKind::semistrong, 3).outcome == Outcome::infeasible);
    const DecideResult c7 = decide(cycle_graph(7), ColoringKind::semistrong, 4);
    CHECK(c7.outcome == Outcome::feasible);
    REQUIRE(c7.witness);
    CHECK(verify_coloring(cycle_graph(7), *c7.witness, ColoringKind::semistrong));
    CHECK(decide(path_graph(6), ColoringKind::semistrong, 2).outcome == Outcome::infeasible);
    for (ColoringKind kind : kKinds) CHECK(decide(path_graph(2), kind, 1).outcome == Outcome::feasible);
}

TEST_CASE("min_colors examples") {
    CHECK(min_colors(cycle_graph(7), ColoringKind::semistrong).colors == 4);
    for (std::size_t m = 1; m <= 6; ++m) CHECK(min_colors(star_graph(m + 1), ColoringKind::semistrong).colors == m);
    CHECK(min_colors(path_graph(4), ColoringKind::semistrong).colors == 2);
    CHECK(min_colors(complete_graph(4), ColoringKind::proper).colors == 3);
    CHECK(min_colors(path_graph(4), ColoringKind::strong).colors == 3);
    CHECK(min_colors(petersen_graph(), ColoringKind::proper).colors == 4);
    CHECK_THROWS(min_colors(Graph(3), ColoringKind::proper));
}

TEST_CASE("enumerate examples") {
    CHECK(count(path_graph(2), ColoringKind::proper, 2, false) == 2);
    CHECK(count(path_graph(3), ColoringKind::proper, 2, false) == 2);
    CHECK(count(cycle_graph(4), ColoringKind::semistrong, 2, false) == 0);
    // Frozen from the definition-level enumerator in brute_force.hpp.
    CHECK(count(path_graph(5), ColoringKind::semistrong, 2, false) == 2);
    CHECK(count(cycle_graph(7), ColoringKind::semistrong, 4, false) == 840);
    CHECK(count(path_graph(5), ColoringKind::strong, 3, false) == 6);
}

TEST_CASE("enumeration counts match the definition-level enumerator") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = random_graph(4 + seed % 4, 0.45, seed);
        if (g.edge_count() == 0 || g.edge_count() > 9) continue;
        for (ColoringKind kind : kKinds)
            for (std::size_t K = 2; K <= 4; ++K) {
                const std::uint64_t all = count(g, kind, K, false);
                CHECK(all == oracle::count_colorings(g, K, kind));
                CHECK(count(g, kind, K, true) * K == all);
            }
    }
}

TEST_CASE("visited colorings are distinct and valid; cap and budget end early") {
    const Graph g = cycle_graph(7);
    SolveRequest req;
    req.graph = g;
    req.palette_size = 4;
    req.symmetry_reduction = false;
    std::set<std::vector<Color>> seen;
    const EnumerateResult all = enumerate(req, [&](const EdgeColoring& phi) {
        CHECK(verify_coloring(g, phi, ColoringKind::semistrong));
        seen.insert(phi.colors());
        return true;
    });
    CHECK(all.end == EnumerationEnd::exhausted);
    CHECK(seen.size() == all.count);

    req.limits.solution_cap = 10;
    const EnumerateResult capped = enumerate(req, [](const EdgeColoring&) { return true; });
    CHECK(capped.count == 10);
    CHECK(capped.end == EnumerationEnd::cap_reached);

    req.limits = {5, 0};
    const EnumerateResult starved = enumerate(req, [](const EdgeColoring&) { return true; });
    CHECK(starved.end == EnumerationEnd::budget_exhausted);

    std::uint64_t visits = 0;
    req.limits = {};
    const EnumerateResult stopped = enumerate(req, [&](const EdgeColoring&) { return ++visits < 3; });
    CHECK(stopped.end == EnumerationEnd::cap_reached);
    CHECK(visits == 3);
}

TEST_CASE("node budget gives unknown, never a guess") {
    const DecideResult r = decide(cycle_graph(13), ColoringKind::semistrong, 3, {3, 0});
    CHECK(r.outcome == Outcome::unknown);
    CHECK_FALSE(r.witness);
    const MinimizeResult m = min_colors(petersen_graph(), ColoringKind::strong, {10, 0});
    CHECK(m.outcome == Outcome::unknown);
}

TEST_CASE("min_colors matches the definition-level search; witnesses verify") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const Graph g = random_graph(4 + seed % 4, 0.5, seed + 1000);
        if (g.edge_count() == 0 || g.edge_count() > 10) continue;
        for (ColoringKind kind : kKinds) {
            const MinimizeResult r = min_colors(g, kind);
            REQUIRE(r.outcome == Outcome::feasible);
            CHECK(r.colors == oracle::min_colors(g, kind));
            REQUIRE(r.witness);
            CHECK(verify_coloring(g, *r.witness, kind));
        }
    }
}

TEST_CASE("decide is monotone in the palette and independent of search options") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = random_graph(6 + seed % 3, 0.4, seed + 77);
        if (g.edge_count() == 0) continue;
        for (ColoringKind kind : kKinds) {
            bool before = false;
            for (std::size_t K = 1; K <= g.edge_count() && K <= 8; ++K) {
                SolveRequest req;
                req.graph = g;
                req.kind = kind;
                req.palette_size = K;
                const Outcome a = decide(req).outcome;
                req.symmetry_reduction = false;
                req.fewest_remaining_first = false;
                const Outcome b = decide(req).outcome;
                CHECK(a == b);
                if (before) CHECK(a == Outcome::feasible);
                before = a == Outcome::feasible;
            }
        }
    }
}

TEST_CASE("two colors suffice exactly for short path forests") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Graph g = random_graph(3 + seed % 7, 0.2, seed + 5);
        const bool solver = decide(g, ColoringKind::semistrong, 2).outcome == Outcome::feasible;
        CHECK(solver == is_semistrong_2_colorable(g));
    }
}

TEST_CASE("breadth-first edge order covers every edge once") {
    const Graph g(6, {{3, 4}, {0, 1}, {1, 2}, {4, 5}, {0, 2}});
    const std::vector<EdgeId> order = bfs_edge_order(g);
    CHECK(order == std::vector<EdgeId>{1, 4, 2, 0, 3});
}
