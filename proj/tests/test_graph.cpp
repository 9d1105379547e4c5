#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "semistrong/graph.hpp"

using namespace semistrong;

TEST_CASE("degree") {
    CHECK(degree(path_graph(3), 1) == 2);
    const Graph k4 = complete_graph(4);
    for (Vertex v = 0; v < 4; ++v) CHECK(degree(k4, v) == 3);
    CHECK(degree(Graph(1), 0) == 0);
    CHECK_THROWS_AS(degree(path_graph(3), 3), GraphError);
}

TEST_CASE("edge distance in the line graph") {
    const Graph p4 = path_graph(4);
    CHECK(edge_distance(p4, 0, 2) == 2);
    CHECK(edge_distance(p4, 0, 1) == 1);
    CHECK(edge_distance(p4, 1, 1) == 0);
    const Graph two_k2(4, {{0, 1}, {2, 3}});
    CHECK(edge_distance(two_k2, 0, 1) == kUnreachable);
    const Graph p6 = path_graph(6);
    CHECK(edge_distance(p6, 0, 4) == 4);
    CHECK(edge_distance(cycle_graph(8), 0, 4) == 4);
}

TEST_CASE("edge distance is symmetric and obeys the triangle inequality") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_graph(9, 0.3, seed);
        const std::size_t m = g.edge_count();
        for (EdgeId a = 0; a < m; ++a)
            for (EdgeId b = 0; b < m; ++b) {
                const std::size_t ab = edge_distance(g, a, b);
                CHECK(ab == edge_distance(g, b, a));
                for (EdgeId c = 0; c < m; ++c) {
                    const std::size_t bc = edge_distance(g, b, c), ac = edge_distance(g, a, c);
                    if (ab != kUnreachable && bc != kUnreachable) CHECK(ac <= ab + bc);
                }
            }
    }
}

TEST_CASE("handshake") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = random_graph(12, 0.35, seed);
        std::size_t total = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
        CHECK(total == 2 * g.edge_count());
    }
}

TEST_CASE("graph construction rejects bad edges") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), GraphError);
    CHECK_THROWS_AS(g.add_edge(2, 2), GraphError);
    CHECK_THROWS_AS(g.add_edge(0, 3), GraphError);
    CHECK(g.find_edge(1, 0) == 0);
    CHECK(g.find_edge(1, 2) == kUnreachable);
}

TEST_CASE("parse and render") {
    const Graph p3 = parse_graph("3 2\n0 1\n1 2");
    CHECK(p3 == path_graph(3));
    const std::string canonical = "4 3\n0 1\n1 2\n1 3\n";
    CHECK(render_graph(parse_graph(canonical)) == canonical);
    CHECK(parse_graph("# comment\n\n2 1\n# another\n0 1\n") == path_graph(2));

    auto line_of = [](const char* text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("2 1\n0 0") == 2);
    CHECK(line_of("x\n") == 1);
    CHECK(line_of("3 2\n0 1\n1 0\n") == 3);
    CHECK(line_of("3 1\n0 5\n") == 2);
    CHECK(line_of("3 2\n0 1\n") != 0);
    CHECK(line_of("") != 0);
}

TEST_CASE("render then parse is the identity on random graphs") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = random_graph(15, 0.2, seed);
        CHECK(parse_graph(render_graph(g)) == g);
    }
}

TEST_CASE("generators") {
    const Graph c7 = cycle_graph(7);
    CHECK(c7.vertex_count() == 7);
    CHECK(c7.edge_count() == 7);
    CHECK(c7.is_regular(2));
    CHECK(random_tree(10, 42) == random_tree(10, 42));
    CHECK(random_tree(10, 42).is_tree());
    const std::size_t offsets[] = {1, 2};
    const Graph circ = circulant_graph(8, offsets);
    CHECK(circ.is_regular(4));
    CHECK(circ.edge_count() == 16);
    CHECK(petersen_graph().is_regular(3));
    CHECK(petersen_graph().edge_count() == 15);
    CHECK(hypercube_graph(3).is_regular(3));
    CHECK(complete_bipartite_graph(3, 3).is_regular(3));
    CHECK(star_graph(5).max_degree() == 4);
    CHECK_THROWS_AS(cycle_graph(2), GraphError);
    CHECK_THROWS_AS(path_graph(0), GraphError);

    const Graph bounded = random_tree_bounded(5000, 4, 3);
    CHECK(bounded.is_tree());
    CHECK(bounded.max_degree() <= 4);
    CHECK(bounded == random_tree_bounded(5000, 4, 3));
}

TEST_CASE("root_tree") {
    const RootedTree p3 = root_tree(path_graph(3), 0);
    CHECK(p3.child_count(0) == 1);
    CHECK(p3.child_count(1) == 1);
    CHECK(p3.child_count(2) == 0);

    const RootedTree star = root_tree(star_graph(5), 0);
    CHECK(star.child_count(0) == 4);
    for (Vertex c : star.children(0)) CHECK(star.child_count(c) == 0);

    CHECK_THROWS_AS(root_tree(cycle_graph(4), 0), NotATreeError);
    CHECK_THROWS_AS(root_tree(Graph(3, {{0, 1}}), 0), NotATreeError);
}

TEST_CASE("root_tree reaches every vertex and lists children in edge order") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_tree(40, seed);
        for (Vertex r : {Vertex{0}, Vertex{17}, Vertex{39}}) {
            const RootedTree t = root_tree(g, r);
            CHECK(t.bfs_order().size() == 40);
            std::size_t links = 0;
            for (Vertex v = 0; v < 40; ++v) {
                if (v != r) {
                    ++links;
                    CHECK(g.edge(t.parent_edge(v)).has(t.parent(v)));
                }
                CHECK(t.child_count(v) == g.degree(v) - (v == r ? 0 : 1));
                const auto cs = t.children(v);
                for (std::size_t i = 1; i < cs.size(); ++i) CHECK(t.parent_edge(cs[i - 1]) < t.parent_edge(cs[i]));
            }
            CHECK(links == 39);
        }
    }
}
