#include "semistrong/graph.hpp"

#include <functional>
#include <queue>
#include <random>

namespace semistrong {

namespace {

// Portable bounded draw; std::uniform_int_distribution differs across
// standard libraries and generated instances must be reproducible.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void require(bool ok, const char* what) {
    if (!ok) throw GraphError(what);
}

}  // namespace

Graph path_graph(std::size_t n) {
    require(n >= 1, "path: n must be >= 1");
    Graph g(n);
    for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(std::size_t n) {
    require(n >= 3, "cycle: n must be >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(std::size_t n) {
    require(n >= 1, "star: n must be >= 1");
    Graph g(n);
    for (Vertex i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

Graph complete_graph(std::size_t n) {
    require(n >= 1, "complete: n must be >= 1");
    Graph g(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
    require(a >= 1 && b >= 1, "complete_bipartite: both sides must be nonempty");
    Graph g(a + b);
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph tree_from_pruefer(std::span<const std::size_t> seq) {
    const std::size_t n = seq.size() + 2;
    std::vector<std::size_t> remaining(n, 1);
    for (std::size_t x : seq) {
        require(x < n, "pruefer: label out of range");
        ++remaining[x];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (remaining[v] == 1) leaves.push(v);

    Graph g(n);
    for (std::size_t x : seq) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        g.add_edge(leaf, x);
        if (--remaining[x] == 1) leaves.push(x);
    }
    const Vertex a = leaves.top();
    leaves.pop();
    g.add_edge(a, leaves.top());
    return g;
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
    require(n >= 1, "random_tree: n must be >= 1");
    if (n == 1) return Graph(1);
    if (n == 2) return path_graph(2);
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> seq(n - 2);
    for (auto& x : seq) x = uniform_below(rng, n);
    return tree_from_pruefer(seq);
}

Graph random_tree_bounded(std::size_t n, std::size_t max_degree, std::uint64_t seed) {
    require(n >= 1, "random_tree_bounded: n must be >= 1");
    require(max_degree >= 2 || n <= 2, "random_tree_bounded: max_degree must be >= 2");
    std::mt19937_64 rng(seed);
    Graph g(n);
    // Vertices that can still accept a neighbor; swap-remove when saturated.
    std::vector<Vertex> open{0};
    for (Vertex v = 1; v < n; ++v) {
        const std::size_t pick = uniform_below(rng, open.size());
        const Vertex parent = open[pick];
        g.add_edge(parent, v);
        if (g.degree(parent) == max_degree) {
            open[pick] = open.back();
            open.pop_back();
        }
        open.push_back(v);
    }
    return g;
}

Graph circulant_graph(std::size_t n, std::span<const std::size_t> offsets) {
    require(n >= 3, "circulant: n must be >= 3");
    Graph g(n);
    for (std::size_t d : offsets) {
        require(d >= 1 && 2 * d <= n, "circulant: offsets must lie in 1..n/2");
        for (Vertex i = 0; i < n; ++i) {
            const Vertex j = (i + d) % n;
            if (!g.adjacent(i, j)) g.add_edge(i, j);
        }
    }
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph hypercube_graph(std::size_t dimension) {
    require(dimension >= 1 && dimension < 24, "hypercube: dimension must be in 1..23");
    const std::size_t n = std::size_t{1} << dimension;
    Graph g(n);
    for (Vertex x = 0; x < n; ++x)
        for (std::size_t b = 0; b < dimension; ++b) {
            const Vertex y = x ^ (std::size_t{1} << b);
            if (x < y) g.add_edge(x, y);
        }
    return g;
}

Graph random_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
    require(n >= 1, "random_graph: n must be >= 1");
    require(edge_probability >= 0.0 && edge_probability <= 1.0, "random_graph: p must be in [0,1]");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (uniform_unit(rng) < edge_probability) g.add_edge(i, j);
    return g;
}

}  // namespace semistrong
