#pragma once

// Test-only reference implementations written straight from the definitions.
// They share no code with the library beyond Graph, so agreement between the
// two is meaningful. Exponential; small inputs only.

#include <functional>
#include <set>
#include <vector>

#include "semistrong/coloring.hpp"
#include "semistrong/graph.hpp"
#include "semistrong/tree_dp.hpp"

namespace oracle {

using namespace semistrong;

inline std::vector<Vertex> endpoints(const Graph& g, const std::vector<EdgeId>& m) {
    std::vector<Vertex> vs;
    for (EdgeId e : m) {
        vs.push_back(g.edge(e).u);
        vs.push_back(g.edge(e).v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

inline bool is_matching(const Graph& g, const std::vector<EdgeId>& m) {
    return endpoints(g, m).size() == 2 * m.size();
}

// Degree of x in the subgraph induced by vs.
inline std::size_t induced_degree(const Graph& g, const std::vector<Vertex>& vs, Vertex x) {
    std::size_t d = 0;
    for (Vertex y : vs)
        if (y != x && g.adjacent(x, y)) ++d;
    return d;
}

// Perfect matchings of the subgraph induced by vs, capped at 2.
inline int perfect_matchings(const Graph& g, std::vector<Vertex> vs) {
    if (vs.empty()) return 1;
    const Vertex x = vs.front();
    int total = 0;
    for (std::size_t i = 1; i < vs.size() && total < 2; ++i) {
        if (!g.adjacent(x, vs[i])) continue;
        std::vector<Vertex> rest;
        for (std::size_t j = 1; j < vs.size(); ++j)
            if (j != i) rest.push_back(vs[j]);
        total += perfect_matchings(g, rest);
    }
    return std::min(total, 2);
}

inline bool satisfies(const Graph& g, const std::vector<EdgeId>& m, ColoringKind kind) {
    if (!is_matching(g, m)) return false;
    const std::vector<Vertex> vs = endpoints(g, m);
    switch (kind) {
        case ColoringKind::proper: return true;
        case ColoringKind::uniquely_restricted: return perfect_matchings(g, vs) == 1;
        case ColoringKind::semistrong:
            for (EdgeId e : m)
                if (induced_degree(g, vs, g.edge(e).u) != 1 && induced_degree(g, vs, g.edge(e).v) != 1) return false;
            return true;
        case ColoringKind::strong:
            for (Vertex x : vs)
                if (induced_degree(g, vs, x) != 1) return false;
            return true;
    }
    return false;
}

inline bool valid_coloring(const Graph& g, const std::vector<Color>& colors, std::size_t K, ColoringKind kind) {
    for (Color c = 1; c <= K; ++c) {
        std::vector<EdgeId> cls;
        for (EdgeId e = 0; e < colors.size(); ++e)
            if (colors[e] == c) cls.push_back(e);
        if (!satisfies(g, cls, kind)) return false;
    }
    return true;
}

// Visits every valid coloring with colors 1..K (no symmetry reduction).
// Partial classes are checked as they grow; the predicates are closed under
// sub-matchings so this only skips dead branches.
inline std::uint64_t for_each_coloring(const Graph& g, std::size_t K, ColoringKind kind,
                                       const std::function<void(const std::vector<Color>&)>& visit) {
    const std::size_t m = g.edge_count();
    std::vector<Color> colors(m, 0);
    std::uint64_t count = 0;
    std::function<void(std::size_t)> go = [&](std::size_t e) {
        if (e == m) {
            if (!valid_coloring(g, colors, K, kind)) return;
            ++count;
            visit(colors);
            return;
        }
        for (Color c = 1; c <= K; ++c) {
            colors[e] = c;
            std::vector<EdgeId> cls;
            for (EdgeId f = 0; f <= e; ++f)
                if (colors[f] == c) cls.push_back(f);
            if (satisfies(g, cls, kind)) go(e + 1);
        }
        colors[e] = 0;
    };
    go(0);
    return count;
}

inline std::uint64_t count_colorings(const Graph& g, std::size_t K, ColoringKind kind) {
    return for_each_coloring(g, K, kind, [](const std::vector<Color>&) {});
}

inline std::size_t min_colors(const Graph& g, ColoringKind kind) {
    if (g.edge_count() == 0) return 0;
    for (std::size_t K = 1;; ++K) {
        bool found = false;
        std::vector<Color> colors(g.edge_count(), 0);
        // Stop at the first solution.
        std::function<bool(std::size_t)> go = [&](std::size_t e) {
            if (e == colors.size()) return valid_coloring(g, colors, K, kind);
            for (Color c = 1; c <= K; ++c) {
                colors[e] = c;
                std::vector<EdgeId> cls;
                for (EdgeId f = 0; f <= e; ++f)
                    if (colors[f] == c) cls.push_back(f);
                if (satisfies(g, cls, kind) && go(e + 1)) return true;
            }
            colors[e] = 0;
            return false;
        };
        found = go(0);
        if (found) return K;
    }
}

// Color types at root v of the subtree T_v, from the definitions: edge
// generation is the larger endpoint distance from v; a 1-vertex has induced
// degree 1 among the endpoints of its color class within T_v.
inline semistrong::Quadruple classify(const Graph& tree, Vertex v, const std::vector<Color>& colors, Vertex parent_of_v,
                                      std::size_t K) {
    const std::size_t n = tree.vertex_count();
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::vector<Vertex> queue{v};
    dist[v] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (EdgeId e : tree.incident(queue[h])) {
            const Vertex y = tree.edge(e).other(queue[h]);
            if (y == parent_of_v && queue[h] == v) continue;
            if (dist[y] == SIZE_MAX) {
                dist[y] = dist[queue[h]] + 1;
                queue.push_back(y);
            }
        }
    std::vector<EdgeId> inside;
    for (EdgeId e = 0; e < tree.edge_count(); ++e)
        if (dist[tree.edge(e).u] != SIZE_MAX && dist[tree.edge(e).v] != SIZE_MAX) inside.push_back(e);
    auto gen = [&](EdgeId e) { return std::max(dist[tree.edge(e).u], dist[tree.edge(e).v]); };
    auto far = [&](EdgeId e) { return dist[tree.edge(e).u] > dist[tree.edge(e).v] ? tree.edge(e).u : tree.edge(e).v; };
    auto one_vertex = [&](EdgeId e, Vertex x) {
        std::vector<EdgeId> cls;
        for (EdgeId f : inside)
            if (colors[f] == colors[e]) cls.push_back(f);
        return induced_degree(tree, endpoints(tree, cls), x) == 1;
    };
    semistrong::Quadruple out;
    for (Color c = 1; c <= K; ++c) {
        bool first = false, first_one = false, second = false, second_all_one = true;
        for (EdgeId e : inside) {
            if (colors[e] != c) continue;
            if (gen(e) == 1) {
                first = true;
                first_one = one_vertex(e, far(e));
            } else if (gen(e) == 2) {
                second = true;
                if (!one_vertex(e, far(e))) second_all_one = false;
            }
        }
        if (first) (first_one ? out.p : out.q)++;
        else if (second) (second_all_one ? out.s : out.t)++;
    }
    return out;
}

// All labeled trees on n vertices (n >= 2) via Pruefer sequences.
inline void for_each_labeled_tree(std::size_t n, const std::function<void(const Graph&)>& visit) {
    if (n == 1) {
        visit(Graph(1));
        return;
    }
    if (n == 2) {
        visit(path_graph(2));
        return;
    }
    std::vector<std::size_t> seq(n - 2, 0);
    while (true) {
        visit(tree_from_pruefer(seq));
        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
        if (i == seq.size()) break;
    }
}

}  // namespace oracle
