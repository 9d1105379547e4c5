#include "semistrong/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace semistrong {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : adjacency_(vertex_count) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(std::size_t vertex_count, std::initializer_list<Edge> edges)
    : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
    if (v >= adjacency_.size())
        throw GraphError("vertex " + std::to_string(v) + " out of range (n = " +
                         std::to_string(adjacency_.size()) + ")");
}

EdgeId Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (find_edge(u, v) != kUnreachable)
        throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    const EdgeId id = edges_.size();
    edges_.push_back({u, v});
    adjacency_[u].push_back(id);
    adjacency_[v].push_back(id);
    return id;
}

const Edge& Graph::edge(EdgeId e) const {
    if (e >= edges_.size())
        throw GraphError("edge " + std::to_string(e) + " out of range (m = " +
                         std::to_string(edges_.size()) + ")");
    return edges_[e];
}

std::span<const EdgeId> Graph::incident(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
}

std::size_t Graph::degree(Vertex v) const {
    check_vertex(v);
    return adjacency_[v].size();
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& inc : adjacency_) best = std::max(best, inc.size());
    return best;
}

EdgeId Graph::find_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    const auto& small = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
    const Vertex from = adjacency_[a].size() <= adjacency_[b].size() ? a : b;
    const Vertex to = from == a ? b : a;
    for (EdgeId e : small)
        if (edges_[e].other(from) == to) return e;
    return kUnreachable;
}

bool Graph::adjacent(Vertex a, Vertex b) const { return find_edge(a, b) != kUnreachable; }

bool Graph::is_connected() const {
    if (adjacency_.empty()) return true;
    std::vector<char> seen(adjacency_.size(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (EdgeId e : adjacency_[x]) {
            const Vertex y = edges_[e].other(x);
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == adjacency_.size();
}

bool Graph::is_tree() const {
    return !adjacency_.empty() && edges_.size() + 1 == adjacency_.size() && is_connected();
}

bool Graph::is_regular(std::size_t k) const {
    return std::all_of(adjacency_.begin(), adjacency_.end(),
                       [k](const auto& inc) { return inc.size() == k; });
}

std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

std::size_t edge_distance(const Graph& g, EdgeId e, EdgeId f) {
    const Edge& a = g.edge(e);
    const Edge& b = g.edge(f);
    if (e == f) return 0;
    if (a.has(b.u) || a.has(b.v)) return 1;
    for (Vertex x : {a.u, a.v})
        for (Vertex y : {b.u, b.v})
            if (g.adjacent(x, y)) return 2;

    // Multi-source BFS from the endpoints of e; line distance is 1 + the
    // smallest endpoint-to-endpoint distance.
    std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
    std::deque<Vertex> queue{a.u, a.v};
    dist[a.u] = dist[a.v] = 0;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        if (x == b.u || x == b.v) return dist[x] + 1;
        for (EdgeId h : g.incident(x)) {
            const Vertex y = g.edge(h).other(x);
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return kUnreachable;
}

std::span<const Vertex> RootedTree::children(Vertex v) const {
    return {child_list_.data() + child_offset_[v], child_offset_[v + 1] - child_offset_[v]};
}

RootedTree root_tree(Graph g, Vertex r) {
    const std::size_t n = g.vertex_count();
    if (r >= n) throw GraphError("root " + std::to_string(r) + " out of range");
    if (g.edge_count() + 1 != n)
        throw NotATreeError("not a tree: " + std::to_string(n) + " vertices but " +
                            std::to_string(g.edge_count()) + " edges");

    RootedTree t;
    t.root_ = r;
    t.parent_.assign(n, RootedTree::kNoParent);
    t.parent_edge_.assign(n, kUnreachable);
    t.depth_.assign(n, 0);
    t.order_.reserve(n);

    std::vector<char> seen(n, 0);
    seen[r] = 1;
    t.order_.push_back(r);
    std::vector<std::size_t> counts(n, 0);
    for (std::size_t head = 0; head < t.order_.size(); ++head) {
        const Vertex x = t.order_[head];
        for (EdgeId e : g.incident(x)) {
            const Vertex y = g.edge(e).other(x);
            if (y == t.parent_[x] && e == t.parent_edge_[x]) continue;
            if (seen[y]) throw NotATreeError("not a tree: cycle through edge " + std::to_string(e));
            seen[y] = 1;
            t.parent_[y] = x;
            t.parent_edge_[y] = e;
            t.depth_[y] = t.depth_[x] + 1;
            ++counts[x];
            t.order_.push_back(y);
        }
    }
    if (t.order_.size() != n) throw NotATreeError("not a tree: graph is disconnected");

    t.child_offset_.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) t.child_offset_[v + 1] = t.child_offset_[v] + counts[v];
    t.child_list_.assign(n - 1, 0);
    std::vector<std::size_t> fill(t.child_offset_.begin(), t.child_offset_.end() - 1);
    // BFS order preserves each parent's incident-edge order.
    for (std::size_t i = 1; i < t.order_.size(); ++i) {
        const Vertex y = t.order_[i];
        t.child_list_[fill[t.parent_[y]]++] = y;
    }
    t.graph_ = std::move(g);
    return t;
}

}  // namespace semistrong
