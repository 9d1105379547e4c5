#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semistrong {

using Vertex = std::size_t;
using EdgeId = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;

    [[nodiscard]] Vertex other(Vertex x) const { return x == u ? v : u; }
    [[nodiscard]] bool has(Vertex x) const { return x == u || x == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Line-graph distance between edges lying in different components.
inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by root_tree() and tree-only algorithms on cyclic or disconnected input.
class NotATreeError : public GraphError {
public:
    using GraphError::GraphError;
};

/// Undirected simple graph. Vertices are 0..n-1; edges keep their insertion
/// index for the lifetime of the graph, so colorings and reduction maps can
/// refer to them by position.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count);
    Graph(std::size_t vertex_count, std::span<const Edge> edges);
    Graph(std::size_t vertex_count, std::initializer_list<Edge> edges);

    EdgeId add_edge(Vertex u, Vertex v);

    [[nodiscard]] std::size_t vertex_count() const { return adjacency_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const Edge& edge(EdgeId e) const;

    /// Incident edge ids of v in insertion order.
    [[nodiscard]] std::span<const EdgeId> incident(Vertex v) const;
    [[nodiscard]] std::size_t degree(Vertex v) const;
    [[nodiscard]] std::size_t max_degree() const;
    [[nodiscard]] bool adjacent(Vertex a, Vertex b) const;
    /// Edge id joining a and b, or kUnreachable if none.
    [[nodiscard]] EdgeId find_edge(Vertex a, Vertex b) const;

    [[nodiscard]] bool is_connected() const;
    [[nodiscard]] bool is_tree() const;
    [[nodiscard]] bool is_regular(std::size_t k) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    void check_vertex(Vertex v) const;

    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> adjacency_;
};

std::size_t degree(const Graph& g, Vertex v);

/// Distance between e and f in the line graph, computed from endpoint
/// distances in g (the line graph is never built).
std::size_t edge_distance(const Graph& g, EdgeId e, EdgeId f);

/// Tree with a designated root. Children are ordered by the parent's
/// incident-edge order in the underlying graph.
class RootedTree {
public:
    static constexpr Vertex kNoParent = std::numeric_limits<Vertex>::max();

    [[nodiscard]] const Graph& graph() const { return graph_; }
    [[nodiscard]] Vertex root() const { return root_; }
    [[nodiscard]] std::size_t size() const { return graph_.vertex_count(); }
    [[nodiscard]] Vertex parent(Vertex v) const { return parent_[v]; }
    /// Edge joining v to its parent; undefined for the root.
    [[nodiscard]] EdgeId parent_edge(Vertex v) const { return parent_edge_[v]; }
    [[nodiscard]] std::span<const Vertex> children(Vertex v) const;
    [[nodiscard]] std::size_t child_count(Vertex v) const { return children(v).size(); }
    [[nodiscard]] std::size_t depth(Vertex v) const { return depth_[v]; }
    /// Vertices in breadth-first order from the root.
    [[nodiscard]] const std::vector<Vertex>& bfs_order() const { return order_; }

private:
    friend RootedTree root_tree(Graph g, Vertex r);

    Graph graph_;
    Vertex root_ = 0;
    std::vector<Vertex> parent_;
    std::vector<EdgeId> parent_edge_;
    std::vector<std::size_t> child_offset_;
    std::vector<Vertex> child_list_;
    std::vector<std::size_t> depth_;
    std::vector<Vertex> order_;
};

RootedTree root_tree(Graph g, Vertex r);

// ---- text format -----------------------------------------------------------

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

Graph parse_graph(std::string_view text);
std::string render_graph(const Graph& g);
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

// ---- generators ------------------------------------------------------------

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Star on n vertices: center 0 joined to 1..n-1.
Graph star_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
/// Uniform labeled tree on n vertices from a seeded Pruefer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed);
/// Random recursive tree: vertex i attaches to a uniformly chosen earlier
/// vertex whose degree is still below max_degree.
Graph random_tree_bounded(std::size_t n, std::size_t max_degree, std::uint64_t seed);
/// Tree from an explicit Pruefer sequence over n = seq.size() + 2 vertices.
Graph tree_from_pruefer(std::span<const std::size_t> seq);
Graph circulant_graph(std::size_t n, std::span<const std::size_t> offsets);
Graph petersen_graph();
Graph hypercube_graph(std::size_t dimension);
/// Erdos-Renyi G(n, p) with a seeded generator.
Graph random_graph(std::size_t n, double edge_probability, std::uint64_t seed);

}  // namespace semistrong
