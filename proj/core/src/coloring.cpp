#include "semistrong/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace semistrong {

EdgeColoring::EdgeColoring(std::vector<Color> colors, std::size_t palette_size)
    : colors_(std::move(colors)), palette_(palette_size) {
    for (std::size_t e = 0; e < colors_.size(); ++e)
        if (colors_[e] < 1 || colors_[e] > palette_)
            throw ColoringError("edge " + std::to_string(e) + " has color " +
                                std::to_string(colors_[e]) + " outside palette 1.." +
                                std::to_string(palette_));
}

EdgeColoring EdgeColoring::from_colors(std::vector<Color> colors) {
    const Color top = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
    return EdgeColoring(std::move(colors), top);
}

std::size_t EdgeColoring::distinct_colors() const {
    std::vector<char> used(palette_ + 1, 0);
    std::size_t count = 0;
    for (Color c : colors_)
        if (!used[c]) {
            used[c] = 1;
            ++count;
        }
    return count;
}

std::vector<EdgeId> EdgeColoring::color_class(Color c) const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < colors_.size(); ++e)
        if (colors_[e] == c) out.push_back(e);
    return out;
}

std::string_view to_string(MatchingClass c) {
    switch (c) {
        case MatchingClass::not_a_matching: return "not-a-matching";
        case MatchingClass::matching: return "matching";
        case MatchingClass::uniquely_restricted: return "uniquely-restricted";
        case MatchingClass::semistrong: return "semistrong";
        case MatchingClass::induced: return "induced";
    }
    return "?";
}

std::string_view to_string(ColoringKind k) {
    switch (k) {
        case ColoringKind::proper: return "proper";
        case ColoringKind::uniquely_restricted: return "uniquely-restricted";
        case ColoringKind::semistrong: return "semistrong";
        case ColoringKind::strong: return "strong";
    }
    return "?";
}

std::optional<ColoringKind> parse_coloring_kind(std::string_view name) {
    if (name == "proper") return ColoringKind::proper;
    if (name == "uniquely-restricted" || name == "ur") return ColoringKind::uniquely_restricted;
    if (name == "semistrong") return ColoringKind::semistrong;
    if (name == "strong" || name == "induced") return ColoringKind::strong;
    return std::nullopt;
}

MatchingClass required_class(ColoringKind k) {
    switch (k) {
        case ColoringKind::proper: return MatchingClass::matching;
        case ColoringKind::uniquely_restricted: return MatchingClass::uniquely_restricted;
        case ColoringKind::semistrong: return MatchingClass::semistrong;
        case ColoringKind::strong: return MatchingClass::induced;
    }
    return MatchingClass::matching;
}

namespace {

// Vertex marks stamped per query so one buffer serves many classes.
class Marks {
public:
    explicit Marks(std::size_t n) : stamp_of_(n, 0), owner_(n, 0) {}

    void next() { ++stamp_; }
    void set(Vertex x, EdgeId owner) {
        stamp_of_[x] = stamp_;
        owner_[x] = owner;
    }
    [[nodiscard]] bool has(Vertex x) const { return stamp_of_[x] == stamp_; }
    [[nodiscard]] EdgeId owner(Vertex x) const { return owner_[x]; }

private:
    std::vector<std::uint64_t> stamp_of_;
    std::vector<EdgeId> owner_;
    std::uint64_t stamp_ = 0;
};

std::size_t covered_degree(const Graph& g, const Marks& marks, Vertex x) {
    std::size_t d = 0;
    for (EdgeId h : g.incident(x))
        if (marks.has(g.edge(h).other(x))) ++d;
    return d;
}

// Marks the endpoints of `edges`; false if two edges share a vertex.
bool mark_matching(const Graph& g, const std::vector<EdgeId>& edges, Marks& marks) {
    marks.next();
    for (EdgeId e : edges) {
        const Edge& ed = g.edge(e);
        if (marks.has(ed.u) || marks.has(ed.v)) return false;
        marks.set(ed.u, e);
        marks.set(ed.v, e);
    }
    return true;
}

bool alternating_from(const Graph& g, const Marks& marks, Vertex start, Vertex exit_vertex,
                      std::vector<char>& used, std::vector<EdgeId>& used_list) {
    for (EdgeId h : g.incident(exit_vertex)) {
        const Vertex y = g.edge(h).other(exit_vertex);
        if (!marks.has(y) || marks.owner(y) == marks.owner(exit_vertex)) continue;
        if (y == start) return true;
        const EdgeId m = marks.owner(y);
        if (used[m]) continue;
        used[m] = 1;
        used_list.push_back(m);
        if (alternating_from(g, marks, start, g.edge(m).other(y), used, used_list)) return true;
        used[m] = 0;
        used_list.pop_back();
    }
    return false;
}

// Depth-first search over simple alternating paths: enter a matched edge at
// one end, leave from its mate along a non-matching edge of G_M.
bool alternating_cycle_marked(const Graph& g, const std::vector<EdgeId>& edges, const Marks& marks) {
    if (edges.size() < 2) return false;
    std::vector<char> used(g.edge_count(), 0);
    std::vector<EdgeId> used_list;
    for (EdgeId e : edges) {
        const Edge& ed = g.edge(e);
        // A cycle through e is found from either orientation; one suffices.
        used[e] = 1;
        used_list.assign(1, e);
        const bool found = alternating_from(g, marks, ed.u, ed.v, used, used_list);
        for (EdgeId m : used_list) used[m] = 0;
        if (found) return true;
        // Later searches need not revisit e: any cycle through e was found now.
        used[e] = 1;
    }
    return false;
}

// A caller that only asks whether `enough` is reached may get any lower class
// once the answer is known; the alternating-cycle search is exponential in the
// worst case and only runs when it decides the answer. The default classifies
// fully.
MatchingClass classify_marked(const Graph& g, const std::vector<EdgeId>& edges, Marks& marks,
                              MatchingClass enough = MatchingClass::uniquely_restricted) {
    if (!mark_matching(g, edges, marks)) return MatchingClass::not_a_matching;
    if (enough <= MatchingClass::matching) return MatchingClass::matching;
    bool induced = true;
    bool semistrong = true;
    for (EdgeId e : edges) {
        const Edge& ed = g.edge(e);
        const bool u1 = covered_degree(g, marks, ed.u) == 1;
        const bool v1 = covered_degree(g, marks, ed.v) == 1;
        induced = induced && u1 && v1;
        semistrong = semistrong && (u1 || v1);
    }
    if (induced) return MatchingClass::induced;
    if (semistrong) return MatchingClass::semistrong;
    if (enough > MatchingClass::uniquely_restricted) return MatchingClass::matching;
    if (!alternating_cycle_marked(g, edges, marks)) return MatchingClass::uniquely_restricted;
    return MatchingClass::matching;
}

void check_edges(const Graph& g, const std::vector<EdgeId>& edges) {
    for (EdgeId e : edges) (void)g.edge(e);
}

}  // namespace

InducedSubgraph induced_on_endpoints(const Graph& g, const std::vector<EdgeId>& edges) {
    check_edges(g, edges);
    std::vector<Vertex> local(g.vertex_count(), kUnreachable);
    InducedSubgraph out;
    for (EdgeId e : edges)
        for (Vertex x : {g.edge(e).u, g.edge(e).v})
            if (local[x] == kUnreachable) {
                local[x] = out.to_original.size();
                out.to_original.push_back(x);
            }
    out.graph = Graph(out.to_original.size());
    for (const Edge& ed : g.edges())
        if (local[ed.u] != kUnreachable && local[ed.v] != kUnreachable)
            out.graph.add_edge(local[ed.u], local[ed.v]);
    return out;
}

MatchingClass classify_matching(const Graph& g, const std::vector<EdgeId>& edges) {
    check_edges(g, edges);
    Marks marks(g.vertex_count());
    return classify_marked(g, edges, marks);
}

bool has_alternating_cycle(const Graph& g, const std::vector<EdgeId>& edges) {
    check_edges(g, edges);
    Marks marks(g.vertex_count());
    if (!mark_matching(g, edges, marks)) throw ColoringError("edge set is not a matching");
    return alternating_cycle_marked(g, edges, marks);
}

std::vector<Vertex> one_vertices(const Graph& g, const EdgeColoring& phi, EdgeId e) {
    if (phi.size() != g.edge_count()) throw ColoringError("coloring length differs from edge count");
    const Edge& ed = g.edge(e);
    Marks marks(g.vertex_count());
    if (!mark_matching(g, phi.color_class(phi[e]), marks))
        throw ColoringError("color class " + std::to_string(phi[e]) + " is not a matching");
    std::vector<Vertex> out;
    for (Vertex x : {ed.u, ed.v})
        if (covered_degree(g, marks, x) == 1) out.push_back(x);
    return out;
}

VerifyResult verify_coloring(const Graph& g, const EdgeColoring& phi, ColoringKind kind) {
    if (phi.size() != g.edge_count())
        throw ColoringError("coloring has " + std::to_string(phi.size()) + " entries, graph has " +
                            std::to_string(g.edge_count()) + " edges");
    for (EdgeId e = 0; e < phi.size(); ++e)
        if (phi[e] < 1 || phi[e] > phi.palette_size())
            throw ColoringError("edge " + std::to_string(e) + " color outside palette");

    std::vector<std::vector<EdgeId>> classes(phi.palette_size() + 1);
    for (EdgeId e = 0; e < phi.size(); ++e) classes[phi[e]].push_back(e);

    Marks marks(g.vertex_count());
    const MatchingClass need = required_class(kind);
    std::vector<MatchingClass> level(classes.size(), MatchingClass::induced);
    for (Color c = 1; c < classes.size(); ++c) level[c] = classify_marked(g, classes[c], marks, need);

    VerifyResult result;
    for (EdgeId e = 0; e < phi.size(); ++e) {
        const Color c = phi[e];
        if (level[c] >= need) continue;
        std::string what = level[c] == MatchingClass::not_a_matching
                               ? "color class is not a matching"
                               : "color class is " + std::string(to_string(level[c])) + ", needs " +
                                     std::string(to_string(need));
        if (level[c] != MatchingClass::not_a_matching && kind == ColoringKind::semistrong) {
            // Name an edge of the class that actually lacks a 1-vertex.
            mark_matching(g, classes[c], marks);
            for (EdgeId f : classes[c]) {
                const Edge& fd = g.edge(f);
                if (covered_degree(g, marks, fd.u) != 1 && covered_degree(g, marks, fd.v) != 1) {
                    e = f;
                    break;
                }
            }
            what = "edge has no 1-vertex";
        }
        result.ok = false;
        result.violation = Violation{e, c, what};
        break;
    }

    if (kind == ColoringKind::semistrong) {
        // Second formulation: every edge has a 1-vertex in its class.
        bool every_edge_has_one_vertex = true;
        for (Color c = 1; c < classes.size() && every_edge_has_one_vertex; ++c) {
            if (!mark_matching(g, classes[c], marks)) {
                every_edge_has_one_vertex = false;
                break;
            }
            for (EdgeId e : classes[c]) {
                const Edge& ed = g.edge(e);
                if (covered_degree(g, marks, ed.u) != 1 && covered_degree(g, marks, ed.v) != 1) {
                    every_edge_has_one_vertex = false;
                    break;
                }
            }
        }
        if (every_edge_has_one_vertex != result.ok)
            throw std::logic_error("semistrong class predicate and 1-vertex predicate disagree");
    }
    return result;
}

bool is_semistrong_2_colorable(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::size_t vertices = 0, degree_sum = 0;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            ++vertices;
            degree_sum += g.degree(x);
            if (g.degree(x) > 2) return false;
            for (EdgeId e : g.incident(x)) {
                const Vertex y = g.edge(e).other(x);
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        // A connected graph with max degree 2 is a path iff it is acyclic.
        if (degree_sum / 2 + 1 != vertices || vertices > 5) return false;
    }
    return true;
}

// ---- file format -------------------------------------------------------------

EdgeColoring parse_coloring(std::string_view text, std::size_t edge_count) {
    std::vector<Color> colors(edge_count, 0);
    std::size_t line_no = 0, pos = 0, seen = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') continue;

        std::istringstream in{std::string(line)};
        long long idx = -1, color = -1;
        std::string rest;
        if (!(in >> idx >> color) || (in >> rest))
            throw ParseError(line_no, "expected coloring line \"i c\"");
        if (idx < 0 || static_cast<std::size_t>(idx) >= edge_count)
            throw ParseError(line_no, "edge index out of range");
        if (color < 1 || color > std::numeric_limits<Color>::max())
            throw ParseError(line_no, "color must be a positive integer");
        if (colors[idx] != 0) throw ParseError(line_no, "edge " + std::to_string(idx) + " colored twice");
        colors[idx] = static_cast<Color>(color);
        ++seen;
    }
    if (seen != edge_count)
        throw ParseError(line_no, "coloring covers " + std::to_string(seen) + " of " +
                                      std::to_string(edge_count) + " edges");
    return EdgeColoring::from_colors(std::move(colors));
}

std::string render_coloring(const EdgeColoring& phi) {
    std::string out;
    for (EdgeId e = 0; e < phi.size(); ++e) {
        out += std::to_string(e);
        out += ' ';
        out += std::to_string(phi[e]);
        out += '\n';
    }
    return out;
}

EdgeColoring read_coloring_file(const std::string& path, std::size_t edge_count) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_coloring(ss.str(), edge_count);
}

void write_coloring_file(const std::string& path, const EdgeColoring& phi) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << render_coloring(phi);
}

}  // namespace semistrong
