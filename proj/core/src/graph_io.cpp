#include "semistrong/graph.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace semistrong {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool blank_or_comment(std::string_view line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string_view::npos || line[pos] == '#';
}

// Parses exactly `count` whitespace-separated unsigned integers.
bool parse_uints(std::string_view line, std::size_t* out, std::size_t count) {
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (std::size_t i = 0; i < count; ++i) {
        while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
        auto [next, ec] = std::from_chars(p, end, out[i]);
        if (ec != std::errc() || next == p) return false;
        p = next;
    }
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    return p == end;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool have_header = false;
    std::size_t expected_edges = 0;
    Graph g;

    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (blank_or_comment(line)) continue;

        std::size_t vals[2];
        if (!parse_uints(line, vals, 2)) {
            throw ParseError(line_no, have_header ? "expected edge line \"u v\""
                                                  : "malformed header, expected \"n m\"");
        }
        if (!have_header) {
            g = Graph(vals[0]);
            expected_edges = vals[1];
            have_header = true;
            continue;
        }
        if (g.edge_count() == expected_edges)
            throw ParseError(line_no, "more edge lines than declared (" +
                                          std::to_string(expected_edges) + ")");
        const auto [u, v] = std::pair{vals[0], vals[1]};
        if (u >= g.vertex_count() || v >= g.vertex_count())
            throw ParseError(line_no, "vertex index out of range");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        if (g.adjacent(u, v)) throw ParseError(line_no, "duplicate edge");
        g.add_edge(u, v);
    }
    if (!have_header) throw ParseError(line_no, "missing header");
    if (g.edge_count() != expected_edges)
        throw ParseError(line_no, "expected " + std::to_string(expected_edges) + " edges, found " +
                                      std::to_string(g.edge_count()));
    return g;
}

std::string render_graph(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) + '\n';
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << render_graph(g);
}

}  // namespace semistrong
