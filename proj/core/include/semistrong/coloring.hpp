#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semistrong/graph.hpp"

namespace semistrong {

using Color = std::uint32_t;

class ColoringError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Total edge coloring with colors drawn from 1..palette_size.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(std::vector<Color> colors, std::size_t palette_size);

    /// Palette size defaults to the largest color used.
    static EdgeColoring from_colors(std::vector<Color> colors);

    [[nodiscard]] std::size_t size() const { return colors_.size(); }
    [[nodiscard]] std::size_t palette_size() const { return palette_; }
    [[nodiscard]] Color operator[](EdgeId e) const { return colors_[e]; }
    [[nodiscard]] const std::vector<Color>& colors() const { return colors_; }
    [[nodiscard]] std::size_t distinct_colors() const;
    /// Edge ids carrying color c, ascending.
    [[nodiscard]] std::vector<EdgeId> color_class(Color c) const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    std::vector<Color> colors_;
    std::size_t palette_ = 0;
};

enum class MatchingClass : std::uint8_t {
    not_a_matching = 0,
    matching = 1,
    uniquely_restricted = 2,
    semistrong = 3,
    induced = 4,
};

std::string_view to_string(MatchingClass c);

/// Which matching predicate every color class must satisfy.
enum class ColoringKind : std::uint8_t { proper, uniquely_restricted, semistrong, strong };

std::string_view to_string(ColoringKind k);
std::optional<ColoringKind> parse_coloring_kind(std::string_view name);
MatchingClass required_class(ColoringKind k);

/// Subgraph induced by the endpoints of `edges`, with the map back to g.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;
};

InducedSubgraph induced_on_endpoints(const Graph& g, const std::vector<EdgeId>& edges);

MatchingClass classify_matching(const Graph& g, const std::vector<EdgeId>& edges);

/// True iff the matching has an alternating cycle in the subgraph induced by
/// its endpoints. Precondition: `edges` is a matching.
bool has_alternating_cycle(const Graph& g, const std::vector<EdgeId>& edges);

/// Endpoints of e that are pendant in the subgraph induced by the endpoints
/// of e's color class. Throws ColoringError if that class is not a matching.
std::vector<Vertex> one_vertices(const Graph& g, const EdgeColoring& phi, EdgeId e);

struct Violation {
    EdgeId edge = 0;
    Color color = 0;
    std::string message;
};

struct VerifyResult {
    bool ok = true;
    std::optional<Violation> violation;

    explicit operator bool() const { return ok; }
};

/// Checks every color class against the kind's matching predicate; the
/// first violation in edge-index order is reported. For the semistrong kind
/// the per-class check and the per-edge 1-vertex check are both run and must
/// agree (a disagreement throws std::logic_error).
VerifyResult verify_coloring(const Graph& g, const EdgeColoring& phi, ColoringKind kind);

/// Every component is a path on at most five vertices.
bool is_semistrong_2_colorable(const Graph& g);

// ---- coloring file format ----------------------------------------------------

EdgeColoring parse_coloring(std::string_view text, std::size_t edge_count);
std::string render_coloring(const EdgeColoring& phi);
EdgeColoring read_coloring_file(const std::string& path, std::size_t edge_count);
void write_coloring_file(const std::string& path, const EdgeColoring& phi);

}  // namespace semistrong
