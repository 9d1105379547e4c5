#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semistrong/coloring.hpp"
#include "semistrong/exact_solver.hpp"
#include "semistrong/graph.hpp"

namespace semistrong {

/// Edge-replacement gadgets turning proper k-edge-coloring of a k-regular
/// graph into semistrong k-edge-coloring of a graph of maximum degree k.
///   B (odd k >= 3):  u-u1, v-v1, and u1, v1 both joined to w1..w_{(k-1)/2}.
///   Q (even k >= 6): as B with (k-2)/2 w-vertices plus the edge w1-w2.
///   R (k = 4):       triangle w1w2w3 with pendant paths through x, y, z to
///                    the two boundary edges h1 = u z1 and h2 = v z2.
enum class GadgetKind : std::uint8_t { B, Q, R };

std::string_view to_string(GadgetKind kind);

/// Gadget kind used for a given k: B for odd, R for 4, Q for even k >= 6.
GadgetKind gadget_kind_for(std::size_t k);

struct Gadget {
    GadgetKind kind = GadgetKind::B;
    std::size_t k = 0;
    Graph graph;
    /// Attachment vertices; always 0 and 1.
    Vertex u = 0, v = 1;
    /// Name of every edge, by edge index ("uu1", "u1w2", "e4", "h1", ...).
    std::vector<std::string> edge_names;
    /// Vertex names by index.
    std::vector<std::string> vertex_names;
    /// The two edges whose colors must agree: (uu1, vv1) or (h1, h2).
    std::pair<EdgeId, EdgeId> boundary;

    /// Edge id by name; throws std::out_of_range if unknown.
    [[nodiscard]] EdgeId edge(std::string_view name) const;
    [[nodiscard]] Vertex vertex(std::string_view name) const;
};

/// Throws std::invalid_argument for an incompatible (kind, k).
Gadget build_gadget(GadgetKind kind, std::size_t k);

/// Gadget with k-1 pendant edges added at u and at v, so both boundary
/// vertices have degree k as in the reduced graph.
Gadget augment_with_pendants(const Gadget& gadget);

/// Where one source edge's gadget landed in H.
struct GadgetPlacement {
    GadgetKind kind = GadgetKind::B;
    EdgeId source_edge = 0;
    /// Interior (non-boundary) vertices occupy [vertex_begin, vertex_end).
    Vertex vertex_begin = 0, vertex_end = 0;
    /// Gadget edges occupy [edge_begin, edge_end), in gadget edge order.
    EdgeId edge_begin = 0, edge_end = 0;
    /// Gadget vertex index -> H vertex.
    std::vector<Vertex> vertex_map;
    std::pair<EdgeId, EdgeId> boundary;
};

struct ReductionMap {
    std::size_t k = 0;
    Graph source;
    Graph target;
    /// Gadget template shared by every placement (names, structure).
    Gadget gadget;
    std::vector<GadgetPlacement> placements;
};

/// Replaces every edge uv of the k-regular graph g by a gadget between u and v.
/// Source vertices keep their indices in H. Throws std::invalid_argument if g
/// is not k-regular or k < 3.
ReductionMap reduce(const Graph& g, std::size_t k);

/// Semistrong k-coloring of H from a proper k-coloring of the source graph.
/// Throws ColoringError if phi is not a proper coloring within 1..k.
EdgeColoring lift_coloring(const ReductionMap& map, const EdgeColoring& phi);

class BoundaryDisagreement : public std::runtime_error {
public:
    BoundaryDisagreement(EdgeId source_edge, Color a, Color b);
    [[nodiscard]] EdgeId source_edge() const { return edge_; }

private:
    EdgeId edge_;
};

/// Proper k-coloring of the source graph read off the gadget boundaries.
/// Throws ColoringError if psi is not a semistrong coloring of H within 1..k,
/// BoundaryDisagreement if a gadget's two boundary edges differ, and
/// std::logic_error if the read-off coloring is not proper.
EdgeColoring extract_coloring(const ReductionMap& map, const EdgeColoring& psi);

struct LemmaCheck {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    /// First few counterexamples, as "edge=color" lists.
    std::vector<std::string> examples;
};

struct LemmaRun {
    /// "standalone" or "augmented".
    std::string graph_name;
    std::size_t edge_count = 0;
    /// Colorings visited (edge 0 pinned to color 1).
    std::uint64_t colorings = 0;
    std::uint64_t nodes = 0;
    EnumerationEnd end = EnumerationEnd::exhausted;
    std::vector<LemmaCheck> checks;
    /// Observations recorded without being required (e.g. R standalone h1 = h2).
    std::vector<LemmaCheck> observations;
};

struct LemmaReport {
    GadgetKind kind = GadgetKind::B;
    std::size_t k = 0;
    std::vector<LemmaRun> runs;

    /// Every enumeration ran to exhaustion.
    [[nodiscard]] bool complete() const;
    [[nodiscard]] std::uint64_t violations() const;
    /// Violations found: the gadget structure does not force the claims.
    [[nodiscard]] bool structure_falsified() const { return violations() > 0; }
};

/// Enumerates all semistrong k-colorings of the standalone and the
/// pendant-augmented gadget and checks the forced-color claims on each.
LemmaReport verify_gadget_lemmas(GadgetKind kind, std::size_t k, std::uint64_t node_budget = 0);

}  // namespace semistrong
