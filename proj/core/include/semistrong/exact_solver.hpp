#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "semistrong/coloring.hpp"
#include "semistrong/graph.hpp"

namespace semistrong {

/// Brute-force backtracking over edge colorings for small instances.
///
/// Edges are assigned in breadth-first discovery order from vertex 0. Every
/// partial assignment keeps each color class inside the requested matching
/// family; all four families are closed under taking sub-matchings, so a
/// partial class that already violates its predicate can never be repaired
/// and pruning on it is sound. Each uncolored edge carries a domain of colors
/// whose addition would not (yet) break its class; an empty domain fails the
/// branch. Complete assignments are re-checked with verify_coloring().

enum class SolveMode : std::uint8_t { decide, minimize, enumerate };

enum class Outcome : std::uint8_t {
    feasible,
    infeasible,
    /// Node budget ran out before the answer was known.
    unknown,
};

std::string_view to_string(Outcome o);

struct SolveLimits {
    /// Search nodes (color assignments tried); 0 means unlimited.
    std::uint64_t node_budget = 0;
    /// enumerate() stops after this many solutions; 0 means unlimited.
    std::uint64_t solution_cap = 0;
};

struct SolveRequest {
    Graph graph;
    ColoringKind kind = ColoringKind::semistrong;
    std::size_t palette_size = 1;
    SolveMode mode = SolveMode::decide;
    SolveLimits limits;
    /// decide/minimize: interchangeable unused colors are tried once.
    /// enumerate: edge 0 is pinned to color 1.
    bool symmetry_reduction = true;
    /// decide/minimize only: branch on the uncolored edge with the fewest
    /// remaining colors (ties broken by the static order).
    bool fewest_remaining_first = true;
};

struct DecideResult {
    Outcome outcome = Outcome::unknown;
    std::optional<EdgeColoring> witness;
    std::uint64_t nodes = 0;
};

struct MinimizeResult {
    Outcome outcome = Outcome::unknown;
    /// Smallest feasible palette when outcome is feasible.
    std::size_t colors = 0;
    std::optional<EdgeColoring> witness;
    std::uint64_t nodes = 0;
};

enum class EnumerationEnd : std::uint8_t { exhausted, cap_reached, budget_exhausted };

struct EnumerateResult {
    std::uint64_t count = 0;
    EnumerationEnd end = EnumerationEnd::exhausted;
    std::uint64_t nodes = 0;
};

/// Visitor returns false to stop the enumeration early (reported as cap_reached).
using ColoringVisitor = std::function<bool(const EdgeColoring&)>;

DecideResult decide(const SolveRequest& req);
/// Ascending search from max(1, max degree); req.palette_size is ignored.
MinimizeResult min_colors(const SolveRequest& req);
EnumerateResult enumerate(const SolveRequest& req, const ColoringVisitor& visitor);

/// Breadth-first edge order used by the solver.
std::vector<EdgeId> bfs_edge_order(const Graph& g);

/// Convenience wrappers.
DecideResult decide(const Graph& g, ColoringKind kind, std::size_t palette, SolveLimits limits = {});
MinimizeResult min_colors(const Graph& g, ColoringKind kind, SolveLimits limits = {});

}  // namespace semistrong
