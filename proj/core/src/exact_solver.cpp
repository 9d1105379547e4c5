#include "semistrong/exact_solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace semistrong {

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::feasible: return "feasible";
        case Outcome::infeasible: return "infeasible";
        case Outcome::unknown: return "unknown";
    }
    return "?";
}

std::vector<EdgeId> bfs_edge_order(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<EdgeId> order;
    order.reserve(g.edge_count());
    std::vector<char> seen_vertex(n, 0), seen_edge(g.edge_count(), 0);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (seen_vertex[s]) continue;
        seen_vertex[s] = 1;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            for (EdgeId e : g.incident(x)) {
                if (!seen_edge[e]) {
                    seen_edge[e] = 1;
                    order.push_back(e);
                }
                const Vertex y = g.edge(e).other(x);
                if (!seen_vertex[y]) {
                    seen_vertex[y] = 1;
                    queue.push_back(y);
                }
            }
        }
    }
    return order;
}

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxPalette = 64;

Mask bit(Color c) { return Mask{1} << (c - 1); }
Mask low_bits(std::size_t k) { return k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1; }

struct BudgetExhausted {};
struct StopRequested {};

class Search {
public:
    Search(const SolveRequest& req, std::size_t palette)
        : g_(req.graph),
          kind_(req.kind),
          palette_(palette),
          n_(g_.vertex_count()),
          m_(g_.edge_count()),
          budget_(req.limits.node_budget),
          order_(bfs_edge_order(g_)),
          color_(m_, 0),
          domain_(m_, low_bits(palette)),
          owner_(palette * n_, kNone),
          covered_nb_(palette * n_, 0) {
        if (palette > kMaxPalette) throw std::invalid_argument("palette larger than 64 colors");
        build_pair_conflicts();
        rank_.assign(m_, 0);
        for (std::size_t i = 0; i < order_.size(); ++i) rank_[order_[i]] = i;
    }

    std::uint64_t nodes() const { return nodes_; }

    // Returns true when a solution is found (stored in solution_).
    bool run_decide(bool symmetry, bool dynamic_order) {
        symmetry_ = symmetry;
        dynamic_ = dynamic_order;
        stop_at_first_ = true;
        return descend(0, 0);
    }

    void run_enumerate(bool pin_first, const ColoringVisitor& visitor, std::uint64_t cap) {
        symmetry_ = false;
        dynamic_ = false;
        stop_at_first_ = false;
        visitor_ = &visitor;
        cap_ = cap;
        if (pin_first && m_ > 0) domain_[0] &= bit(1);
        descend(0, 0);
    }

    const std::vector<Color>& solution() const { return solution_; }
    std::uint64_t solutions() const { return solution_count_; }

private:
    static constexpr EdgeId kNone = kUnreachable;

    std::size_t at(Color c, Vertex x) const { return (c - 1) * n_ + x; }
    bool covered(Color c, Vertex x) const { return owner_[at(c, x)] != kNone; }

    void build_pair_conflicts() {
        conflicts_.assign(m_, {});
        near_.assign(m_, {});
        const MatchingClass need = required_class(kind_);
        for (EdgeId e = 0; e < m_; ++e) {
            // Edges within line distance 2 of e; the only candidates for a
            // two-edge violation.
            std::vector<EdgeId> close;
            const Edge& ed = g_.edge(e);
            for (Vertex x : {ed.u, ed.v})
                for (EdgeId h : g_.incident(x)) {
                    close.push_back(h);
                    const Vertex y = g_.edge(h).other(x);
                    for (EdgeId f : g_.incident(y)) close.push_back(f);
                }
            std::sort(close.begin(), close.end());
            close.erase(std::unique(close.begin(), close.end()), close.end());
            for (EdgeId f : close) {
                if (f == e) continue;
                if (classify_matching(g_, {e, f}) < need) conflicts_[e].push_back(f);
            }
        }
        if (kind_ == ColoringKind::semistrong) {
            // A 3-edge violation needs the third edge within line distance 4.
            for (EdgeId e = 0; e < m_; ++e) {
                std::vector<std::size_t> dist(n_, kUnreachable);
                std::vector<Vertex> queue{g_.edge(e).u, g_.edge(e).v};
                dist[queue[0]] = dist[queue[1]] = 0;
                for (std::size_t head = 0; head < queue.size(); ++head) {
                    const Vertex x = queue[head];
                    if (dist[x] >= 3) continue;
                    for (EdgeId h : g_.incident(x)) {
                        const Vertex y = g_.edge(h).other(x);
                        if (dist[y] == kUnreachable) {
                            dist[y] = dist[x] + 1;
                            queue.push_back(y);
                        }
                    }
                }
                for (EdgeId f = 0; f < m_; ++f) {
                    if (f == e) continue;
                    const Edge& fd = g_.edge(f);
                    if (std::min(dist[fd.u], dist[fd.v]) <= 3) near_[e].push_back(f);
                }
            }
        } else if (kind_ == ColoringKind::uniquely_restricted) {
            for (EdgeId e = 0; e < m_; ++e)
                for (EdgeId f = 0; f < m_; ++f)
                    if (f != e) near_[e].push_back(f);
        }
    }

    // ---- class bookkeeping ----------------------------------------------------

    void insert(EdgeId e, Color c) {
        const Edge& ed = g_.edge(e);
        owner_[at(c, ed.u)] = e;
        owner_[at(c, ed.v)] = e;
        for (Vertex x : {ed.u, ed.v})
            for (EdgeId h : g_.incident(x)) ++covered_nb_[at(c, g_.edge(h).other(x))];
    }

    void remove(EdgeId e, Color c) {
        const Edge& ed = g_.edge(e);
        owner_[at(c, ed.u)] = kNone;
        owner_[at(c, ed.v)] = kNone;
        for (Vertex x : {ed.u, ed.v})
            for (EdgeId h : g_.incident(x)) --covered_nb_[at(c, g_.edge(h).other(x))];
    }

    bool pendant_edge(EdgeId h, Color c) const {
        const Edge& hd = g_.edge(h);
        return covered_nb_[at(c, hd.u)] == 1 || covered_nb_[at(c, hd.v)] == 1;
    }

    bool alternating_to(Vertex start, Vertex exit_vertex, Color c, std::vector<char>& used) const {
        for (EdgeId h : g_.incident(exit_vertex)) {
            const Vertex y = g_.edge(h).other(exit_vertex);
            const EdgeId m = owner_[at(c, y)];
            if (m == kNone || m == owner_[at(c, exit_vertex)]) continue;
            if (y == start) return true;
            if (used[m]) continue;
            used[m] = 1;
            const bool found = alternating_to(start, g_.edge(m).other(y), c, used);
            used[m] = 0;
            if (found) return true;
        }
        return false;
    }

    // Class c with e just inserted: does it still satisfy the predicate?
    // Only edges whose induced degrees changed need checking.
    bool class_ok_after_insert(EdgeId e, Color c) {
        const Edge& ed = g_.edge(e);
        switch (kind_) {
            case ColoringKind::proper: return true;
            case ColoringKind::strong:
                if (covered_nb_[at(c, ed.u)] != 1 || covered_nb_[at(c, ed.v)] != 1) return false;
                for (Vertex x : {ed.u, ed.v})
                    for (EdgeId h : g_.incident(x)) {
                        const Vertex y = g_.edge(h).other(x);
                        if (h != e && covered(c, y)) return false;
                    }
                return true;
            case ColoringKind::semistrong:
                if (!pendant_edge(e, c)) return false;
                for (Vertex x : {ed.u, ed.v})
                    for (EdgeId h : g_.incident(x)) {
                        const EdgeId m = owner_[at(c, g_.edge(h).other(x))];
                        if (m != kNone && m != e && !pendant_edge(m, c)) return false;
                    }
                return true;
            case ColoringKind::uniquely_restricted: {
                used_.assign(m_, 0);
                used_[e] = 1;
                return !alternating_to(ed.u, ed.v, c, used_);
            }
        }
        return true;
    }

    bool can_insert(EdgeId e, Color c) const {
        const Edge& ed = g_.edge(e);
        return !covered(c, ed.u) && !covered(c, ed.v);
    }

    // Would class c accept e right now? Leaves the class unchanged.
    bool probe(EdgeId e, Color c) {
        if (!can_insert(e, c)) return false;
        insert(e, c);
        const bool ok = class_ok_after_insert(e, c);
        remove(e, c);
        return ok;
    }

    // ---- domains --------------------------------------------------------------

    bool restrict(EdgeId f, Mask keep) {
        if ((domain_[f] & keep) == domain_[f]) return true;
        trail_.push_back({f, domain_[f]});
        domain_[f] &= keep;
        return domain_[f] != 0;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            domain_[trail_.back().first] = trail_.back().second;
            trail_.pop_back();
        }
    }

    bool propagate(EdgeId e, Color c) {
        for (EdgeId f : conflicts_[e])
            if (color_[f] == 0 && !restrict(f, ~bit(c))) return false;
        for (EdgeId f : near_[e])
            if (color_[f] == 0 && (domain_[f] & bit(c)) && !probe(f, c))
                if (!restrict(f, ~bit(c))) return false;
        return true;
    }

    // ---- search ---------------------------------------------------------------

    EdgeId pick(std::size_t depth, std::size_t max_used) const {
        if (!dynamic_) return order_[depth];
        const Mask allowed = symmetry_ ? low_bits(std::min(max_used + 1, palette_)) : low_bits(palette_);
        EdgeId best = kNone;
        int best_size = 1 << 20;
        for (EdgeId f : order_) {
            if (color_[f] != 0) continue;
            const int size = std::popcount(domain_[f] & allowed);
            if (size < best_size) {
                best = f;
                best_size = size;
                if (size <= 1) break;
            }
        }
        return best;
    }

    void leaf() {
        EdgeColoring phi(color_, palette_);
        if (!verify_coloring(g_, phi, kind_)) return;
        ++solution_count_;
        if (stop_at_first_) {
            solution_ = color_;
            return;
        }
        if (visitor_ && !(*visitor_)(phi)) throw StopRequested{};
        if (cap_ != 0 && solution_count_ >= cap_) throw StopRequested{};
    }

    // Returns true to stop (decide found a solution).
    bool descend(std::size_t depth, std::size_t max_used) {
        if (depth == m_) {
            leaf();
            return stop_at_first_ && solution_count_ > 0;
        }
        const EdgeId e = pick(depth, max_used);
        Mask options = domain_[e];
        if (symmetry_) options &= low_bits(std::min(max_used + 1, palette_));
        while (options) {
            const Color c = static_cast<Color>(std::countr_zero(options)) + 1;
            options &= options - 1;
            if (budget_ != 0 && nodes_ >= budget_) throw BudgetExhausted{};
            ++nodes_;
            if (!can_insert(e, c)) continue;
            insert(e, c);
            color_[e] = c;
            const std::size_t mark = trail_.size();
            bool stop = false;
            if (class_ok_after_insert(e, c) && propagate(e, c))
                stop = descend(depth + 1, std::max<std::size_t>(max_used, c));
            undo_to(mark);
            color_[e] = 0;
            remove(e, c);
            if (stop) return true;
        }
        return false;
    }

    const Graph& g_;
    ColoringKind kind_;
    std::size_t palette_;
    std::size_t n_, m_;
    std::uint64_t budget_;
    std::vector<EdgeId> order_;
    std::vector<std::size_t> rank_;
    std::vector<Color> color_;
    std::vector<Mask> domain_;
    std::vector<EdgeId> owner_;
    std::vector<std::uint32_t> covered_nb_;
    std::vector<std::vector<EdgeId>> conflicts_;
    std::vector<std::vector<EdgeId>> near_;
    std::vector<std::pair<EdgeId, Mask>> trail_;
    std::vector<char> used_;

    bool symmetry_ = true;
    bool dynamic_ = true;
    bool stop_at_first_ = true;
    const ColoringVisitor* visitor_ = nullptr;
    std::uint64_t cap_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t solution_count_ = 0;
    std::vector<Color> solution_;
};

DecideResult decide_with_palette(const SolveRequest& req, std::size_t palette) {
    const Graph& g = req.graph;
    DecideResult out;
    if (g.edge_count() == 0) {
        out.outcome = Outcome::feasible;
        out.witness = EdgeColoring({}, palette);
        return out;
    }
    // Every kind is at least a proper edge coloring.
    if (palette == 0 || g.max_degree() > palette) {
        out.outcome = Outcome::infeasible;
        return out;
    }
    Search search(req, palette);
    try {
        if (search.run_decide(req.symmetry_reduction, req.fewest_remaining_first)) {
            out.outcome = Outcome::feasible;
            out.witness = EdgeColoring(search.solution(), palette);
        } else {
            out.outcome = Outcome::infeasible;
        }
    } catch (const BudgetExhausted&) {
        out.outcome = Outcome::unknown;
    }
    out.nodes = search.nodes();
    return out;
}

}  // namespace

DecideResult decide(const SolveRequest& req) {
    if (req.palette_size < 1) throw std::invalid_argument("palette_size must be >= 1");
    return decide_with_palette(req, req.palette_size);
}

MinimizeResult min_colors(const SolveRequest& req) {
    const Graph& g = req.graph;
    if (g.edge_count() == 0) throw std::invalid_argument("min_colors needs at least one edge");
    MinimizeResult out;
    SolveRequest sub = req;
    std::uint64_t spent = 0;
    const std::size_t top = std::min(g.edge_count(), kMaxPalette);
    for (std::size_t k = std::max<std::size_t>(1, g.max_degree()); k <= top; ++k) {
        if (req.limits.node_budget != 0) {
            if (spent >= req.limits.node_budget) break;
            sub.limits.node_budget = req.limits.node_budget - spent;
        }
        DecideResult r = decide_with_palette(sub, k);
        spent += r.nodes;
        out.nodes = spent;
        if (r.outcome == Outcome::unknown) break;
        if (r.outcome == Outcome::feasible) {
            out.outcome = Outcome::feasible;
            out.colors = k;
            out.witness = std::move(r.witness);
            return out;
        }
    }
    out.outcome = Outcome::unknown;
    return out;
}

EnumerateResult enumerate(const SolveRequest& req, const ColoringVisitor& visitor) {
    if (req.palette_size < 1) throw std::invalid_argument("palette_size must be >= 1");
    EnumerateResult out;
    const Graph& g = req.graph;
    if (g.edge_count() == 0) {
        out.count = 1;
        visitor(EdgeColoring({}, req.palette_size));
        return out;
    }
    if (g.max_degree() > req.palette_size) return out;
    Search search(req, req.palette_size);
    try {
        search.run_enumerate(req.symmetry_reduction, visitor, req.limits.solution_cap);
    } catch (const StopRequested&) {
        out.end = EnumerationEnd::cap_reached;
    } catch (const BudgetExhausted&) {
        out.end = EnumerationEnd::budget_exhausted;
    }
    out.count = search.solutions();
    out.nodes = search.nodes();
    return out;
}

DecideResult decide(const Graph& g, ColoringKind kind, std::size_t palette, SolveLimits limits) {
    SolveRequest req{g, kind, palette, SolveMode::decide, limits};
    return decide(req);
}

MinimizeResult min_colors(const Graph& g, ColoringKind kind, SolveLimits limits) {
    SolveRequest req{g, kind, 1, SolveMode::minimize, limits};
    return min_colors(req);
}

}  // namespace semistrong
