#include "semistrong/reduction.hpp"

#include <algorithm>
#include <functional>

namespace semistrong {

std::string_view to_string(GadgetKind kind) {
    switch (kind) {
        case GadgetKind::B: return "B";
        case GadgetKind::Q: return "Q";
        case GadgetKind::R: return "R";
    }
    return "?";
}

GadgetKind gadget_kind_for(std::size_t k) {
    if (k < 3) throw std::invalid_argument("gadgets need k >= 3");
    if (k % 2 == 1) return GadgetKind::B;
    return k == 4 ? GadgetKind::R : GadgetKind::Q;
}

EdgeId Gadget::edge(std::string_view name) const {
    for (EdgeId e = 0; e < edge_names.size(); ++e)
        if (edge_names[e] == name) return e;
    throw std::out_of_range("no gadget edge named " + std::string(name));
}

Vertex Gadget::vertex(std::string_view name) const {
    for (Vertex x = 0; x < vertex_names.size(); ++x)
        if (vertex_names[x] == name) return x;
    throw std::out_of_range("no gadget vertex named " + std::string(name));
}

namespace {

class GadgetBuilder {
public:
    Vertex vertex(const std::string& name) {
        names_.push_back(name);
        return names_.size() - 1;
    }
    void edge(Vertex a, Vertex b, std::string name) {
        edges_.push_back({a, b});
        edge_names_.push_back(std::move(name));
    }
    Gadget finish(GadgetKind kind, std::size_t k, const std::string& first, const std::string& second) {
        Gadget g;
        g.kind = kind;
        g.k = k;
        g.graph = Graph(names_.size(), edges_);
        g.vertex_names = std::move(names_);
        g.edge_names = std::move(edge_names_);
        g.boundary = {g.edge(first), g.edge(second)};
        return g;
    }

private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::string> edge_names_;
};

Gadget build_bq(GadgetKind kind, std::size_t k) {
    GadgetBuilder b;
    const Vertex u = b.vertex("u"), v = b.vertex("v"), u1 = b.vertex("u1"), v1 = b.vertex("v1");
    const std::size_t w_count = kind == GadgetKind::B ? (k - 1) / 2 : (k - 2) / 2;
    std::vector<Vertex> w;
    for (std::size_t i = 1; i <= w_count; ++i) w.push_back(b.vertex("w" + std::to_string(i)));
    b.edge(u, u1, "uu1");
    b.edge(v, v1, "vv1");
    for (std::size_t i = 0; i < w_count; ++i) {
        const std::string wi = "w" + std::to_string(i + 1);
        b.edge(u1, w[i], "u1" + wi);
        b.edge(v1, w[i], "v1" + wi);
    }
    if (kind == GadgetKind::Q) b.edge(w[0], w[1], "w1w2");
    return b.finish(kind, k, "uu1", "vv1");
}

Gadget build_r() {
    GadgetBuilder b;
    const Vertex u = b.vertex("u"), v = b.vertex("v");
    auto many = [&](const char* prefix, int count) {
        std::vector<Vertex> out{0};  // 1-based
        for (int i = 1; i <= count; ++i) out.push_back(b.vertex(prefix + std::to_string(i)));
        return out;
    };
    const auto w = many("w", 3), x = many("x", 3), y = many("y", 6), z = many("z", 3);
    b.edge(w[1], w[2], "e1");
    b.edge(w[2], w[3], "e2");
    b.edge(w[3], w[1], "e3");
    b.edge(w[1], x[1], "e4");
    b.edge(w[2], x[2], "e5");
    b.edge(w[3], x[3], "e6");
    b.edge(x[1], y[1], "f1");
    b.edge(x[1], y[2], "f2");
    b.edge(x[2], y[3], "f3");
    b.edge(x[2], y[4], "f4");
    b.edge(x[3], y[5], "f5");
    b.edge(x[3], y[6], "f6");
    b.edge(z[3], y[1], "g1");
    b.edge(z[1], y[2], "g2");
    b.edge(z[1], y[3], "g3");
    b.edge(z[2], y[4], "g4");
    b.edge(z[2], y[5], "g5");
    b.edge(z[3], y[6], "g6");
    b.edge(u, z[1], "h1");
    b.edge(v, z[2], "h2");
    return b.finish(GadgetKind::R, 4, "h1", "h2");
}

// Lifted colors of R before relabeling: the class of 4 holds the boundary.
const std::vector<std::pair<const char*, Color>> kRPattern = {
    {"h1", 4}, {"h2", 4}, {"e4", 4}, {"e5", 4}, {"e6", 4},
    {"e1", 1}, {"g3", 1}, {"g4", 1}, {"f6", 1}, {"f1", 1},
    {"e2", 2}, {"g5", 2}, {"g6", 2}, {"f2", 2}, {"f3", 2},
    {"e3", 3}, {"g1", 3}, {"g2", 3}, {"f4", 3}, {"f5", 3},
};

}  // namespace

Gadget build_gadget(GadgetKind kind, std::size_t k) {
    switch (kind) {
        case GadgetKind::B:
            if (k < 3 || k % 2 == 0) throw std::invalid_argument("B gadget needs odd k >= 3");
            return build_bq(kind, k);
        case GadgetKind::Q:
            if (k < 6 || k % 2 == 1) throw std::invalid_argument("Q gadget needs even k >= 6");
            return build_bq(kind, k);
        case GadgetKind::R:
            if (k != 4) throw std::invalid_argument("R gadget needs k = 4");
            return build_r();
    }
    throw std::invalid_argument("unknown gadget kind");
}

Gadget augment_with_pendants(const Gadget& gadget) {
    Gadget out = gadget;
    std::vector<Edge> edges(gadget.graph.edges().begin(), gadget.graph.edges().end());
    std::size_t n = gadget.graph.vertex_count();
    for (auto [end, label] : {std::pair{gadget.u, "u"}, {gadget.v, "v"}})
        for (std::size_t i = 1; i < gadget.k; ++i) {
            out.vertex_names.push_back(std::string("p") + label + std::to_string(i));
            out.edge_names.push_back(std::string(label) + "p" + label + std::to_string(i));
            edges.push_back({end, n++});
        }
    out.graph = Graph(n, edges);
    return out;
}

ReductionMap reduce(const Graph& g, std::size_t k) {
    if (k < 3) throw std::invalid_argument("reduce needs k >= 3");
    if (!g.is_regular(k)) throw std::invalid_argument("reduce needs a " + std::to_string(k) + "-regular graph");
    ReductionMap map;
    map.k = k;
    map.source = g;
    map.gadget = build_gadget(gadget_kind_for(k), k);
    const Gadget& gadget = map.gadget;
    const std::size_t interior = gadget.graph.vertex_count() - 2;
    Graph h(g.vertex_count() + g.edge_count() * interior);
    Vertex next = g.vertex_count();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        GadgetPlacement pl;
        pl.kind = gadget.kind;
        pl.source_edge = e;
        pl.vertex_map.assign(gadget.graph.vertex_count(), 0);
        pl.vertex_map[gadget.u] = g.edge(e).u;
        pl.vertex_map[gadget.v] = g.edge(e).v;
        pl.vertex_begin = next;
        for (Vertex x = 0; x < gadget.graph.vertex_count(); ++x)
            if (x != gadget.u && x != gadget.v) pl.vertex_map[x] = next++;
        pl.vertex_end = next;
        pl.edge_begin = h.edge_count();
        for (const Edge& ge : gadget.graph.edges()) h.add_edge(pl.vertex_map[ge.u], pl.vertex_map[ge.v]);
        pl.edge_end = h.edge_count();
        pl.boundary = {pl.edge_begin + gadget.boundary.first, pl.edge_begin + gadget.boundary.second};
        map.placements.push_back(std::move(pl));
    }
    map.target = std::move(h);
    return map;
}

EdgeColoring lift_coloring(const ReductionMap& map, const EdgeColoring& phi) {
    const std::size_t k = map.k;
    if (phi.size() != map.source.edge_count()) throw ColoringError("coloring length does not match the source graph");
    for (Color c : phi.colors())
        if (c < 1 || c > k) throw ColoringError("color " + std::to_string(c) + " outside 1.." + std::to_string(k));
    if (const VerifyResult r = verify_coloring(map.source, EdgeColoring(phi.colors(), k), ColoringKind::proper); !r)
        throw ColoringError("not a proper coloring: " + r.violation->message);

    const Gadget& gadget = map.gadget;
    std::vector<Color> out(map.target.edge_count(), 0);
    for (const GadgetPlacement& pl : map.placements) {
        const Color c = phi[pl.source_edge];
        std::vector<Color> others;
        for (Color x = 1; x <= k; ++x)
            if (x != c) others.push_back(x);
        if (gadget.kind == GadgetKind::R) {
            // Pattern colors 1, 2, 3 go to the other colors in order, 4 to c.
            for (const auto& [name, pattern] : kRPattern)
                out[pl.edge_begin + gadget.edge(name)] = pattern == 4 ? c : others[pattern - 1];
            continue;
        }
        std::size_t next = 0;
        for (EdgeId e = 0; e < gadget.graph.edge_count(); ++e) {
            if (e == gadget.boundary.first || e == gadget.boundary.second) out[pl.edge_begin + e] = c;
            else out[pl.edge_begin + e] = others[next++];
        }
    }
    return EdgeColoring(std::move(out), k);
}

BoundaryDisagreement::BoundaryDisagreement(EdgeId source_edge, Color a, Color b)
    : std::runtime_error("boundary edges of the gadget for source edge " + std::to_string(source_edge) +
                         " carry different colors " + std::to_string(a) + " and " + std::to_string(b)),
      edge_(source_edge) {}

EdgeColoring extract_coloring(const ReductionMap& map, const EdgeColoring& psi) {
    const std::size_t k = map.k;
    if (psi.size() != map.target.edge_count()) throw ColoringError("coloring length does not match H");
    for (Color c : psi.colors())
        if (c < 1 || c > k) throw ColoringError("color " + std::to_string(c) + " outside 1.." + std::to_string(k));
    const EdgeColoring within(psi.colors(), k);
    if (const VerifyResult r = verify_coloring(map.target, within, ColoringKind::semistrong); !r)
        throw ColoringError("not a semistrong coloring of H: " + r.violation->message);
    std::vector<Color> out(map.source.edge_count(), 0);
    for (const GadgetPlacement& pl : map.placements) {
        const Color a = psi[pl.boundary.first], b = psi[pl.boundary.second];
        if (a != b) throw BoundaryDisagreement(pl.source_edge, a, b);
        out[pl.source_edge] = a;
    }
    EdgeColoring phi(std::move(out), k);
    if (const VerifyResult r = verify_coloring(map.source, phi, ColoringKind::proper); !r)
        throw std::logic_error("extracted coloring is not proper: " + r.violation->message);
    return phi;
}

// ---- forced-color checks ------------------------------------------------------------

bool LemmaReport::complete() const {
    return std::all_of(runs.begin(), runs.end(), [](const LemmaRun& r) { return r.end == EnumerationEnd::exhausted; });
}

std::uint64_t LemmaReport::violations() const {
    std::uint64_t total = 0;
    for (const LemmaRun& r : runs)
        for (const LemmaCheck& c : r.checks) total += c.violations;
    return total;
}

namespace {

using Claim = std::function<bool(const EdgeColoring&)>;

struct NamedClaim {
    std::string name;
    Claim holds;
    bool required = true;
};

std::string describe(const Gadget& g, const EdgeColoring& psi) {
    std::string out;
    for (EdgeId e = 0; e < psi.size(); ++e) {
        if (!out.empty()) out += ' ';
        out += g.edge_names[e] + "=" + std::to_string(psi[e]);
    }
    return out;
}

std::vector<NamedClaim> claims_for(const Gadget& g, bool augmented) {
    std::vector<NamedClaim> out;
    const std::size_t m = build_gadget(g.kind, g.k).graph.edge_count();
    const auto [b1, b2] = g.boundary;
    const Claim boundary_equal = [b1, b2](const EdgeColoring& psi) { return psi[b1] == psi[b2]; };

    if (g.kind != GadgetKind::R) {
        std::vector<EdgeId> interior;
        for (EdgeId e = 0; e < m; ++e)
            if (e != b1 && e != b2) interior.push_back(e);
        out.push_back({"interior edges pairwise distinct", [interior](const EdgeColoring& psi) {
                           for (std::size_t i = 0; i < interior.size(); ++i)
                               for (std::size_t j = i + 1; j < interior.size(); ++j)
                                   if (psi[interior[i]] == psi[interior[j]]) return false;
                           return true;
                       }});
        if (g.kind == GadgetKind::Q) {
            const EdgeId w12 = g.edge("w1w2");
            out.push_back({"w1w2 differs from every other gadget edge", [w12, m](const EdgeColoring& psi) {
                               for (EdgeId e = 0; e < m; ++e)
                                   if (e != w12 && psi[e] == psi[w12]) return false;
                               return true;
                           }});
        }
        out.push_back({"uu1 and vv1 equal", boundary_equal, augmented});
        return out;
    }

    const EdgeId e1 = g.edge("e1"), e2 = g.edge("e2"), e3 = g.edge("e3");
    const std::vector<EdgeId> spokes{g.edge("e4"), g.edge("e5"), g.edge("e6")};
    std::vector<EdgeId> fg;
    for (const char* prefix : {"f", "g"})
        for (int i = 1; i <= 6; ++i) fg.push_back(g.edge(prefix + std::to_string(i)));
    const std::size_t k = g.k;
    // The one color of 1..k absent from the triangle (k = 4, triangle rainbow).
    auto missing = [e1, e2, e3, k](const EdgeColoring& psi) -> Color {
        for (Color c = 1; c <= k; ++c)
            if (c != psi[e1] && c != psi[e2] && c != psi[e3]) return c;
        return 0;
    };
    out.push_back({"triangle edges distinct", [e1, e2, e3](const EdgeColoring& psi) {
                       return psi[e1] != psi[e2] && psi[e2] != psi[e3] && psi[e1] != psi[e3];
                   }});
    out.push_back({"e4, e5, e6 carry the color missing from the triangle", [spokes, missing](const EdgeColoring& psi) {
                       const Color m4 = missing(psi);
                       return std::all_of(spokes.begin(), spokes.end(), [&](EdgeId e) { return psi[e] == m4; });
                   }});
    out.push_back({"f and g edges avoid the color missing from the triangle", [fg, missing](const EdgeColoring& psi) {
                       const Color m4 = missing(psi);
                       return std::none_of(fg.begin(), fg.end(), [&](EdgeId e) { return psi[e] == m4; });
                   }});
    out.push_back({"h1 and h2 equal", boundary_equal, augmented});
    out.push_back({"h1 carries the color missing from the triangle",
                   [b1, missing](const EdgeColoring& psi) { return psi[b1] == missing(psi); }, augmented});
    return out;
}

LemmaRun run_claims(const Gadget& g, const std::string& name, bool augmented, std::uint64_t budget) {
    LemmaRun run;
    run.graph_name = name;
    run.edge_count = g.graph.edge_count();
    const std::vector<NamedClaim> claims = claims_for(g, augmented);
    std::vector<LemmaCheck> results(claims.size());
    for (std::size_t i = 0; i < claims.size(); ++i) results[i].name = claims[i].name;

    SolveRequest req;
    req.graph = g.graph;
    req.kind = ColoringKind::semistrong;
    req.palette_size = g.k;
    req.mode = SolveMode::enumerate;
    req.limits.node_budget = budget;
    const EnumerateResult res = enumerate(req, [&](const EdgeColoring& psi) {
        for (std::size_t i = 0; i < claims.size(); ++i) {
            ++results[i].checked;
            if (claims[i].holds(psi)) continue;
            ++results[i].violations;
            if (results[i].examples.size() < 3) results[i].examples.push_back(describe(g, psi));
        }
        return true;
    });
    run.colorings = res.count;
    run.nodes = res.nodes;
    run.end = res.end;
    for (std::size_t i = 0; i < claims.size(); ++i)
        (claims[i].required ? run.checks : run.observations).push_back(std::move(results[i]));
    return run;
}

}  // namespace

LemmaReport verify_gadget_lemmas(GadgetKind kind, std::size_t k, std::uint64_t node_budget) {
    LemmaReport report;
    report.kind = kind;
    report.k = k;
    const Gadget gadget = build_gadget(kind, k);
    report.runs.push_back(run_claims(gadget, "standalone", false, node_budget));
    report.runs.push_back(run_claims(augment_with_pendants(gadget), "augmented", true, node_budget));
    return report;
}

}  // namespace semistrong
