#include "report_json.hpp"

#include <cstdio>

namespace semistrong::cli {

std::string digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ordered_json to_json(const Quadruple& x) { return ordered_json::array({x.p, x.q, x.s, x.t}); }

ordered_json to_json(const Gadget& gadget) {
    ordered_json j;
    j["kind"] = std::string(to_string(gadget.kind));
    j["k"] = gadget.k;
    j["vertices"] = gadget.vertex_names;
    ordered_json edges = ordered_json::array();
    for (EdgeId e = 0; e < gadget.graph.edge_count(); ++e) {
        const Edge& ed = gadget.graph.edge(e);
        edges.push_back({{"index", e}, {"name", gadget.edge_names[e]}, {"u", ed.u}, {"v", ed.v}});
    }
    j["edges"] = std::move(edges);
    j["boundary"] = {gadget.edge_names[gadget.boundary.first], gadget.edge_names[gadget.boundary.second]};
    return j;
}

ordered_json to_json(const ReductionMap& map) {
    ordered_json j;
    j["k"] = map.k;
    j["gadget_kind"] = std::string(to_string(map.gadget.kind));
    j["source"] = {{"vertices", map.source.vertex_count()}, {"edges", map.source.edge_count()}};
    j["target"] = {{"vertices", map.target.vertex_count()}, {"edges", map.target.edge_count()}};
    ordered_json edges = ordered_json::object();
    for (const GadgetPlacement& pl : map.placements) {
        ordered_json tagged = ordered_json::object();
        for (EdgeId e = 0; e < map.gadget.edge_names.size(); ++e) tagged[map.gadget.edge_names[e]] = pl.edge_begin + e;
        edges[std::to_string(pl.source_edge)] = {
            {"gadget_kind", std::string(to_string(pl.kind))},
            {"vertex_range", {pl.vertex_begin, pl.vertex_end}},
            {"edge_range", {pl.edge_begin, pl.edge_end}},
            {"boundary", {pl.boundary.first, pl.boundary.second}},
            {"tagged", std::move(tagged)},
        };
    }
    j["edges"] = std::move(edges);
    return j;
}

namespace {

std::string end_name(EnumerationEnd end) {
    switch (end) {
        case EnumerationEnd::exhausted: return "exhausted";
        case EnumerationEnd::cap_reached: return "cap_reached";
        case EnumerationEnd::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

ordered_json checks_json(const std::vector<LemmaCheck>& checks) {
    ordered_json out = ordered_json::array();
    for (const LemmaCheck& c : checks)
        out.push_back({{"name", c.name}, {"checked", c.checked}, {"violations", c.violations}, {"examples", c.examples}});
    return out;
}

}  // namespace

ordered_json to_json(const LemmaReport& report) {
    ordered_json j;
    j["kind"] = std::string(to_string(report.kind));
    j["k"] = report.k;
    j["complete"] = report.complete();
    j["violations"] = report.violations();
    ordered_json runs = ordered_json::array();
    for (const LemmaRun& r : report.runs)
        runs.push_back({{"graph", r.graph_name},
                        {"edges", r.edge_count},
                        {"colorings", r.colorings},
                        {"nodes", r.nodes},
                        {"end", end_name(r.end)},
                        {"checks", checks_json(r.checks)},
                        {"observations", checks_json(r.observations)}});
    j["runs"] = std::move(runs);
    return j;
}

}  // namespace semistrong::cli
