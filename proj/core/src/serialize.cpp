#include "intcol/serialize.hpp"

#include <json.hpp>

#include "intcol/error.hpp"

namespace intcol {

using nlohmann::ordered_json;

namespace {

ordered_json coloring_json(const Graph& g, const EdgeColoring& c) {
    ordered_json edges = ordered_json::array();
    for (EdgeIndex e = 0; e < g.size(); ++e) {
        const auto [u, v] = g.edge(e);
        edges.push_back({{"u", u}, {"v", v}, {"color", c[e]}});
    }
    return {{"t", c.palette()}, {"edges", std::move(edges)}};
}

ordered_json validation_json(const ValidationReport& r) {
    ordered_json failures = ordered_json::array();
    for (const auto& f : r.failures) {
        ordered_json item{{"kind", to_string(f.kind)}};
        item[f.kind == FailureKind::UnusedColor ? "color" : "vertex"] = f.index;
        item["detail"] = f.detail;
        failures.push_back(std::move(item));
    }
    return {{"verdict", r.verdict},
            {"proper", r.proper},
            {"interval_at_every_vertex", r.interval_at_every_vertex},
            {"surjective", r.surjective},
            {"failures", std::move(failures)}};
}

ordered_json graph6_or_null(const Graph& g) {
    if (g.order() < 1 || g.order() > kGraph6MaxOrder) return nullptr;
    return write_graph6(g);
}

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json claim_json(const BoundClaim& c) {
    ordered_json ev{{"n", c.evidence.n}};
    switch (c.theorem) {
        case BoundTheorem::TriangleFree: ev["triangle_free"] = true; break;
        case BoundTheorem::Biregular:
            ev["a"] = c.evidence.biregular_degrees->first;
            ev["b"] = c.evidence.biregular_degrees->second;
            break;
        case BoundTheorem::Regular: ev["r"] = *c.evidence.regular_degree; break;
        case BoundTheorem::PlanarAsserted: ev["planar"] = "asserted"; break;
        case BoundTheorem::General:
        case BoundTheorem::GeneralAtLeast3: break;
    }
    return {{"theorem", theorem_id(c.theorem)}, {"bound", c.bound}, {"evidence", std::move(ev)}};
}

}  // namespace

std::string coloring_to_json(const Graph& g, const EdgeColoring& c) {
    if (c.size() != g.size()) throw DomainError("coloring is not sized for the graph");
    return coloring_json(g, c).dump(2);
}

EdgeColoring coloring_from_json(const Graph& g, std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("coloring JSON: ") + e.what(), ParseError::Unit::Byte, e.byte);
    }
    auto fail = [](const std::string& why) -> void { throw ParseError("coloring JSON: " + why); };

    if (!doc.is_object() || !doc.contains("t") || !doc.contains("edges")) fail("expected an object with \"t\" and \"edges\"");
    if (!doc["t"].is_number_integer()) fail("\"t\" must be an integer");
    if (!doc["edges"].is_array()) fail("\"edges\" must be an array");

    const int t = doc["t"].get<int>();
    std::vector<Color> colors(g.size(), 0);
    for (const auto& item : doc["edges"]) {
        if (!item.is_object() || !item.contains("u") || !item.contains("v") || !item.contains("color") ||
            !item["u"].is_number_integer() || !item["v"].is_number_integer() || !item["color"].is_number_integer())
            fail("each edge needs integer \"u\", \"v\" and \"color\"");
        const int u = item["u"].get<int>();
        const int v = item["v"].get<int>();
        const auto e = g.edge_index(u, v);
        if (!e) fail("(" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge of the graph");
        if (colors[*e] != 0) fail("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") listed twice");
        colors[*e] = item["color"].get<int>();
        if (colors[*e] < 1 || colors[*e] > t)
            fail("color " + std::to_string(colors[*e]) + " outside [1, " + std::to_string(t) + "]");
    }
    for (EdgeIndex e = 0; e < g.size(); ++e) {
        if (colors[e] == 0)
            fail("edge (" + std::to_string(g.edge(e).u) + ", " + std::to_string(g.edge(e).v) + ") has no color");
    }
    try {
        return EdgeColoring(t, std::move(colors));
    } catch (const DomainError& e) {
        throw ParseError(std::string("coloring JSON: ") + e.what());
    }
}

std::string validation_to_json(const ValidationReport& r) { return validation_json(r).dump(2); }

std::string solve_outcome_to_json(const Graph& g, const SolveOutcome& s) {
    ordered_json doc{{"status", to_string(s.status)}, {"graph6", graph6_or_null(g)}};
    if (s.t) doc["t"] = *s.t;
    doc["W"] = optional_json(s.W);
    doc["interval_colorable"] = optional_json(s.interval_colorable);
    doc["feasible_t_set"] = s.feasible_t_set;
    doc["cutoff"] = optional_json(s.cutoff);
    doc["last_completed_t"] = optional_json(s.last_completed_t);
    doc["w_upper_bound"] = optional_json(s.w_upper_bound);
    doc["nodes_expanded"] = s.nodes_expanded;
    doc["witness"] = s.witness ? coloring_json(g, *s.witness) : ordered_json(nullptr);
    return doc.dump(2);
}

std::string bound_report_to_json(const BoundReport& r) {
    ordered_json claims = ordered_json::array();
    for (const auto& c : r.claims) claims.push_back(claim_json(c));
    ordered_json violations = ordered_json::array();
    for (const auto& c : r.violations) violations.push_back(claim_json(c));
    ordered_json tight = ordered_json::array();
    for (auto t : r.tight) tight.push_back(theorem_id(t));

    ordered_json doc{{"claims", std::move(claims)}, {"best", optional_json(r.best)}, {"edge_count", r.edge_count}};
    doc["search_cutoff"] = r.best ? std::min<long long>(*r.best, static_cast<long long>(r.edge_count))
                                  : static_cast<long long>(r.edge_count);
    doc["audited_W"] = optional_json(r.audited_W);
    doc["violations"] = std::move(violations);
    doc["tight"] = std::move(tight);
    return doc.dump(2);
}

std::string certificate_to_json(const DoublingCertificate& cert) {
    const auto& d = cert.result;
    ordered_json provenance = ordered_json::array();
    for (EdgeIndex e = 0; e < d.h.size(); ++e) {
        const auto [a, b] = d.h.edge(e);
        ordered_json item{{"u", a}, {"v", b}};
        if (const auto* x = std::get_if<DoublingResult::Cross>(&d.edge_provenance[e])) {
            item["kind"] = "cross";
            item["source_edge"] = x->source_edge;
            item["orientation"] = x->forward ? "forward" : "reverse";
        } else {
            item["kind"] = "matching";
            item["i"] = std::get<DoublingResult::Matching>(d.edge_provenance[e]).index;
        }
        provenance.push_back(std::move(item));
    }

    ordered_json doc;
    doc["g_graph6"] = graph6_or_null(cert.source);
    doc["alpha"] = coloring_json(cert.source, cert.alpha);
    doc["h_graph6"] = graph6_or_null(d.h);
    doc["u_map"] = d.u_map;
    doc["w_map"] = d.w_map;
    doc["provenance"] = std::move(provenance);
    doc["beta"] = coloring_json(d.h, cert.beta);
    doc["chosen_i0"] = cert.chosen_i0;
    doc["final"] = coloring_json(d.h, cert.final_coloring);
    doc["validation"] = validation_json(cert.validation);
    return doc.dump(2);
}

}  // namespace intcol
