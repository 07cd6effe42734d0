#include "intcol/doubling.hpp"

#include <algorithm>

#include "intcol/error.hpp"
#include "intcol/serialize.hpp"

namespace intcol {

namespace {

void check(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation("doubling: " + what);
}

void check_structure(const Graph& g, const DoublingResult& d) {
    const int n = g.order();
    const Graph& h = d.h;
    check(h.order() == 2 * n, "|V(H)| != 2n");
    check(h.size() == 2 * g.size() + static_cast<std::size_t>(n), "|E(H)| != 2|E(G)| + n");

    for (const auto& [a, b] : h.edges()) check(a < n && b >= n, "edge inside one side of H");

    const auto cls = classify(h);
    check(cls.bipartite(), "H is not bipartite");
    check(cls.connected, "H is disconnected");
    if (const auto r = classify(g).regular_degree) {
        check(cls.regular_degree && *cls.regular_degree == *r + 1, "H of an r-regular graph is not (r+1)-regular");
    }
}

}  // namespace

DoublingResult double_graph(const Graph& g) {
    if (g.size() == 0) throw DomainError("doubling needs at least one edge");
    if (!is_connected(g)) throw DomainError("doubling needs a connected graph");

    const int n = g.order();
    std::vector<Edge> edges;
    edges.reserve(2 * g.size() + static_cast<std::size_t>(n));
    for (const auto& [i, j] : g.edges()) {
        edges.push_back({i, n + j});
        edges.push_back({j, n + i});
    }
    for (Vertex i = 0; i < n; ++i) edges.push_back({i, n + i});

    DoublingResult d;
    d.h = Graph(2 * n, std::move(edges));
    d.u_map.resize(static_cast<std::size_t>(n));
    d.w_map.resize(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) {
        d.u_map[static_cast<std::size_t>(i)] = i;
        d.w_map[static_cast<std::size_t>(i)] = n + i;
    }

    d.edge_provenance.reserve(d.h.size());
    d.matching_edge.assign(static_cast<std::size_t>(n), 0);
    for (EdgeIndex e = 0; e < d.h.size(); ++e) {
        const auto [a, wb] = d.h.edge(e);
        const Vertex b = wb - n;
        if (a == b) {
            d.edge_provenance.emplace_back(DoublingResult::Matching{a});
            d.matching_edge[static_cast<std::size_t>(a)] = e;
        } else {
            const auto src = g.edge_index(a, b);
            check(src.has_value(), "cross edge without a source edge");
            d.edge_provenance.emplace_back(DoublingResult::Cross{*src, a < b});
        }
    }

    check_structure(g, d);
    return d;
}

EdgeColoring lift_coloring(const Graph& g, const EdgeColoring& alpha, const DoublingResult& d) {
    if (alpha.size() != g.size()) throw DomainError("coloring is not sized for the source graph");
    if (!validate_interval(g, alpha).verdict)
        throw DomainError("source coloring is not an interval coloring");

    std::vector<Color> top(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        for (EdgeIndex e : g.incident_edges(v))
            top[static_cast<std::size_t>(v)] = std::max(top[static_cast<std::size_t>(v)], alpha[e]);
    }

    std::vector<Color> colors(d.h.size(), 0);
    for (EdgeIndex e = 0; e < d.h.size(); ++e) {
        colors[e] = std::visit(
            [&](const auto& p) -> Color {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, DoublingResult::Cross>) {
                    return alpha[p.source_edge] + 1;
                } else {
                    return top[static_cast<std::size_t>(p.index)] + 2;
                }
            },
            d.edge_provenance[e]);
    }
    return EdgeColoring(alpha.palette() + 2, std::move(colors));
}

Recoloring finalize_recolor(const DoublingResult& d, const EdgeColoring& beta, int t) {
    if (beta.palette() != t + 2) throw DomainError("lifted coloring does not declare palette t + 2");
    if (beta.size() != d.h.size()) throw DomainError("lifted coloring is not sized for H");

    const auto n = static_cast<Vertex>(d.u_map.size());
    for (Vertex i = 0; i < n; ++i) {
        const auto s = spectrum(d.h, beta, d.u_map[static_cast<std::size_t>(i)]);
        if (!s.empty() && s.front() == 2) {
            std::vector<Color> colors(beta.colors().begin(), beta.colors().end());
            colors[d.matching_edge[static_cast<std::size_t>(i)]] = 1;
            return {i, EdgeColoring(t + 2, std::move(colors))};
        }
    }
    throw InvariantViolation("doubling: no vertex u_i with min S(u_i, beta) = 2");
}

DoublingCertificate double_with_certificate(const Graph& g, const EdgeColoring& alpha) {
    auto d = double_graph(g);
    auto beta = lift_coloring(g, alpha, d);
    auto [i0, final_coloring] = finalize_recolor(d, beta, alpha.palette());
    auto validation = validate_interval(d.h, final_coloring);

    DoublingCertificate cert{g,  alpha, std::move(d), std::move(beta), i0, std::move(final_coloring),
                             std::move(validation)};
    if (!cert.validation.verdict)
        throw InvariantViolation("doubling certificate failed validation:\n" + certificate_to_json(cert));

    std::size_t changed = 0;
    for (EdgeIndex e = 0; e < cert.beta.size(); ++e) changed += cert.beta[e] != cert.final_coloring[e] ? 1 : 0;
    const EdgeIndex recolored = cert.result.matching_edge[static_cast<std::size_t>(i0)];
    if (changed != 1 || cert.final_coloring[recolored] != 1)
        throw InvariantViolation("doubling certificate: final coloring must differ from beta only on u_i0 w_i0:\n" +
                                 certificate_to_json(cert));
    return cert;
}

}  // namespace intcol
