#include "intcol/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "intcol/error.hpp"

namespace intcol {

namespace {

using Matrix = std::array<std::uint8_t, kCatalogMaxOrder>;  // row bitmasks

Matrix adjacency(const Graph& g) {
    Matrix adj{};
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= static_cast<std::uint8_t>(1u << v);
        adj[static_cast<std::size_t>(v)] |= static_cast<std::uint8_t>(1u << u);
    }
    return adj;
}

// Bit string of the relabeled graph where new vertex k is old vertex perm[k].
std::uint64_t key_under(const Matrix& adj, const std::array<int, kCatalogMaxOrder>& perm, int n) {
    std::uint64_t key = 0;
    for (int j = 1; j < n; ++j) {
        const auto row = adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
        for (int i = 0; i < j; ++i) key = (key << 1) | ((row >> perm[static_cast<std::size_t>(i)]) & 1u);
    }
    return key;
}

std::pair<std::uint64_t, std::array<int, kCatalogMaxOrder>> minimize(const Graph& g) {
    const int n = g.order();
    if (n < 1 || n > kCatalogMaxOrder)
        throw DomainError("canonical form supports 1.." + std::to_string(kCatalogMaxOrder) + " vertices");
    const auto adj = adjacency(g);
    std::array<int, kCatalogMaxOrder> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    auto best_perm = perm;
    auto best = key_under(adj, perm, n);
    while (std::next_permutation(perm.begin(), perm.begin() + n)) {
        const auto key = key_under(adj, perm, n);
        if (key < best) {
            best = key;
            best_perm = perm;
        }
    }
    return {best, best_perm};
}

Graph relabel(const Graph& g, const std::array<int, kCatalogMaxOrder>& perm) {
    std::vector<int> position(static_cast<std::size_t>(g.order()));
    for (int k = 0; k < g.order(); ++k) position[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = k;
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        edges.push_back({position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]});
    return Graph(g.order(), std::move(edges));
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) { return minimize(g).first; }

Graph canonical_form(const Graph& g) { return relabel(g, minimize(g).second); }

std::vector<Graph> generate_connected_catalog(int n) {
    if (n < 1 || n > kCatalogMaxOrder)
        throw DomainError("catalog generation is limited to 1.." + std::to_string(kCatalogMaxOrder) +
                          " vertices; feed larger graphs as a graph6 stream (e.g. from nauty's geng -c)");
    if (n == 1) return {Graph(1, {})};

    // Every connected graph has a vertex whose removal leaves it connected,
    // so extending each smaller class by a new vertex with every nonempty
    // neighborhood reaches all classes.
    std::map<std::uint64_t, Graph> classes;
    for (const Graph& base : generate_connected_catalog(n - 1)) {
        const Vertex fresh = n - 1;
        for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
            std::vector<Edge> edges(base.edges().begin(), base.edges().end());
            for (Vertex v = 0; v < fresh; ++v)
                if (mask & (1u << v)) edges.push_back({v, fresh});
            Graph candidate(n, std::move(edges));
            auto [key, perm] = minimize(candidate);
            if (!classes.contains(key)) classes.emplace(key, relabel(candidate, perm));
        }
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [key, g] : classes) out.push_back(std::move(g));
    return out;
}

}  // namespace intcol
