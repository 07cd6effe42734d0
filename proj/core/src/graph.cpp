#include "intcol/graph.hpp"

#include <algorithm>

#include "intcol/error.hpp"

namespace intcol {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw DomainError("negative vertex count");
    for (auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw DomainError("edge endpoint out of range: (" + std::to_string(e.u) + ", " +
                              std::to_string(e.v) + ") with n = " + std::to_string(n));
        if (e.u == e.v) throw DomainError("loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adjacency_.resize(static_cast<std::size_t>(n));
    incidence_.resize(static_cast<std::size_t>(n));
    for (EdgeIndex i = 0; i < edges_.size(); ++i) {
        const auto [u, v] = edges_[i];
        adjacency_[u].push_back(v);
        incidence_[u].push_back(i);
        adjacency_[v].push_back(u);
        incidence_[v].push_back(i);
    }
    // Lexicographic edge order already yields ascending neighbors for the
    // larger endpoint; the smaller endpoint's list needs a joint sort.
    for (std::size_t v = 0; v < adjacency_.size(); ++v) {
        auto& nb = adjacency_[v];
        auto& inc = incidence_[v];
        std::vector<std::size_t> idx(nb.size());
        for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return nb[a] < nb[b]; });
        std::vector<Vertex> nb2;
        std::vector<EdgeIndex> inc2;
        nb2.reserve(idx.size());
        inc2.reserve(idx.size());
        for (auto k : idx) {
            nb2.push_back(nb[k]);
            inc2.push_back(inc[k]);
        }
        nb = std::move(nb2);
        inc = std::move(inc2);
    }
}

Vertex Graph::check(Vertex v) const {
    if (v < 0 || v >= n_) throw DomainError("vertex out of range: " + std::to_string(v));
    return v;
}

int Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& nb : adjacency_) best = std::max(best, nb.size());
    return static_cast<int>(best);
}

int Graph::min_degree() const noexcept {
    if (adjacency_.empty()) return 0;
    std::size_t best = adjacency_.front().size();
    for (const auto& nb : adjacency_) best = std::min(best, nb.size());
    return static_cast<int>(best);
}

std::optional<EdgeIndex> Graph::edge_index(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return std::nullopt;
    const auto& nb = adjacency_[a];
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return incidence_[a][static_cast<std::size_t>(it - nb.begin())];
}

}  // namespace intcol
