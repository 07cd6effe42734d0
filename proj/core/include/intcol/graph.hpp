#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace intcol {

using Vertex = int;
using EdgeIndex = std::size_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected loopless graph on vertices 0..n-1.
///
/// The edge list is kept in lexicographic order; every edge-indexed
/// structure in the library (colorings, provenance tables) uses this order.
class Graph {
public:
    Graph() = default;

    /// Normalizes each pair to (min, max), drops duplicates and sorts.
    /// Throws DomainError on a loop or an endpoint outside [0, n).
    Graph(int n, std::vector<Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

    /// Neighbors of v in ascending order.
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(check(v)); }
    /// Indices of the edges incident to v, ordered like neighbors(v).
    std::span<const EdgeIndex> incident_edges(Vertex v) const { return incidence_.at(check(v)); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(check(v)).size()); }

    int max_degree() const noexcept;
    int min_degree() const noexcept;

    bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }
    std::optional<EdgeIndex> edge_index(Vertex a, Vertex b) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    Vertex check(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::vector<EdgeIndex>> incidence_;
};

/// Structural facts consumed by the bound registry.
struct GraphClass {
    bool connected = false;
    /// Present iff bipartite. Side 0 holds the lowest-indexed vertex of each component.
    std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition;
    std::optional<int> regular_degree;
    bool triangle_free = false;
    /// (a, b) with a <= b; present iff bipartite and each side is degree-uniform.
    std::optional<std::pair<int, int>> biregular_degrees;
    int max_degree = 0;
    int min_degree = 0;

    bool bipartite() const noexcept { return bipartition.has_value(); }
};

GraphClass classify(const Graph& g);

bool is_connected(const Graph& g);

// graph6, short form only (1 <= n <= 62).
inline constexpr int kGraph6MaxOrder = 62;

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// First line holds n, every following non-blank line one "i j" pair (0-based).
Graph parse_edge_list(std::string_view text);

}  // namespace intcol
