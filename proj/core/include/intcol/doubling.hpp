#pragma once

#include <variant>
#include <vector>

#include "intcol/coloring.hpp"
#include "intcol/graph.hpp"

namespace intcol {

/// Auxiliary bipartite graph H built from a connected graph G on n vertices.
///
/// Vertex numbering is fixed: v_i becomes u_i = i and w_i = n + i. Every
/// edge v_i v_j of G yields the two cross edges u_i w_j and u_j w_i, and
/// every vertex v_i yields the matching edge u_i w_i, so |V(H)| = 2n and
/// |E(H)| = 2|E(G)| + n.
struct DoublingResult {
    /// Cross edge u_a w_b coming from G-edge (a, b). `forward` is true when
    /// a is the smaller endpoint of that edge.
    struct Cross {
        EdgeIndex source_edge;
        bool forward;
        friend bool operator==(const Cross&, const Cross&) = default;
    };
    /// Matching edge u_i w_i.
    struct Matching {
        Vertex index;
        friend bool operator==(const Matching&, const Matching&) = default;
    };
    using Provenance = std::variant<Cross, Matching>;

    Graph h;
    std::vector<Vertex> u_map;
    std::vector<Vertex> w_map;
    std::vector<Provenance> edge_provenance;  ///< indexed like h.edges()
    std::vector<EdgeIndex> matching_edge;     ///< H-edge index of u_i w_i
};

/// Throws DomainError for disconnected or edgeless input; InvariantViolation
/// if a structural property of H fails to hold.
DoublingResult double_graph(const Graph& g);

/// Cross edges get alpha + 1, matching edge i gets max S(v_i, alpha) + 2.
/// The result declares palette t + 2 and leaves color 1 unused.
/// Throws DomainError when alpha is not a valid interval coloring of g.
EdgeColoring lift_coloring(const Graph& g, const EdgeColoring& alpha, const DoublingResult& d);

struct Recoloring {
    Vertex chosen_i0;
    EdgeColoring final_coloring;
};

/// Picks the smallest i with min S(u_i, beta) = 2 and recolors u_i w_i to 1.
/// `t` is the palette of the source coloring; the result has palette t + 2.
Recoloring finalize_recolor(const DoublingResult& d, const EdgeColoring& beta, int t);

struct DoublingCertificate {
    Graph source;
    EdgeColoring alpha;
    DoublingResult result;
    EdgeColoring beta;
    Vertex chosen_i0;
    EdgeColoring final_coloring;
    ValidationReport validation;
};

/// Runs the whole construction and validates the final coloring of H.
/// A failed validation raises InvariantViolation carrying the full state.
DoublingCertificate double_with_certificate(const Graph& g, const EdgeColoring& alpha);

}  // namespace intcol
