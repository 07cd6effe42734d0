#pragma once

#include <cstdint>
#include <vector>

#include "intcol/graph.hpp"

namespace intcol {

inline constexpr int kCatalogMaxOrder = 7;

/// One representative per isomorphism class of connected graphs on n
/// vertices, each in canonical labeling, ordered by canonical_key.
/// Throws DomainError for n outside [1, 7].
std::vector<Graph> generate_connected_catalog(int n);

/// Minimum, over all n! relabelings, of the graph6 upper-triangle bit
/// string read as a big-endian integer. Requires n <= 7.
std::uint64_t canonical_key(const Graph& g);

/// The relabeling of g that attains canonical_key.
Graph canonical_form(const Graph& g);

}  // namespace intcol
