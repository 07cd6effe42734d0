#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "intcol/coloring.hpp"
#include "intcol/graph.hpp"

namespace intcol {

struct SearchLimits {
    /// Total backtracking nodes allowed for one call; 0 means unlimited.
    std::uint64_t node_limit = 0;
    /// Extra upper cutoff on t for compute_W / compute_feasible_palettes.
    std::optional<int> t_override;
    /// Start from the best theorem bound. When false the search starts at
    /// |E|, which makes an audit of the bounds independent of them.
    bool theorem_cutoff = true;
};

enum class SolveStatus { Found, Infeasible, Aborted };

std::string_view to_string(SolveStatus s) noexcept;

struct SolveOutcome {
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<EdgeColoring> witness;  ///< present iff status == Found
    std::uint64_t nodes_expanded = 0;

    std::optional<int> t;  ///< palette decided (find_interval_coloring)

    // Optimization results.
    std::optional<int> W;
    std::optional<bool> interval_colorable;
    std::vector<int> feasible_t_set;  ///< ascending, palettes proven feasible
    std::optional<int> cutoff;        ///< highest palette the search started from
    /// Smallest t fully decided before an abort (the search runs downward).
    std::optional<int> last_completed_t;
    /// On abort: W <= this value, every larger t up to the cutoff was refuted.
    std::optional<int> w_upper_bound;
};

/// Edge visiting order of the search: breadth-first from the lowest-indexed
/// maximum-degree vertex; each dequeued vertex contributes its not yet listed
/// incident edges in ascending neighbor order.
std::vector<EdgeIndex> search_edge_order(const Graph& g);

/// Decides whether g has an interval t-coloring.
/// Requires g connected with at least one edge and max_degree <= t <= |E|;
/// otherwise throws DomainError.
SolveOutcome find_interval_coloring(const Graph& g, int t, const SearchLimits& limits = {});

/// W(G): tries t from min(|E|, best theorem bound, t_override) down to the
/// max degree and stops at the first feasible palette.
SolveOutcome compute_W(const Graph& g, const SearchLimits& limits = {});

/// Decides every palette in [max_degree, cutoff]; feasible_t_set lists all
/// feasible ones, W is the largest and the witness belongs to W.
SolveOutcome compute_feasible_palettes(const Graph& g, const SearchLimits& limits = {});

/// Exhaustive oracle: enumerates every map E -> [1, t] for t = 1..t_max.
/// Guarded to |E| <= 10 and t_max <= 8 (DomainError otherwise).
SolveOutcome brute_force_W(const Graph& g, int t_max);

inline constexpr std::size_t kBruteForceMaxEdges = 10;
inline constexpr int kBruteForceMaxPalette = 8;

}  // namespace intcol
