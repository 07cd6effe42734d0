#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "intcol/graph.hpp"

namespace intcol {

/// Known upper bounds on W(G) for connected interval-colorable graphs.
enum class BoundTheorem {
    TriangleFree,     ///< W <= n - 1
    Biregular,        ///< W <= n - 3 for (a,b)-biregular bipartite with n >= 2(a+b)
    General,          ///< W <= 2n - 3
    GeneralAtLeast3,  ///< W <= 2n - 4 for n >= 3
    PlanarAsserted,   ///< W <= floor(11n/6), planarity taken on the caller's word
    Regular,          ///< W <= 2n - 5 for r-regular with n >= 2r + 2
};

/// Stable identifier used in reports ("T1_triangle_free", ...).
std::string_view theorem_id(BoundTheorem t) noexcept;

/// Facts that establish a claim's preconditions.
struct BoundEvidence {
    int n = 0;
    bool triangle_free = false;
    std::optional<int> regular_degree;
    std::optional<std::pair<int, int>> biregular_degrees;
    bool planar_asserted = false;
};

struct BoundClaim {
    BoundTheorem theorem;
    int bound;
    BoundEvidence evidence;
};

struct BoundReport {
    std::vector<BoundClaim> claims;
    std::optional<int> best;             ///< min over claims
    std::size_t edge_count = 0;          ///< surjectivity cap: W <= |E|
    std::optional<int> audited_W;
    std::vector<BoundClaim> violations;  ///< claims with W > bound; non-empty means a defect
    std::vector<BoundTheorem> tight;     ///< claims with W == bound
};

/// Claims, in enum order, whose preconditions hold for g. Throws DomainError
/// when g is disconnected.
std::vector<BoundClaim> applicable_bounds(const Graph& g, const GraphClass& cls, bool planar_asserted);

/// Minimum over applicable claims, capped by |E(g)|.
int best_upper_bound(const Graph& g, const GraphClass& cls, bool planar_asserted);

BoundReport audit(const Graph& g, int W, const std::vector<BoundClaim>& claims);

/// Report without an audited value.
BoundReport bound_report(const Graph& g, const std::vector<BoundClaim>& claims);

}  // namespace intcol
