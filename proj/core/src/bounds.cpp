#include "intcol/bounds.hpp"

#include <algorithm>

#include "intcol/error.hpp"

namespace intcol {

std::string_view theorem_id(BoundTheorem t) noexcept {
    switch (t) {
        case BoundTheorem::TriangleFree: return "T1_triangle_free";
        case BoundTheorem::Biregular: return "T2_biregular";
        case BoundTheorem::General: return "T3_general";
        case BoundTheorem::GeneralAtLeast3: return "T4_general_n3";
        case BoundTheorem::PlanarAsserted: return "T6_planar_asserted";
        case BoundTheorem::Regular: return "T7_regular";
    }
    return "unknown";
}

std::vector<BoundClaim> applicable_bounds(const Graph& g, const GraphClass& cls, bool planar_asserted) {
    if (!cls.connected) throw DomainError("bounds apply to connected graphs only");

    const int n = g.order();
    BoundEvidence ev;
    ev.n = n;
    ev.triangle_free = cls.triangle_free;
    ev.regular_degree = cls.regular_degree;
    ev.biregular_degrees = cls.biregular_degrees;
    ev.planar_asserted = planar_asserted;

    std::vector<BoundClaim> claims;
    if (cls.triangle_free) claims.push_back({BoundTheorem::TriangleFree, n - 1, ev});
    if (cls.biregular_degrees) {
        const auto [a, b] = *cls.biregular_degrees;
        if (n >= 2 * (a + b)) claims.push_back({BoundTheorem::Biregular, n - 3, ev});
    }
    claims.push_back({BoundTheorem::General, 2 * n - 3, ev});
    if (n >= 3) claims.push_back({BoundTheorem::GeneralAtLeast3, 2 * n - 4, ev});
    if (planar_asserted) claims.push_back({BoundTheorem::PlanarAsserted, 11 * n / 6, ev});
    if (cls.regular_degree && n >= 2 * *cls.regular_degree + 2)
        claims.push_back({BoundTheorem::Regular, 2 * n - 5, ev});
    return claims;
}

int best_upper_bound(const Graph& g, const GraphClass& cls, bool planar_asserted) {
    int best = static_cast<int>(g.size());
    for (const auto& c : applicable_bounds(g, cls, planar_asserted)) best = std::min(best, c.bound);
    return best;
}

BoundReport bound_report(const Graph& g, const std::vector<BoundClaim>& claims) {
    BoundReport r;
    r.claims = claims;
    r.edge_count = g.size();
    for (const auto& c : claims) r.best = r.best ? std::min(*r.best, c.bound) : c.bound;
    return r;
}

BoundReport audit(const Graph& g, int W, const std::vector<BoundClaim>& claims) {
    auto r = bound_report(g, claims);
    r.audited_W = W;
    for (const auto& c : claims) {
        if (W > c.bound) r.violations.push_back(c);
        if (W == c.bound) r.tight.push_back(c.theorem);
    }
    return r;
}

}  // namespace intcol
