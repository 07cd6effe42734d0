#include <array>
#include <bit>
#include <cstdint>

#include "intcol/error.hpp"
#include "intcol/solver.hpp"

namespace intcol {

namespace {

constexpr std::size_t kMaxEndpoints = 2 * kBruteForceMaxEdges;

// Allocation-free restatement of the interval conditions for tiny graphs:
// colors are bits 1..t of a per-vertex mask.
class TinyChecker {
public:
    explicit TinyChecker(const Graph& g) {
        std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
        for (const auto& [u, v] : g.edges()) {
            for (Vertex x : {u, v})
                if (local[static_cast<std::size_t>(x)] < 0) local[static_cast<std::size_t>(x)] = vertices_++;
            ends_[edges_++] = {static_cast<std::uint8_t>(local[static_cast<std::size_t>(u)]),
                               static_cast<std::uint8_t>(local[static_cast<std::size_t>(v)])};
        }
    }

    bool accepts(const std::array<Color, kBruteForceMaxEdges>& colors, int t) const {
        std::array<std::uint32_t, kMaxEndpoints> mask{};
        std::uint32_t all = 0;
        for (std::size_t e = 0; e < edges_; ++e) {
            const std::uint32_t bit = 1u << colors[e];
            auto& a = mask[ends_[e][0]];
            auto& b = mask[ends_[e][1]];
            if ((a & bit) || (b & bit)) return false;
            a |= bit;
            b |= bit;
            all |= bit;
        }
        if (all != (((1u << t) - 1u) << 1)) return false;
        for (int x = 0; x < vertices_; ++x) {
            const std::uint32_t run = mask[static_cast<std::size_t>(x)] >> std::countr_zero(mask[static_cast<std::size_t>(x)]);
            if ((run & (run + 1)) != 0) return false;
        }
        return true;
    }

    std::size_t edges() const noexcept { return edges_; }

private:
    std::array<std::array<std::uint8_t, 2>, kBruteForceMaxEdges> ends_{};
    std::size_t edges_ = 0;
    int vertices_ = 0;
};

}  // namespace

SolveOutcome brute_force_W(const Graph& g, int t_max) {
    if (g.size() > kBruteForceMaxEdges)
        throw DomainError("brute force refuses graphs with more than " + std::to_string(kBruteForceMaxEdges) + " edges");
    if (t_max < 1 || t_max > kBruteForceMaxPalette)
        throw DomainError("brute force palette bound must lie in [1, " + std::to_string(kBruteForceMaxPalette) + "]");

    const TinyChecker checker(g);
    const std::size_t m = checker.edges();

    SolveOutcome out;
    out.status = SolveStatus::Infeasible;
    std::optional<EdgeColoring> best;
    for (int t = 1; t <= t_max; ++t) {
        if (m == 0) break;
        std::array<Color, kBruteForceMaxEdges> colors{};
        for (std::size_t e = 0; e < m; ++e) colors[e] = 1;
        bool feasible = false;
        for (;;) {
            ++out.nodes_expanded;
            if (!feasible && checker.accepts(colors, t)) {
                feasible = true;
                best = EdgeColoring(t, std::vector<Color>(colors.begin(), colors.begin() + static_cast<std::ptrdiff_t>(m)));
                break;
            }
            // Odometer, last edge fastest.
            std::size_t k = m;
            while (k > 0 && colors[k - 1] == t) colors[--k] = 1;
            if (k == 0) break;
            ++colors[k - 1];
        }
        if (feasible) out.feasible_t_set.push_back(t);
    }

    out.interval_colorable = !out.feasible_t_set.empty();
    if (best) {
        if (!validate_interval(g, *best).verdict)
            throw InvariantViolation("brute-force checker accepted an invalid coloring");
        out.status = SolveStatus::Found;
        out.W = out.feasible_t_set.back();
        out.witness = std::move(best);
    }
    return out;
}

}  // namespace intcol
