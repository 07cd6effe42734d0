#include "intcol/solver.hpp"

#include <algorithm>
#include <queue>

#include "intcol/bounds.hpp"
#include "intcol/error.hpp"

namespace intcol {

std::string_view to_string(SolveStatus s) noexcept {
    switch (s) {
        case SolveStatus::Found: return "found";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Aborted: return "aborted";
    }
    return "unknown";
}

std::vector<EdgeIndex> search_edge_order(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<EdgeIndex> order;
    if (n == 0) return order;
    order.reserve(g.size());

    Vertex root = 0;
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(root)) root = v;

    std::vector<char> queued(n, 0);
    std::vector<char> listed(g.size(), 0);
    std::queue<Vertex> q;
    auto visit = [&](Vertex start) {
        queued[static_cast<std::size_t>(start)] = 1;
        q.push(start);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            const auto nb = g.neighbors(v);
            const auto inc = g.incident_edges(v);
            for (std::size_t k = 0; k < nb.size(); ++k) {
                if (!listed[inc[k]]) {
                    listed[inc[k]] = 1;
                    order.push_back(inc[k]);
                }
                if (!queued[static_cast<std::size_t>(nb[k])]) {
                    queued[static_cast<std::size_t>(nb[k])] = 1;
                    q.push(nb[k]);
                }
            }
        }
    };
    visit(root);
    // Remaining components (the solver itself only sees connected graphs).
    for (Vertex v = 0; v < g.order(); ++v)
        if (!queued[static_cast<std::size_t>(v)]) visit(v);
    return order;
}

namespace {

/// Depth-first assignment of colors to edges in a fixed order, ascending
/// colors first. Partial states are kept consistent with an interval
/// t-coloring: distinct colors at each vertex, spread at most the degree,
/// and enough uncolored edges left to reach every unused color.
class IntervalSearch {
public:
    IntervalSearch(const Graph& g, std::span<const EdgeIndex> order, int t, std::uint64_t budget)
        : g_(g), order_(order), t_(t), budget_(budget) {
        const auto n = static_cast<std::size_t>(g.order());
        stride_ = static_cast<std::size_t>(t) + 2;
        degree_.resize(n);
        for (std::size_t v = 0; v < n; ++v) degree_[v] = g.degree(static_cast<Vertex>(v));
        count_.assign(n, 0);
        low_.assign(n, 0);
        high_.assign(n, 0);
        present_.assign(n * stride_, 0);
        uses_.assign(stride_, 0);
        ends_.reserve(order.size());
        for (EdgeIndex e : order) ends_.push_back(g.edge(e));
        assigned_.assign(order.size(), 0);
    }

    SolveStatus run() {
        switch (descend(0)) {
            case Step::Found: return SolveStatus::Found;
            case Step::Aborted: return SolveStatus::Aborted;
            case Step::Exhausted: break;
        }
        return SolveStatus::Infeasible;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

    std::vector<Color> colors_by_edge() const {
        std::vector<Color> out(order_.size(), 0);
        for (std::size_t pos = 0; pos < order_.size(); ++pos) out[order_[pos]] = assigned_[pos];
        return out;
    }

private:
    enum class Step { Found, Exhausted, Aborted };

    Step descend(std::size_t pos) {
        const std::size_t m = ends_.size();
        if (pos == m) return Step::Found;

        const auto u = static_cast<std::size_t>(ends_[pos].u);
        const auto v = static_cast<std::size_t>(ends_[pos].v);

        int lo = 1;
        int hi = t_;
        for (auto x : {u, v}) {
            if (count_[x] == 0) continue;
            lo = std::max(lo, high_[x] - degree_[x] + 1);
            hi = std::min(hi, low_[x] + degree_[x] - 1);
        }

        const auto left_after = static_cast<int>(m - pos - 1);
        for (int c = lo; c <= hi; ++c) {
            const auto cc = static_cast<std::size_t>(c);
            if (present_[u * stride_ + cc] || present_[v * stride_ + cc]) continue;
            const int fresh = uses_[cc] == 0 ? 1 : 0;
            if (left_after < t_ - distinct_ - fresh) continue;

            if (budget_ != 0 && nodes_ >= budget_) return Step::Aborted;
            ++nodes_;

            const int lu = low_[u], hu = high_[u], lv = low_[v], hv = high_[v];
            mark(u, c);
            mark(v, c);
            uses_[cc] += 1;
            distinct_ += fresh;
            assigned_[pos] = c;

            const Step r = descend(pos + 1);
            if (r != Step::Exhausted) return r;

            distinct_ -= fresh;
            uses_[cc] -= 1;
            present_[u * stride_ + cc] = 0;
            present_[v * stride_ + cc] = 0;
            --count_[u];
            --count_[v];
            low_[u] = lu;
            high_[u] = hu;
            low_[v] = lv;
            high_[v] = hv;
        }
        assigned_[pos] = 0;
        return Step::Exhausted;
    }

    void mark(std::size_t x, int c) {
        present_[x * stride_ + static_cast<std::size_t>(c)] = 1;
        if (count_[x]++ == 0) {
            low_[x] = high_[x] = c;
        } else {
            low_[x] = std::min(low_[x], c);
            high_[x] = std::max(high_[x], c);
        }
    }

    const Graph& g_;
    std::span<const EdgeIndex> order_;
    int t_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;

    std::size_t stride_ = 0;
    std::vector<Edge> ends_;
    std::vector<int> degree_;
    std::vector<int> count_;
    std::vector<int> low_;
    std::vector<int> high_;
    std::vector<unsigned char> present_;
    std::vector<int> uses_;
    int distinct_ = 0;
    std::vector<Color> assigned_;
};

void require_searchable(const Graph& g) {
    if (g.size() == 0) throw DomainError("graph has no edges; an interval coloring needs at least one edge");
    if (!is_connected(g)) throw DomainError("graph is disconnected");
}

struct Decision {
    SolveStatus status;
    std::uint64_t nodes;
    std::optional<EdgeColoring> witness;
};

// Runs one palette; `budget` 0 means unlimited.
Decision decide(const Graph& g, std::span<const EdgeIndex> order, int t, std::uint64_t budget) {
    IntervalSearch search(g, order, t, budget);
    const auto status = search.run();
    Decision d{status, search.nodes(), std::nullopt};
    if (status == SolveStatus::Found) {
        EdgeColoring witness(t, search.colors_by_edge());
        if (!validate_interval(g, witness).verdict)
            throw InvariantViolation("search produced a witness that fails validation at t = " + std::to_string(t));
        d.witness = std::move(witness);
    }
    return d;
}

std::uint64_t remaining(const SearchLimits& limits, std::uint64_t used) {
    if (limits.node_limit == 0) return 0;
    // At least one so an exhausted budget still reads as "limited".
    return limits.node_limit > used ? limits.node_limit - used : 1;
}

bool budget_spent(const SearchLimits& limits, std::uint64_t used) {
    return limits.node_limit != 0 && used >= limits.node_limit;
}

int search_cutoff(const Graph& g, const SearchLimits& limits) {
    int cutoff = limits.theorem_cutoff ? best_upper_bound(g, classify(g), false) : static_cast<int>(g.size());
    if (limits.t_override) {
        if (*limits.t_override < g.max_degree())
            throw DomainError("t override " + std::to_string(*limits.t_override) + " is below the maximum degree " +
                              std::to_string(g.max_degree()));
        cutoff = std::min(cutoff, *limits.t_override);
    }
    return cutoff;
}

}  // namespace

SolveOutcome find_interval_coloring(const Graph& g, int t, const SearchLimits& limits) {
    require_searchable(g);
    if (t < g.max_degree() || t > static_cast<int>(g.size()))
        throw DomainError("palette " + std::to_string(t) + " outside [" + std::to_string(g.max_degree()) + ", " +
                          std::to_string(g.size()) + "]");
    const auto order = search_edge_order(g);
    auto d = decide(g, order, t, limits.node_limit);

    SolveOutcome out;
    out.status = d.status;
    out.nodes_expanded = d.nodes;
    out.t = t;
    out.witness = std::move(d.witness);
    if (out.status == SolveStatus::Found) out.feasible_t_set = {t};
    return out;
}

SolveOutcome compute_W(const Graph& g, const SearchLimits& limits) {
    require_searchable(g);
    const int cutoff = search_cutoff(g, limits);
    const auto order = search_edge_order(g);

    SolveOutcome out;
    out.cutoff = cutoff;
    for (int t = cutoff; t >= g.max_degree(); --t) {
        if (budget_spent(limits, out.nodes_expanded)) {
            out.status = SolveStatus::Aborted;
            out.w_upper_bound = t;
            return out;
        }
        auto d = decide(g, order, t, remaining(limits, out.nodes_expanded));
        out.nodes_expanded += d.nodes;
        if (d.status == SolveStatus::Aborted) {
            out.status = SolveStatus::Aborted;
            out.w_upper_bound = t;
            return out;
        }
        out.last_completed_t = t;
        if (d.status == SolveStatus::Found) {
            out.status = SolveStatus::Found;
            out.W = t;
            out.interval_colorable = true;
            out.feasible_t_set = {t};
            out.witness = std::move(d.witness);
            return out;
        }
    }
    out.status = SolveStatus::Infeasible;
    out.interval_colorable = false;
    return out;
}

SolveOutcome compute_feasible_palettes(const Graph& g, const SearchLimits& limits) {
    require_searchable(g);
    const int cutoff = search_cutoff(g, limits);
    const auto order = search_edge_order(g);

    SolveOutcome out;
    out.cutoff = cutoff;
    for (int t = cutoff; t >= g.max_degree(); --t) {
        if (budget_spent(limits, out.nodes_expanded)) {
            out.status = SolveStatus::Aborted;
            break;
        }
        auto d = decide(g, order, t, remaining(limits, out.nodes_expanded));
        out.nodes_expanded += d.nodes;
        if (d.status == SolveStatus::Aborted) {
            out.status = SolveStatus::Aborted;
            break;
        }
        out.last_completed_t = t;
        if (d.status == SolveStatus::Found) {
            out.feasible_t_set.push_back(t);
            if (!out.W) {
                out.W = t;
                out.witness = std::move(d.witness);
            }
        }
    }
    std::reverse(out.feasible_t_set.begin(), out.feasible_t_set.end());
    if (out.status == SolveStatus::Aborted) {
        // W is only known if the top of the range was decided.
        if (out.W) out.interval_colorable = true;
        else out.w_upper_bound = out.last_completed_t ? *out.last_completed_t - 1 : cutoff;
        return out;
    }
    out.status = out.W ? SolveStatus::Found : SolveStatus::Infeasible;
    out.interval_colorable = out.W.has_value();
    return out;
}

}  // namespace intcol
