#include <algorithm>
#include <queue>

#include "intcol/graph.hpp"

namespace intcol {

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

namespace {

// Two-colors each component by BFS from its lowest vertex; nullopt on an odd cycle.
std::optional<std::vector<int>> two_color(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> side(n, -1);
    for (std::size_t root = 0; root < n; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::queue<Vertex> q;
        q.push(static_cast<Vertex>(root));
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

bool has_triangle(const Graph& g) {
    for (const auto& [u, v] : g.edges()) {
        const auto a = g.neighbors(u);
        const auto b = g.neighbors(v);
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i == *j) return true;
            if (*i < *j) ++i; else ++j;
        }
    }
    return false;
}

// Common degree of a vertex set, or nullopt if degrees differ. Empty sets yield nullopt.
std::optional<int> uniform_degree(const Graph& g, const std::vector<Vertex>& part) {
    if (part.empty()) return std::nullopt;
    const int d = g.degree(part.front());
    for (Vertex v : part)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

}  // namespace

GraphClass classify(const Graph& g) {
    GraphClass cls;
    cls.connected = is_connected(g);
    cls.max_degree = g.max_degree();
    cls.min_degree = g.min_degree();
    if (g.order() > 0 && cls.max_degree == cls.min_degree) cls.regular_degree = cls.max_degree;
    cls.triangle_free = !has_triangle(g);

    if (auto side = two_color(g)) {
        std::vector<Vertex> left;
        std::vector<Vertex> right;
        for (Vertex v = 0; v < g.order(); ++v) (side->at(static_cast<std::size_t>(v)) == 0 ? left : right).push_back(v);

        auto da = uniform_degree(g, left);
        auto db = uniform_degree(g, right);
        // An empty side places no constraint; borrow the other side's degree.
        if (left.empty()) da = db;
        if (right.empty()) db = da;
        if (da && db) cls.biregular_degrees = std::pair{std::min(*da, *db), std::max(*da, *db)};
        cls.bipartition = std::pair{std::move(left), std::move(right)};
    }
    return cls;
}

}  // namespace intcol
