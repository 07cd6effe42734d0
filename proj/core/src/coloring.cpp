#include "intcol/coloring.hpp"

#include <algorithm>

#include "intcol/error.hpp"

namespace intcol {

EdgeColoring::EdgeColoring(int palette, std::vector<Color> colors) : palette_(palette), colors_(std::move(colors)) {
    if (palette_ < 1) throw DomainError("palette size must be positive, got " + std::to_string(palette_));
    for (std::size_t e = 0; e < colors_.size(); ++e) {
        if (colors_[e] < 1 || colors_[e] > palette_)
            throw DomainError("color " + std::to_string(colors_[e]) + " on edge " + std::to_string(e) +
                              " outside [1, " + std::to_string(palette_) + "]");
    }
}

namespace {

void require_sized(const Graph& g, const EdgeColoring& c) {
    if (c.size() != g.size())
        throw DomainError("coloring has " + std::to_string(c.size()) + " colors for a graph with " +
                          std::to_string(g.size()) + " edges");
}

}  // namespace

std::vector<Color> incident_colors(const Graph& g, const EdgeColoring& c, Vertex v) {
    require_sized(g, c);
    std::vector<Color> out;
    for (EdgeIndex e : g.incident_edges(v)) out.push_back(c[e]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Color> spectrum(const Graph& g, const EdgeColoring& c, Vertex v) {
    auto out = incident_colors(g, c, v);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SpectrumReport spectrum_report(const Graph& g, const EdgeColoring& c) {
    require_sized(g, c);
    SpectrumReport r;
    r.vertices.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSpectrum s;
        s.colors = spectrum(g, c, v);
        if (!s.colors.empty()) {
            s.min = s.colors.front();
            s.max = s.colors.back();
        }
        r.vertices.push_back(std::move(s));
    }
    r.used.assign(c.colors().begin(), c.colors().end());
    std::sort(r.used.begin(), r.used.end());
    r.used.erase(std::unique(r.used.begin(), r.used.end()), r.used.end());
    return r;
}

std::string_view to_string(FailureKind kind) noexcept {
    switch (kind) {
        case FailureKind::RepeatedColor: return "repeated_color";
        case FailureKind::NotInterval: return "not_interval";
        case FailureKind::UnusedColor: return "unused_color";
    }
    return "unknown";
}

ValidationReport validate_interval(const Graph& g, const EdgeColoring& c) {
    require_sized(g, c);
    ValidationReport r;

    for (Vertex v = 0; v < g.order(); ++v) {
        const auto raw = incident_colors(g, c, v);
        if (raw.empty()) continue;

        for (std::size_t k = 1; k < raw.size(); ++k) {
            if (raw[k] == raw[k - 1] && (k < 2 || raw[k - 2] != raw[k])) {
                r.proper = false;
                r.failures.push_back({FailureKind::RepeatedColor, v,
                                      "color " + std::to_string(raw[k]) + " repeated at vertex " + std::to_string(v)});
            }
        }

        auto distinct = raw;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        const auto deg = raw.size();
        const auto span = static_cast<std::size_t>(distinct.back() - distinct.front() + 1);
        if (distinct.size() != deg || span != deg) {
            r.interval_at_every_vertex = false;
            r.failures.push_back({FailureKind::NotInterval, v,
                                  "vertex " + std::to_string(v) + " of degree " + std::to_string(deg) + " sees " +
                                      std::to_string(distinct.size()) + " distinct colors spanning [" +
                                      std::to_string(distinct.front()) + ", " + std::to_string(distinct.back()) + "]"});
        }
    }

    std::vector<char> used(static_cast<std::size_t>(c.palette()) + 1, 0);
    for (Color col : c.colors()) used[static_cast<std::size_t>(col)] = 1;
    for (Color col = 1; col <= c.palette(); ++col) {
        if (!used[static_cast<std::size_t>(col)]) {
            r.surjective = false;
            r.failures.push_back({FailureKind::UnusedColor, col, "color " + std::to_string(col) + " is unused"});
        }
    }

    r.verdict = r.proper && r.interval_at_every_vertex && r.surjective;
    return r;
}

}  // namespace intcol
