#pragma once

#include <span>
#include <string>
#include <vector>

#include "intcol/graph.hpp"

namespace intcol {

using Color = int;

/// A color in [1, t] for every edge, indexed like Graph::edges().
class EdgeColoring {
public:
    /// Throws DomainError if t < 1 or some color lies outside [1, t].
    EdgeColoring(int palette, std::vector<Color> colors);

    int palette() const noexcept { return palette_; }
    std::span<const Color> colors() const noexcept { return colors_; }
    std::size_t size() const noexcept { return colors_.size(); }
    Color operator[](EdgeIndex e) const { return colors_.at(e); }

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    int palette_;
    std::vector<Color> colors_;
};

/// Colors on the edges at v, sorted, duplicates kept.
std::vector<Color> incident_colors(const Graph& g, const EdgeColoring& c, Vertex v);

/// S(v): sorted, duplicate-free colors on the edges at v.
std::vector<Color> spectrum(const Graph& g, const EdgeColoring& c, Vertex v);

struct VertexSpectrum {
    std::vector<Color> colors;  ///< distinct, ascending
    Color min = 0;              ///< 0 for isolated vertices
    Color max = 0;
};

struct SpectrumReport {
    std::vector<VertexSpectrum> vertices;
    std::vector<Color> used;  ///< distinct colors over all edges, ascending
};

SpectrumReport spectrum_report(const Graph& g, const EdgeColoring& c);

enum class FailureKind {
    RepeatedColor,  ///< two edges at a vertex share a color (index = vertex)
    NotInterval,    ///< spectrum at a vertex is not `degree` consecutive colors (index = vertex)
    UnusedColor,    ///< some color of 1..t appears on no edge (index = color)
};

struct ValidationFailure {
    FailureKind kind;
    int index;
    std::string detail;
};

struct ValidationReport {
    bool proper = true;
    bool interval_at_every_vertex = true;
    bool surjective = true;
    bool verdict = true;
    std::vector<ValidationFailure> failures;
};

std::string_view to_string(FailureKind kind) noexcept;

/// Checks the three defining conditions of an interval t-coloring and
/// collects every defect. Degree-0 vertices impose nothing. Throws
/// DomainError only when the coloring is not sized for g.
ValidationReport validate_interval(const Graph& g, const EdgeColoring& c);

}  // namespace intcol
