#pragma once

#include <string>
#include <string_view>

#include "intcol/bounds.hpp"
#include "intcol/coloring.hpp"
#include "intcol/doubling.hpp"
#include "intcol/solver.hpp"

namespace intcol {

// JSON documents exchanged by the command-line tool. All writers emit
// two-space indented JSON with a stable key order.

/// {"t": T, "edges": [{"u": i, "v": j, "color": c}, ...]} in canonical edge order.
std::string coloring_to_json(const Graph& g, const EdgeColoring& c);

/// Accepts edges in any order; every edge of g must appear exactly once.
/// Throws ParseError on malformed documents or edges foreign to g.
EdgeColoring coloring_from_json(const Graph& g, std::string_view text);

std::string validation_to_json(const ValidationReport& r);
std::string solve_outcome_to_json(const Graph& g, const SolveOutcome& s);
std::string bound_report_to_json(const BoundReport& r);

/// Self-contained: G and H as graph6 (H as null beyond 62 vertices, its
/// edges still listed inside beta/final), alpha, both vertex maps, edge
/// provenance, beta, chosen_i0, final coloring and its validation.
std::string certificate_to_json(const DoublingCertificate& cert);

}  // namespace intcol
