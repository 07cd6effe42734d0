#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "intcol/bounds.hpp"
#include "intcol/graph.hpp"
#include "intcol/solver.hpp"

namespace intcol {

struct SurveyOptions {
    SearchLimits limits;
    bool with_doubling = false;
    /// Worker threads; records are always emitted in input order.
    unsigned jobs = 1;
};

enum class SurveyOutcome {
    Computed,      ///< W found
    NotColorable,  ///< every palette refuted
    Aborted,       ///< node limit hit
    Skipped,       ///< disconnected or edgeless
    Error,         ///< unparseable input or a captured exception
};

struct SurveyRecord {
    std::string graph6;
    SurveyOutcome outcome = SurveyOutcome::Error;
    int n = 0;
    std::size_t m = 0;
    int delta = 0;
    std::optional<GraphClass> cls;
    std::optional<int> W;
    std::optional<int> best_bound;
    std::vector<BoundTheorem> tight_theorems;
    std::optional<bool> doubling_ok;
    /// A theorem-backed check failed (negative slack, bound violation,
    /// invalid certificate). Never set in a correct build.
    bool defect = false;
    std::string message;

    std::optional<int> slack() const {
        if (outcome != SurveyOutcome::Computed || !best_bound || !W) return std::nullopt;
        return *best_bound - *W;
    }
};

std::vector<SurveyRecord> run_survey(std::span<const Graph> graphs, const SurveyOptions& opts);

/// Parses each line as graph6 first; unparseable lines become Error records.
std::vector<SurveyRecord> run_survey_graph6(std::span<const std::string> lines, const SurveyOptions& opts);

/// graph6,n,m,delta,connected,bipartite,regular_r,triangle_free,W,best_bound,slack,tight_theorems,doubling_ok
std::string survey_csv_header();
std::string survey_csv_row(const SurveyRecord& r);
void write_survey_csv(std::ostream& out, std::span<const SurveyRecord> records);

}  // namespace intcol
