#include "intcol/survey.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <ostream>
#include <thread>

#include "intcol/doubling.hpp"
#include "intcol/error.hpp"

namespace intcol {

namespace {

SurveyRecord survey_one(const Graph& g, const SurveyOptions& opts) {
    SurveyRecord rec;
    rec.n = g.order();
    rec.m = g.size();
    rec.delta = g.max_degree();
    try {
        rec.graph6 = write_graph6(g);
    } catch (const UnsupportedSize&) {
        rec.message = "order outside graph6 range";
    }
    rec.cls = classify(g);
    if (!rec.cls->connected || g.size() == 0) {
        rec.outcome = SurveyOutcome::Skipped;
        rec.message = rec.cls->connected ? "no edges" : "disconnected";
        return rec;
    }

    try {
        const auto claims = applicable_bounds(g, *rec.cls, false);
        rec.best_bound = best_upper_bound(g, *rec.cls, false);

        auto solved = compute_W(g, opts.limits);
        if (solved.status == SolveStatus::Aborted) {
            rec.outcome = SurveyOutcome::Aborted;
            return rec;
        }
        if (solved.status == SolveStatus::Infeasible) {
            rec.outcome = SurveyOutcome::NotColorable;
            return rec;
        }

        rec.outcome = SurveyOutcome::Computed;
        rec.W = solved.W;
        const auto report = audit(g, *rec.W, claims);
        rec.tight_theorems = report.tight;
        if (!report.violations.empty() || *rec.W < rec.delta || *rec.slack() < 0) {
            rec.defect = true;
            rec.message = "W = " + std::to_string(*rec.W) + " contradicts a bound";
        }

        if (opts.with_doubling) {
            try {
                const auto cert = double_with_certificate(g, *solved.witness);
                rec.doubling_ok = cert.validation.verdict && cert.final_coloring.palette() == *rec.W + 2;
            } catch (const InvariantViolation& e) {
                rec.doubling_ok = false;
                rec.message = e.what();
            }
            if (!*rec.doubling_ok) rec.defect = true;
        }
    } catch (const InvariantViolation& e) {
        rec.outcome = SurveyOutcome::Error;
        rec.defect = true;
        rec.message = e.what();
    } catch (const std::exception& e) {
        rec.outcome = SurveyOutcome::Error;
        rec.message = e.what();
    }
    return rec;
}

std::vector<SurveyRecord> run_indexed(std::size_t count, unsigned jobs,
                                      const std::function<SurveyRecord(std::size_t)>& work) {
    std::vector<SurveyRecord> out(count);
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = work(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) out[i] = work(i);
            });
        }
    }
    return out;
}

std::string quoted(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string flag(bool b) { return b ? "true" : "false"; }

template <class T>
std::string field(const std::optional<T>& v) {
    return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::vector<SurveyRecord> run_survey(std::span<const Graph> graphs, const SurveyOptions& opts) {
    return run_indexed(graphs.size(), opts.jobs, [&](std::size_t i) { return survey_one(graphs[i], opts); });
}

std::vector<SurveyRecord> run_survey_graph6(std::span<const std::string> lines, const SurveyOptions& opts) {
    return run_indexed(lines.size(), opts.jobs, [&](std::size_t i) {
        try {
            return survey_one(parse_graph6(lines[i]), opts);
        } catch (const Error& e) {
            SurveyRecord rec;
            rec.graph6 = lines[i];
            rec.outcome = SurveyOutcome::Error;
            rec.message = e.what();
            return rec;
        }
    });
}

std::string survey_csv_header() {
    return "graph6,n,m,delta,connected,bipartite,regular_r,triangle_free,W,best_bound,slack,tight_theorems,doubling_ok";
}

std::string survey_csv_row(const SurveyRecord& r) {
    std::string row = quoted(r.graph6);
    auto push = [&row](const std::string& s) {
        row += ',';
        row += s;
    };
    if (!r.cls) {
        // Unparsed input: only the raw text survives.
        for (int k = 0; k < 12; ++k) push("");
        return row;
    }
    push(std::to_string(r.n));
    push(std::to_string(r.m));
    push(std::to_string(r.delta));
    push(flag(r.cls->connected));
    push(flag(r.cls->bipartite()));
    push(field(r.cls->regular_degree));
    push(flag(r.cls->triangle_free));
    switch (r.outcome) {
        case SurveyOutcome::Computed: push(std::to_string(*r.W)); break;
        case SurveyOutcome::NotColorable: push("not-colorable"); break;
        case SurveyOutcome::Aborted: push("aborted"); break;
        case SurveyOutcome::Skipped:
        case SurveyOutcome::Error: push(""); break;
    }
    push(field(r.best_bound));
    push(field(r.slack()));
    std::string tight;
    for (auto t : r.tight_theorems) {
        if (!tight.empty()) tight += ';';
        tight += theorem_id(t);
    }
    push(tight);
    push(r.doubling_ok ? flag(*r.doubling_ok) : std::string());
    return row;
}

void write_survey_csv(std::ostream& out, std::span<const SurveyRecord> records) {
    out << survey_csv_header() << '\n';
    for (const auto& r : records) out << survey_csv_row(r) << '\n';
}

}  // namespace intcol
