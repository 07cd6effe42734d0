#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "intcol/bounds.hpp"
#include "intcol/catalog.hpp"
#include "intcol/coloring.hpp"
#include "intcol/doubling.hpp"
#include "intcol/error.hpp"
#include "intcol/serialize.hpp"
#include "intcol/solver.hpp"
#include "intcol/survey.hpp"

namespace intcol::cli {

namespace {

struct GraphSource {
    std::string path;
    std::string format = "g6";
};

std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto a = s.find_first_not_of(ws);
    if (a == std::string_view::npos) return {};
    const auto b = s.find_last_not_of(ws);
    return s.substr(a, b - a + 1);
}

std::vector<std::string> nonblank_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream ss(text);
    for (std::string line; std::getline(ss, line);) {
        const auto t = trim(line);
        if (!t.empty()) lines.emplace_back(t);
    }
    return lines;
}

Graph load_graph(const GraphSource& src, std::istream& in) {
    const auto text = slurp(src.path, in);
    if (src.format == "edges") return parse_edge_list(text);
    const auto lines = nonblank_lines(text);
    if (lines.empty()) throw ParseError("graph6: empty input", ParseError::Unit::Byte, 0);
    if (lines.size() > 1) throw ParseError(src.path + ": expected a single graph6 line");
    return parse_graph6(lines.front());
}

void add_graph_options(CLI::App* cmd, GraphSource& src) {
    cmd->add_option("--graph", src.path, "Graph file ('-' for stdin)")->required();
    cmd->add_option("--format", src.format, "Graph file format")->check(CLI::IsMember({"g6", "edges"}));
}

SearchLimits limits_from(std::uint64_t node_limit) {
    SearchLimits l;
    l.node_limit = node_limit;
    return l;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Interval edge-coloring toolkit"};
    app.require_subcommand(1);

    GraphSource graph;
    std::string coloring_path;
    std::optional<int> t;
    std::uint64_t node_limit = 0;
    bool all_palettes = false;
    bool planar = false;
    bool audit_W = false;
    std::optional<int> gen_n;
    std::string input_path;
    std::string out_path;
    bool with_doubling = false;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    auto* validate = app.add_subcommand("validate", "Check an interval coloring");
    add_graph_options(validate, graph);
    validate->add_option("--coloring", coloring_path, "Coloring JSON file")->required();

    auto* solve = app.add_subcommand("solve", "Decide one palette or compute W(G)");
    add_graph_options(solve, graph);
    solve->add_option("--t", t, "Decide this palette size only");
    solve->add_option("--node-limit", node_limit, "Backtracking node budget (0 = unlimited)");
    solve->add_flag("--all-palettes", all_palettes, "Decide every palette up to the cutoff");

    auto* dbl = app.add_subcommand("double", "Build the doubled graph and its certified coloring");
    add_graph_options(dbl, graph);
    dbl->add_option("--coloring", coloring_path, "Interval coloring of the input graph")->required();

    auto* bounds = app.add_subcommand("bounds", "List the applicable upper bounds on W(G)");
    add_graph_options(bounds, graph);
    bounds->add_flag("--planar", planar, "Assert that the graph is planar");
    bounds->add_flag("--audit", audit_W, "Compute W(G) and check it against every bound");
    bounds->add_option("--node-limit", node_limit, "Node budget for --audit");

    auto* survey = app.add_subcommand("survey", "Solve, audit and double a batch of graphs into CSV");
    auto* gen_opt = survey->add_option("--gen-n", gen_n, "Generate all connected graphs on n vertices (n <= 7)");
    survey->add_option("--input", input_path, "graph6 file, one graph per line ('-' for stdin)")->excludes(gen_opt);
    survey->add_flag("--with-doubling", with_doubling, "Certify the doubling construction for every W witness");
    survey->add_option("--out", out_path, "CSV destination (default stdout)");
    survey->add_option("--node-limit", node_limit, "Node budget per graph");
    survey->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (validate->parsed()) {
            const auto g = load_graph(graph, in);
            const auto c = coloring_from_json(g, slurp(coloring_path, in));
            const auto report = validate_interval(g, c);
            out << validation_to_json(report) << '\n';
            return report.verdict ? kOk : kNegative;
        }
        if (solve->parsed()) {
            const auto g = load_graph(graph, in);
            const auto limits = limits_from(node_limit);
            SolveOutcome s;
            if (t) s = find_interval_coloring(g, *t, limits);
            else if (all_palettes) s = compute_feasible_palettes(g, limits);
            else s = compute_W(g, limits);
            out << solve_outcome_to_json(g, s) << '\n';
            return s.status == SolveStatus::Found ? kOk : kNegative;
        }
        if (dbl->parsed()) {
            const auto g = load_graph(graph, in);
            const auto alpha = coloring_from_json(g, slurp(coloring_path, in));
            out << certificate_to_json(double_with_certificate(g, alpha)) << '\n';
            return kOk;
        }
        if (bounds->parsed()) {
            const auto g = load_graph(graph, in);
            const auto cls = classify(g);
            const auto claims = applicable_bounds(g, cls, planar);
            if (!audit_W) {
                out << bound_report_to_json(bound_report(g, claims)) << '\n';
                return kOk;
            }
            const auto s = compute_W(g, limits_from(node_limit));
            if (s.status != SolveStatus::Found) {
                out << bound_report_to_json(bound_report(g, claims)) << '\n';
                err << "audit: W(G) not available (" << to_string(s.status) << ")\n";
                return kNegative;
            }
            const auto report = audit(g, *s.W, claims);
            out << bound_report_to_json(report) << '\n';
            return report.violations.empty() ? kOk : kInternal;
        }
        if (survey->parsed()) {
            SurveyOptions opts;
            opts.limits = limits_from(node_limit);
            opts.with_doubling = with_doubling;
            opts.jobs = jobs;

            std::vector<SurveyRecord> records;
            if (gen_n) {
                const auto graphs = generate_connected_catalog(*gen_n);
                records = run_survey(graphs, opts);
            } else {
                const auto lines = nonblank_lines(slurp(input_path.empty() ? "-" : input_path, in));
                records = run_survey_graph6(lines, opts);
            }

            bool defect = false;
            for (std::size_t i = 0; i < records.size(); ++i) {
                const auto& r = records[i];
                if (r.defect) {
                    defect = true;
                    err << "DEFECT record " << i << " (" << r.graph6 << "): " << r.message << '\n';
                } else if (r.outcome == SurveyOutcome::Error) {
                    err << "warning: record " << i << " (" << r.graph6 << "): " << r.message << '\n';
                }
            }
            if (out_path.empty()) {
                write_survey_csv(out, records);
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw ParseError("cannot write " + out_path);
                write_survey_csv(f, records);
            }
            return defect ? kInternal : kOk;
        }
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return kInternal;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace intcol::cli
