#include <charconv>
#include <string>
#include <vector>

#include "intcol/error.hpp"
#include "intcol/graph.hpp"

namespace intcol {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int to_int(std::string_view tok, std::size_t line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("edge list line " + std::to_string(line_no) + ": not an integer: '" + std::string(tok) + "'",
                         ParseError::Unit::Line, line_no);
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<int> n;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        const auto toks = tokens(line);
        if (toks.empty()) continue;
        auto fail = [&](const std::string& why) {
            throw ParseError("edge list line " + std::to_string(line_no) + ": " + why, ParseError::Unit::Line, line_no);
        };
        if (!n) {
            if (toks.size() != 1) fail("expected the vertex count alone");
            n = to_int(toks[0], line_no);
            if (*n < 1) fail("vertex count must be positive");
            continue;
        }
        if (toks.size() != 2) fail("expected two vertex indices");
        const int a = to_int(toks[0], line_no);
        const int b = to_int(toks[1], line_no);
        if (a < 0 || b < 0 || a >= *n || b >= *n) fail("vertex index out of range");
        if (a == b) fail("loop at vertex " + std::to_string(a));
        edges.push_back({a, b});
    }
    if (!n) throw ParseError("edge list: missing vertex count", ParseError::Unit::Line, 1);
    return Graph(*n, std::move(edges));
}

}  // namespace intcol
