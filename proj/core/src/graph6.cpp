#include <string>

#include "intcol/error.hpp"
#include "intcol/graph.hpp"

namespace intcol {

namespace {

constexpr int kBias = 63;
constexpr int kMaxChar = 126;

std::size_t bit_count(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2; }

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("graph6: empty input", ParseError::Unit::Byte, 0);

    const int head = static_cast<unsigned char>(text[0]);
    if (head == kMaxChar)
        throw ParseError("graph6: long form (n > 62) is not supported", ParseError::Unit::Byte, 0);
    if (head < kBias || head > kMaxChar)
        throw ParseError("graph6: byte 0 outside 63..126", ParseError::Unit::Byte, 0);
    const int n = head - kBias;
    if (n < 1) throw ParseError("graph6: graph must have at least one vertex", ParseError::Unit::Byte, 0);

    const std::size_t bits = bit_count(n);
    const std::size_t expected = 1 + (bits + 5) / 6;

    const std::size_t scan = std::min(expected, text.size());
    for (std::size_t i = 1; i < scan; ++i) {
        const int c = static_cast<unsigned char>(text[i]);
        if (c < kBias || c > kMaxChar)
            throw ParseError("graph6: byte " + std::to_string(i) + " outside 63..126", ParseError::Unit::Byte, i);
    }
    if (text.size() < expected)
        throw ParseError("graph6: truncated, expected " + std::to_string(expected) + " bytes",
                         ParseError::Unit::Byte, text.size());
    if (text.size() > expected)
        throw ParseError("graph6: trailing bytes after offset " + std::to_string(expected - 1),
                         ParseError::Unit::Byte, expected);

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int group = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
            if (group & (0x20 >> (k % 6))) edges.push_back({i, j});
        }
    }
    for (; k % 6 != 0; ++k) {
        const int group = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
        if (group & (0x20 >> (k % 6)))
            throw ParseError("graph6: nonzero padding bits", ParseError::Unit::Byte, 1 + k / 6);
    }
    return Graph(n, std::move(edges));
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n < 1 || n > kGraph6MaxOrder)
        throw UnsupportedSize("graph6: order " + std::to_string(n) + " outside 1..62");

    const std::size_t bits = bit_count(n);
    std::string groups((bits + 5) / 6, '\0');
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (g.has_edge(i, j)) groups[k / 6] = static_cast<char>(groups[k / 6] | (0x20 >> (k % 6)));
        }
    }
    std::string out;
    out.reserve(1 + groups.size());
    out.push_back(static_cast<char>(n + kBias));
    for (char c : groups) out.push_back(static_cast<char>(c + kBias));
    return out;
}

}  // namespace intcol
