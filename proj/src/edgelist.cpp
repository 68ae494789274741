#include "bchroma/edgelist.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <vector>

namespace bchroma {

namespace {

struct Line {
    int number = 0;
    std::string text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 1;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) {
                lines.push_back({number, std::string(text.substr(start))});
            }
            break;
        }
        lines.push_back({number, std::string(text.substr(start, end - start))});
        ++number;
        start = end + 1;
    }
    return lines;
}

std::pair<int, int> parse_int_pair(const Line& line, const char* what) {
    std::istringstream in(line.text);
    long long a = 0;
    long long b = 0;
    if (!(in >> a >> b)) {
        throw ParseError(line.number, std::string("expected two integers for ") + what +
                                          ", got \"" + line.text + "\"");
    }
    std::string rest;
    if (in >> rest) {
        throw ParseError(line.number, "trailing token \"" + rest + "\"");
    }
    if (a < -1000000000LL || a > 1000000000LL || b < -1000000000LL || b > 1000000000LL) {
        throw ParseError(line.number, "integer out of supported range");
    }
    return {static_cast<int>(a), static_cast<int>(b)};
}

}  // namespace

Graph parse_edgelist(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty()) {
        throw ParseError(1, "missing header line \"n m\"");
    }
    auto [n, m] = parse_int_pair(lines[0], "header");
    if (n < 1) {
        throw ParseError(lines[0].number, "vertex count must be >= 1, got " + std::to_string(n));
    }
    if (m < 0) {
        throw ParseError(lines[0].number, "edge count must be >= 0, got " + std::to_string(m));
    }
    if (static_cast<int>(lines.size()) - 1 < m) {
        throw ParseError(lines.back().number,
                         "header promises " + std::to_string(m) + " edges but only " +
                             std::to_string(lines.size() - 1) + " edge lines follow");
    }
    if (static_cast<int>(lines.size()) - 1 > m) {
        throw ParseError(lines[static_cast<size_t>(m) + 1].number,
                         "unexpected extra line after " + std::to_string(m) + " edges");
    }
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (int i = 1; i <= m; ++i) {
        const Line& line = lines[static_cast<size_t>(i)];
        auto [u, v] = parse_int_pair(line, "edge");
        if (u < 1 || u > n || v < 1 || v > n) {
            throw ParseError(line.number, "endpoint out of range 1.." + std::to_string(n));
        }
        if (u >= v) {
            throw ParseError(line.number, "edges must satisfy u < v, got " + std::to_string(u) +
                                              " " + std::to_string(v));
        }
        if (!seen.insert({u, v}).second) {
            throw ParseError(line.number, "duplicate edge " + std::to_string(u) + " " +
                                              std::to_string(v));
        }
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

std::string emit_arclist(const Digraph& d) {
    std::ostringstream out;
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const auto& [tail, head] : d.arcs()) {
        out << tail << ' ' << head << '\n';
    }
    return out.str();
}

}  // namespace bchroma
