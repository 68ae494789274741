#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "bchroma/graph.hpp"

namespace bchroma {

/// Raised on malformed edge-list text. line() is the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Edge-list text format:
///   header "n m", then m lines "u v" with 1 <= u < v <= n.
/// Emission orders edges lexicographically, so parse(emit(g)) == g and the
/// output of any two runs is byte-identical.
Graph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Graph& g);

/// Arc-list sidecar for directed constructions: header "n m", then m lines
/// "tail head" in lexicographic order.
std::string emit_arclist(const Digraph& d);

}  // namespace bchroma
