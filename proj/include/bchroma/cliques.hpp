#pragma once

#include <vector>

#include "bchroma/graph.hpp"

namespace bchroma {

struct CliqueCount {
    int size = 0;        // maximum clique size
    long long count = 0; // number of distinct maximum cliques
};

/// Maximum clique size and multiplicity by full enumeration of maximal
/// cliques (Bron-Kerbosch with pivoting). Capped at 31 vertices.
CliqueCount count_max_cliques(const Graph& g);

/// All maximal independent sets, each sorted ascending, ordered by
/// (size, lexicographic). Maximal cliques of the complement graph.
std::vector<std::vector<VertexId>> maximal_independent_sets(const Graph& g);

}  // namespace bchroma
