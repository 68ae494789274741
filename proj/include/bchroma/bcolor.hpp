#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bchroma/graph.hpp"

namespace bchroma {

/// Total assignment of colors 1..k to vertices 1..n (colors[i-1] is the
/// color of vertex i).
struct Coloring {
    int k = 0;
    std::vector<int> colors;

    bool operator==(const Coloring&) const = default;
};

/// True iff no edge is monochromatic. Throws on a size mismatch or a color
/// outside 1..k.
bool is_proper(const Graph& g, const Coloring& c);

/// For each color, the vertices of that color whose neighborhoods contain
/// every other color. Requires a proper coloring that uses all k colors.
/// With k == 1 every vertex qualifies (there is nothing to see).
std::map<int, std::vector<VertexId>> b_vertices(const Graph& g, const Coloring& c);

/// Proper, all k classes nonempty, and every class has a b-vertex.
bool is_b_coloring(const Graph& g, const Coloring& c, int k);

/// Relaxed variant: proper, all k classes nonempty, and every pair of
/// distinct classes is joined by at least one edge.
bool is_linked_coloring(const Graph& g, const Coloring& c, int k);

/// Largest k such that at least k vertices have degree >= k-1. Any
/// k-b-coloring needs k vertices of that degree, so phi <= m_bound <= Delta+1.
int m_bound(const Graph& g);

struct SearchLimits {
    long long node_budget = 50'000'000;  // per feasible_k call
};

enum class SearchStatus { kFound, kInfeasible, kTimeout };

struct FeasibleResult {
    SearchStatus status = SearchStatus::kInfeasible;
    std::optional<Coloring> coloring;  // set iff status == kFound
    long long nodes = 0;
};

/// Complete search for a k-b-coloring. Enumerates candidate systems of k
/// designated b-vertices (ascending subsets of the degree->=k-1 vertices,
/// colored 1..k in index order) and extends each by backtracking over the
/// remaining vertices, vertices ascending and colors ascending, so the first
/// witness found is the same on every run. Budget exhaustion reports kTimeout,
/// never infeasibility.
FeasibleResult feasible_k(const Graph& g, int k, const SearchLimits& limits = {});

/// Same complete search under the relaxed pairwise-linkage condition.
FeasibleResult feasible_k_linked(const Graph& g, int k, const SearchLimits& limits = {});

struct PhiResult {
    int phi = 0;
    Coloring witness;
    std::map<int, VertexId> b_vertex_of;  // lowest-indexed b-vertex per color
};

struct PhiOutcome {
    SearchStatus status = SearchStatus::kFound;  // kTimeout when any k is undecided
    std::optional<PhiResult> best;               // highest feasible k found
    std::vector<int> undecided;                  // k values whose search timed out
};

/// Exact b-chromatic number: tries k = m_bound(g) down to 1 and returns the
/// first feasible k. With timeouts present the true value may lie in
/// `undecided`, and `best` is only a lower bound.
PhiOutcome phi(const Graph& g, const SearchLimits& limits = {});

/// phi under the relaxed pairwise-linkage definition, iterating k from
/// min(n, largest k with k(k-1)/2 <= |E|) downward.
PhiOutcome phi_linked(const Graph& g, const SearchLimits& limits = {});

/// Independent oracle: for k = n down to 1, enumerate every assignment
/// V -> {1..k} (pruning only color clashes along the way) and test the
/// b-coloring condition at the leaves. Hard-capped at n <= 9.
int phi_oracle(const Graph& g);

/// Oracle under the relaxed pairwise-linkage condition.
int phi_oracle_linked(const Graph& g);

struct SpectrumResult {
    std::vector<int> feasible;   // k with a k-b-coloring, ascending
    std::vector<int> undecided;  // k whose search timed out
};

/// Feasibility of every k in 1..m_bound(g).
SpectrumResult b_spectrum(const Graph& g, const SearchLimits& limits = {});

}  // namespace bchroma
