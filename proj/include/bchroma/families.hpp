#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bchroma/graph.hpp"

namespace bchroma {

// ---------------------------------------------------------------------------
// Classic families. Labeling conventions are fixed so generated instances are
// reproducible: hub/core vertices come first, pendant vertices last.
// ---------------------------------------------------------------------------

Graph path(int n);                         // 1-2-...-n, n >= 1
Graph cycle(int n);                        // n >= 3
Graph complete(int n);                     // n >= 1
Graph complete_bipartite(int m, int n);    // sides 1..m and m+1..m+n
Graph edgeless(int n);                     // n >= 1
Graph wheel(int rim);                      // hub 1, rim cycle 2..rim+1, rim >= 3
Graph sunlet(int n);                       // cycle 1..n, pendant n+i attached to i
Graph sun(int n);                          // K_n core 1..n, outer path n+1..2n,
                                           // spokes {i, n+i}, closing edge {2n, 1}
Graph helm(int rim);                       // wheel(rim) plus pendant per rim vertex

/// String-keyed dispatcher used by the command line:
/// path, cycle, complete, complete_bipartite, edgeless, wheel, sunlet, sun, helm.
Graph classic(const std::string& kind, const std::vector<int>& params);

// ---------------------------------------------------------------------------
// Directed constructions.
// ---------------------------------------------------------------------------

/// Parameters of the linear reach function f(x) = m*x + c.
struct JacoParams {
    int n = 1;  // vertex count, >= 1
    int m = 1;  // slope, >= 1
    int c = 0;  // intercept, >= 0
};

/// Builds the digraph by an ascending sweep: when vertex i is processed its
/// in-degree d is already fixed by arcs from lower indices, and i emits arcs
/// to every j with i < j <= min(n, f(i) + i - d). All arcs ascend.
Digraph jaco(const JacoParams& p);

struct JacoStructure {
    std::vector<VertexId> jaconian_set;  // vertices of maximum underlying degree
    VertexId prime = 0;                  // lowest-indexed member
    std::optional<Graph> hope;           // induced on {prime+1..n}; absent iff prime == n
};

/// Needs n >= 2. hope is flagged absent when the prime vertex is v_n.
JacoStructure jaco_structure(const Digraph& d);

/// Ordered tuple of non-negative reach values. Entries at odd positions give
/// forward reach, entries at even positions give backward reach.
struct OrnatedString {
    std::vector<int> entries;

    int max_entry() const;
    bool all_zero() const;
};

Digraph ornated(int n, const OrnatedString& s);

/// underlying(ornated(n, (a))) for a = max entry of s; the a-th power of P_n.
Graph maximal_reach(int n, const OrnatedString& s);

// ---------------------------------------------------------------------------
// Composite constructions.
// ---------------------------------------------------------------------------

/// Strictly decreasing column sizes, last term > 1, at least two terms.
struct RastaSpec {
    std::vector<int> terms;
};

/// Columns of the given sizes joined by complete bipartite graphs between
/// consecutive columns only. Vertices are labeled column by column.
Graph rasta(const RastaSpec& spec);

/// One vertex per nonempty subset of {1..n}, enumerated by (size, lex);
/// vertices adjacent iff the subsets intersect. Capped at n <= 5.
Graph set_graph(int n);

/// Subsets of {1..n} in (size, lex) order; subset_at(n, i) is the set behind
/// vertex i of set_graph(n).
std::vector<std::vector<int>> subsets_by_size_lex(int n);

/// One vertex per nonempty subset of E(G), enumerated by (size, lex) over the
/// lexicographic edge order. Two distinct subsets are adjacent iff they
/// contain distinct edges sharing an endpoint; with shared_edge_adjacent set,
/// having any common edge also counts. Capped at |E(G)| <= 5.
Graph edge_set_graph(const Graph& g, bool shared_edge_adjacent = false);

struct ChithraSpec {
    Graph base;
    std::vector<std::vector<VertexId>> subsets;  // W_1..W_k, subsets of V(base)
};

/// Base graph plus new vertices u_1..u_k labeled n+1..n+k, u_i joined to
/// exactly W_i. Every W_i must be nonempty; with require_cover (the default)
/// the union of the W_i must equal V(base).
Graph chithra(const ChithraSpec& spec, bool require_cover = true);

struct ChithraDecomposition {
    Graph base;                                  // G - U, relabeled ascending
    std::vector<std::vector<VertexId>> subsets;  // W_i = N(u_i) in base labels
};

/// Succeeds iff U is independent and every vertex outside U has a neighbor in
/// U. chithra(result) rebuilds G under the canonical relabeling (base keeps
/// ascending order, u_i maps to the i-th smallest member of U).
std::optional<ChithraDecomposition> chithra_decomposition(const Graph& g,
                                                          const std::vector<VertexId>& u_set);

/// Disjoint union with H's labels shifted by |V(G)|, plus the single bridge
/// {v, u + |V(G)|}.
Graph edge_joint(const Graph& g, VertexId v, const Graph& h, VertexId u);

/// K_{1,m} detector (every edge shares one common endpoint); K_2 counts.
bool is_star(const Graph& g);

/// P_n detector under isomorphism: connected, two endpoints, interior degree 2.
bool is_path_graph(const Graph& g);

}  // namespace bchroma
