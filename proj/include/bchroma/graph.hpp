#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bchroma {

/// Vertex indices are 1-based everywhere: vertex i of an n-vertex graph
/// satisfies 1 <= i <= n. The edge-list file format uses the same indexing.
using VertexId = int;

using Edge = std::pair<VertexId, VertexId>;
using Arc = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph. Adjacency lists are kept sorted, no
/// self-loops, no duplicate edges; symmetry holds by construction.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Edges may appear in any order and
    /// orientation; duplicates collapse. Throws std::invalid_argument on an
    /// out-of-range endpoint or a self-loop, or when n < 1.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool adjacent(VertexId u, VertexId v) const;
    const std::vector<VertexId>& neighbors(VertexId v) const;
    int degree(VertexId v) const;

    /// Degree of each vertex in index order; max element is Delta(G).
    std::vector<int> degree_profile() const;
    int max_degree() const;

    /// True iff every distinct pair of vertices is adjacent (K_1 counts).
    bool is_complete() const;

    /// Subgraph induced by the given vertex set, relabeled 1..|S| in
    /// ascending order of the original indices. S must be nonempty, within
    /// range and free of duplicates.
    Graph induced(const std::vector<VertexId>& vertices) const;

    /// All edges as (u, v) pairs with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    void require_vertex(VertexId v) const;

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<VertexId>> adj_;
};

/// Immutable simple directed graph. Parallel arcs collapse on construction;
/// self-arcs are rejected. Antiparallel pairs (u,v) and (v,u) may coexist.
class Digraph {
public:
    Digraph() = default;

    static Digraph from_arcs(int n, const std::vector<Arc>& arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    /// Arcs as (tail, head) pairs in lexicographic order.
    const std::vector<Arc>& arcs() const { return arcs_; }

    int in_degree(VertexId v) const;
    int out_degree(VertexId v) const;

    bool operator==(const Digraph& other) const = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

/// Underlying simple graph: edge {u,v} iff (u,v) or (v,u) is an arc.
Graph underlying(const Digraph& d);

/// Canonical text key for a graph, usable as a cache key ("n|u-v,u-v,...").
std::string graph_key(const Graph& g);

}  // namespace bchroma
