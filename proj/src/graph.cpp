#include "bchroma/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bchroma {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 1) {
        throw std::invalid_argument("graph needs at least one vertex, got n=" + std::to_string(n));
    }
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<size_t>(n) + 1, {});
    std::set<Edge> seen;
    for (const auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) {
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") with n=" + std::to_string(n));
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        Edge e{std::min(u, v), std::max(u, v)};
        if (seen.insert(e).second) {
            g.adj_[static_cast<size_t>(e.first)].push_back(e.second);
            g.adj_[static_cast<size_t>(e.second)].push_back(e.first);
        }
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
    g.edge_count_ = static_cast<int>(seen.size());
    return g;
}

void Graph::require_vertex(VertexId v) const {
    if (v < 1 || v > n_) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(n_));
    }
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    require_vertex(u);
    require_vertex(v);
    const auto& nbrs = adj_[static_cast<size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    require_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

int Graph::degree(VertexId v) const {
    require_vertex(v);
    return static_cast<int>(adj_[static_cast<size_t>(v)].size());
}

std::vector<int> Graph::degree_profile() const {
    std::vector<int> profile;
    profile.reserve(static_cast<size_t>(n_));
    for (int v = 1; v <= n_; ++v) {
        profile.push_back(static_cast<int>(adj_[static_cast<size_t>(v)].size()));
    }
    return profile;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 1; v <= n_; ++v) {
        best = std::max(best, static_cast<int>(adj_[static_cast<size_t>(v)].size()));
    }
    return best;
}

bool Graph::is_complete() const {
    for (int v = 1; v <= n_; ++v) {
        if (static_cast<int>(adj_[static_cast<size_t>(v)].size()) != n_ - 1) {
            return false;
        }
    }
    return true;
}

Graph Graph::induced(const std::vector<VertexId>& vertices) const {
    if (vertices.empty()) {
        throw std::invalid_argument("induced subgraph needs a nonempty vertex set");
    }
    std::vector<VertexId> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("induced subgraph vertex set has duplicates");
    }
    for (VertexId v : sorted) {
        require_vertex(v);
    }
    std::vector<int> new_label(static_cast<size_t>(n_) + 1, 0);
    for (size_t i = 0; i < sorted.size(); ++i) {
        new_label[static_cast<size_t>(sorted[i])] = static_cast<int>(i) + 1;
    }
    std::vector<Edge> edges;
    for (VertexId v : sorted) {
        for (VertexId u : adj_[static_cast<size_t>(v)]) {
            if (u > v && new_label[static_cast<size_t>(u)] != 0) {
                edges.emplace_back(new_label[static_cast<size_t>(v)],
                                   new_label[static_cast<size_t>(u)]);
            }
        }
    }
    return from_edges(static_cast<int>(sorted.size()), edges);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> result;
    result.reserve(static_cast<size_t>(edge_count_));
    for (int v = 1; v <= n_; ++v) {
        for (VertexId u : adj_[static_cast<size_t>(v)]) {
            if (u > v) {
                result.emplace_back(v, u);
            }
        }
    }
    return result;
}

Digraph Digraph::from_arcs(int n, const std::vector<Arc>& arcs) {
    if (n < 1) {
        throw std::invalid_argument("digraph needs at least one vertex, got n=" + std::to_string(n));
    }
    std::set<Arc> dedup;
    for (const auto& [tail, head] : arcs) {
        if (tail < 1 || tail > n || head < 1 || head > n) {
            throw std::invalid_argument("arc endpoint out of range: (" + std::to_string(tail) +
                                        "," + std::to_string(head) + ") with n=" + std::to_string(n));
        }
        if (tail == head) {
            throw std::invalid_argument("self-arc at vertex " + std::to_string(tail));
        }
        dedup.emplace(tail, head);
    }
    Digraph d;
    d.n_ = n;
    d.arcs_.assign(dedup.begin(), dedup.end());
    return d;
}

int Digraph::in_degree(VertexId v) const {
    int count = 0;
    for (const auto& [tail, head] : arcs_) {
        if (head == v) {
            ++count;
        }
    }
    return count;
}

int Digraph::out_degree(VertexId v) const {
    int count = 0;
    for (const auto& [tail, head] : arcs_) {
        if (tail == v) {
            ++count;
        }
    }
    return count;
}

Graph underlying(const Digraph& d) {
    std::vector<Edge> edges;
    edges.reserve(d.arcs().size());
    for (const auto& [tail, head] : d.arcs()) {
        edges.emplace_back(tail, head);
    }
    return Graph::from_edges(d.vertex_count(), edges);
}

std::string graph_key(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '|';
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        if (!first) {
            out << ',';
        }
        first = false;
        out << u << '-' << v;
    }
    return out.str();
}

}  // namespace bchroma
