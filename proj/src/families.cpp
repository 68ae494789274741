#include "bchroma/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bchroma {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

}  // namespace

Graph path(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    edges.emplace_back(n, 1);
    return Graph::from_edges(n, edges);
}

Graph complete(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int m, int n) {
    require(m >= 1 && n >= 1, "complete bipartite graph needs both sides >= 1");
    std::vector<Edge> edges;
    for (int u = 1; u <= m; ++u) {
        for (int v = m + 1; v <= m + n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(m + n, edges);
}

Graph edgeless(int n) {
    require(n >= 1, "edgeless graph needs n >= 1");
    return Graph::from_edges(n, {});
}

Graph wheel(int rim) {
    require(rim >= 3, "wheel needs a rim of >= 3 vertices");
    std::vector<Edge> edges;
    for (int i = 2; i <= rim + 1; ++i) {
        edges.emplace_back(1, i);
    }
    for (int i = 2; i <= rim; ++i) {
        edges.emplace_back(i, i + 1);
    }
    edges.emplace_back(rim + 1, 2);
    return Graph::from_edges(rim + 1, edges);
}

Graph sunlet(int n) {
    require(n >= 3, "sunlet needs a cycle of >= 3 vertices");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    edges.emplace_back(n, 1);
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(i, n + i);
    }
    return Graph::from_edges(2 * n, edges);
}

Graph sun(int n) {
    require(n >= 3, "sun needs a core of >= 3 vertices");
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(i, i + n);
    }
    for (int i = 1; i < n; ++i) {
        edges.emplace_back(i + n, i + 1 + n);
    }
    edges.emplace_back(2 * n, 1);
    return Graph::from_edges(2 * n, edges);
}

Graph helm(int rim) {
    Graph w = wheel(rim);
    std::vector<Edge> edges = w.edges();
    for (int i = 0; i < rim; ++i) {
        edges.emplace_back(2 + i, rim + 2 + i);
    }
    return Graph::from_edges(2 * rim + 1, edges);
}

Graph classic(const std::string& kind, const std::vector<int>& params) {
    auto want = [&](size_t count) {
        require(params.size() == count, "family \"" + kind + "\" expects " +
                                            std::to_string(count) + " parameter(s), got " +
                                            std::to_string(params.size()));
    };
    if (kind == "path") {
        want(1);
        return path(params[0]);
    }
    if (kind == "cycle") {
        want(1);
        return cycle(params[0]);
    }
    if (kind == "complete") {
        want(1);
        return complete(params[0]);
    }
    if (kind == "complete_bipartite") {
        want(2);
        return complete_bipartite(params[0], params[1]);
    }
    if (kind == "edgeless") {
        want(1);
        return edgeless(params[0]);
    }
    if (kind == "wheel") {
        want(1);
        return wheel(params[0]);
    }
    if (kind == "sunlet") {
        want(1);
        return sunlet(params[0]);
    }
    if (kind == "sun") {
        want(1);
        return sun(params[0]);
    }
    if (kind == "helm") {
        want(1);
        return helm(params[0]);
    }
    throw std::invalid_argument("unknown family \"" + kind + "\"");
}

Digraph jaco(const JacoParams& p) {
    require(p.n >= 1, "jaco needs n >= 1");
    require(p.m >= 1, "jaco needs slope m >= 1");
    require(p.c >= 0, "jaco needs intercept c >= 0");
    std::vector<Arc> arcs;
    std::vector<int> in_degree(static_cast<size_t>(p.n) + 1, 0);
    for (int i = 1; i <= p.n; ++i) {
        // d^-(v_i) is final here: arcs only come from lower-indexed vertices.
        long long reach = static_cast<long long>(p.m) * i + p.c + i - in_degree[static_cast<size_t>(i)];
        int hi = static_cast<int>(std::min<long long>(p.n, reach));
        for (int j = i + 1; j <= hi; ++j) {
            arcs.emplace_back(i, j);
            ++in_degree[static_cast<size_t>(j)];
        }
    }
    return Digraph::from_arcs(p.n, arcs);
}

JacoStructure jaco_structure(const Digraph& d) {
    int n = d.vertex_count();
    require(n >= 2, "jaco structure needs n >= 2");
    Graph g = underlying(d);
    auto degrees = g.degree_profile();
    int max_deg = *std::max_element(degrees.begin(), degrees.end());
    JacoStructure out;
    for (int v = 1; v <= n; ++v) {
        if (degrees[static_cast<size_t>(v) - 1] == max_deg) {
            out.jaconian_set.push_back(v);
        }
    }
    out.prime = out.jaconian_set.front();
    if (out.prime < n) {
        std::vector<VertexId> tail;
        for (int v = out.prime + 1; v <= n; ++v) {
            tail.push_back(v);
        }
        out.hope = g.induced(tail);
    }
    return out;
}

int OrnatedString::max_entry() const {
    if (entries.empty()) {
        return 0;
    }
    return *std::max_element(entries.begin(), entries.end());
}

bool OrnatedString::all_zero() const {
    return max_entry() == 0;
}

Digraph ornated(int n, const OrnatedString& s) {
    require(n >= 1, "ornated needs n >= 1");
    require(!s.entries.empty(), "ornated string needs at least one entry");
    for (int a : s.entries) {
        require(a >= 0, "ornated string entries must be non-negative");
    }
    std::vector<Arc> arcs;
    for (int i = 1; i <= n; ++i) {
        for (size_t t = 0; t < s.entries.size(); ++t) {
            int reach = s.entries[t];
            if ((t + 1) % 2 == 1) {  // odd position: forward arcs
                int hi = std::min(n, i + reach);
                for (int j = i + 1; j <= hi; ++j) {
                    arcs.emplace_back(i, j);
                }
            } else {  // even position: backward arcs
                int lo = std::max(1, i - reach);
                for (int j = lo; j < i; ++j) {
                    arcs.emplace_back(i, j);
                }
            }
        }
    }
    return Digraph::from_arcs(n, arcs);
}

Graph maximal_reach(int n, const OrnatedString& s) {
    require(!s.entries.empty(), "ornated string needs at least one entry");
    return underlying(ornated(n, OrnatedString{{s.max_entry()}}));
}

Graph rasta(const RastaSpec& spec) {
    require(spec.terms.size() >= 2, "rasta needs at least two column sizes");
    for (size_t i = 0; i + 1 < spec.terms.size(); ++i) {
        require(spec.terms[i] > spec.terms[i + 1], "rasta column sizes must strictly decrease");
    }
    require(spec.terms.back() > 1, "rasta last column size must exceed 1");
    std::vector<int> offset(spec.terms.size() + 1, 0);
    for (size_t i = 0; i < spec.terms.size(); ++i) {
        offset[i + 1] = offset[i] + spec.terms[i];
    }
    std::vector<Edge> edges;
    for (size_t col = 0; col + 1 < spec.terms.size(); ++col) {
        for (int a = 1; a <= spec.terms[col]; ++a) {
            for (int b = 1; b <= spec.terms[col + 1]; ++b) {
                edges.emplace_back(offset[col] + a, offset[col + 1] + b);
            }
        }
    }
    return Graph::from_edges(offset.back(), edges);
}

std::vector<std::vector<int>> subsets_by_size_lex(int n) {
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> subset;
        for (int e = 0; e < n; ++e) {
            if (mask & (1 << e)) {
                subset.push_back(e + 1);
            }
        }
        subsets.push_back(std::move(subset));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    });
    return subsets;
}

Graph set_graph(int n) {
    require(n >= 1, "set graph needs n >= 1");
    require(n <= 5, "set graph capped at n <= 5 (vertex count 2^n - 1)");
    auto subsets = subsets_by_size_lex(n);
    int count = static_cast<int>(subsets.size());
    std::vector<Edge> edges;
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            const auto& a = subsets[static_cast<size_t>(i)];
            const auto& b = subsets[static_cast<size_t>(j)];
            bool intersects = std::find_first_of(a.begin(), a.end(), b.begin(), b.end()) != a.end();
            if (intersects) {
                edges.emplace_back(i + 1, j + 1);
            }
        }
    }
    return Graph::from_edges(count, edges);
}

Graph edge_set_graph(const Graph& g, bool shared_edge_adjacent) {
    int eps = g.edge_count();
    require(eps >= 1, "edge-set graph needs at least one edge");
    require(eps <= 5, "edge-set graph capped at |E| <= 5 (vertex count 2^|E| - 1)");
    auto edge_list = g.edges();
    // Which pairs of distinct edges of g share an endpoint.
    std::vector<std::vector<bool>> touches(static_cast<size_t>(eps),
                                           std::vector<bool>(static_cast<size_t>(eps), false));
    for (int a = 0; a < eps; ++a) {
        for (int b = a + 1; b < eps; ++b) {
            const auto& [au, av] = edge_list[static_cast<size_t>(a)];
            const auto& [bu, bv] = edge_list[static_cast<size_t>(b)];
            bool shared = au == bu || au == bv || av == bu || av == bv;
            touches[static_cast<size_t>(a)][static_cast<size_t>(b)] = shared;
            touches[static_cast<size_t>(b)][static_cast<size_t>(a)] = shared;
        }
    }
    auto subsets = subsets_by_size_lex(eps);
    int count = static_cast<int>(subsets.size());
    std::vector<Edge> edges;
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            const auto& a = subsets[static_cast<size_t>(i)];
            const auto& b = subsets[static_cast<size_t>(j)];
            bool adjacent = false;
            for (int ea : a) {
                for (int eb : b) {
                    if (ea == eb) {
                        // An edge is not adjacent to itself; a common member
                        // only counts under the shared-edge reading.
                        adjacent = adjacent || shared_edge_adjacent;
                    } else if (touches[static_cast<size_t>(ea) - 1][static_cast<size_t>(eb) - 1]) {
                        adjacent = true;
                    }
                }
            }
            if (adjacent) {
                edges.emplace_back(i + 1, j + 1);
            }
        }
    }
    return Graph::from_edges(count, edges);
}

Graph chithra(const ChithraSpec& spec, bool require_cover) {
    int n = spec.base.vertex_count();
    std::set<VertexId> covered;
    for (size_t i = 0; i < spec.subsets.size(); ++i) {
        const auto& w = spec.subsets[i];
        require(!w.empty(), "chithra subset W_" + std::to_string(i + 1) + " is empty");
        for (VertexId v : w) {
            require(v >= 1 && v <= n, "chithra subset W_" + std::to_string(i + 1) +
                                          " contains out-of-range vertex " + std::to_string(v));
            covered.insert(v);
        }
    }
    if (require_cover) {
        require(static_cast<int>(covered.size()) == n,
                "chithra subsets must cover every vertex of the base graph");
    }
    std::vector<Edge> edges = spec.base.edges();
    for (size_t i = 0; i < spec.subsets.size(); ++i) {
        std::set<VertexId> members(spec.subsets[i].begin(), spec.subsets[i].end());
        for (VertexId v : members) {
            edges.emplace_back(v, n + static_cast<int>(i) + 1);
        }
    }
    return Graph::from_edges(n + static_cast<int>(spec.subsets.size()), edges);
}

std::optional<ChithraDecomposition> chithra_decomposition(const Graph& g,
                                                          const std::vector<VertexId>& u_set) {
    require(!u_set.empty(), "decomposition needs a nonempty vertex set");
    std::vector<VertexId> u_sorted = u_set;
    std::sort(u_sorted.begin(), u_sorted.end());
    require(std::adjacent_find(u_sorted.begin(), u_sorted.end()) == u_sorted.end(),
            "decomposition vertex set has duplicates");
    for (VertexId v : u_sorted) {
        require(v >= 1 && v <= g.vertex_count(), "decomposition vertex out of range");
    }
    if (static_cast<int>(u_sorted.size()) >= g.vertex_count()) {
        return std::nullopt;  // removing U must leave a nonempty base
    }
    for (size_t i = 0; i < u_sorted.size(); ++i) {
        for (size_t j = i + 1; j < u_sorted.size(); ++j) {
            if (g.adjacent(u_sorted[i], u_sorted[j])) {
                return std::nullopt;  // U not independent
            }
        }
    }
    std::vector<bool> in_u(static_cast<size_t>(g.vertex_count()) + 1, false);
    for (VertexId v : u_sorted) {
        in_u[static_cast<size_t>(v)] = true;
    }
    std::vector<VertexId> rest;
    std::vector<int> base_label(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (!in_u[static_cast<size_t>(v)]) {
            rest.push_back(v);
            base_label[static_cast<size_t>(v)] = static_cast<int>(rest.size());
        }
    }
    // Every vertex of G - U must keep at least one neighbor in U, otherwise
    // the pendant construction cannot reproduce G.
    for (VertexId v : rest) {
        bool dominated = false;
        for (VertexId u : g.neighbors(v)) {
            if (in_u[static_cast<size_t>(u)]) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            return std::nullopt;
        }
    }
    ChithraDecomposition out;
    out.base = g.induced(rest);
    for (VertexId u : u_sorted) {
        std::vector<VertexId> w;
        for (VertexId v : g.neighbors(u)) {
            w.push_back(base_label[static_cast<size_t>(v)]);
        }
        std::sort(w.begin(), w.end());
        out.subsets.push_back(std::move(w));
    }
    return out;
}

Graph edge_joint(const Graph& g, VertexId v, const Graph& h, VertexId u) {
    require(v >= 1 && v <= g.vertex_count(), "edge joint: vertex v out of range in left graph");
    require(u >= 1 && u <= h.vertex_count(), "edge joint: vertex u out of range in right graph");
    int shift = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (const auto& [a, b] : h.edges()) {
        edges.emplace_back(a + shift, b + shift);
    }
    edges.emplace_back(v, u + shift);
    return Graph::from_edges(g.vertex_count() + h.vertex_count(), edges);
}

bool is_star(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2 || g.edge_count() != n - 1) {
        return false;
    }
    int high = 0;
    for (int v = 1; v <= n; ++v) {
        int d = g.degree(v);
        if (d == 0) {
            return false;
        }
        if (d > 1) {
            ++high;
        }
    }
    // K_2 has no vertex of degree > 1; larger stars have exactly the center.
    return high <= 1;
}

bool is_path_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n == 1) {
        return g.edge_count() == 0;
    }
    if (g.edge_count() != n - 1) {
        return false;
    }
    int endpoints = 0;
    for (int v = 1; v <= n; ++v) {
        int d = g.degree(v);
        if (d == 1) {
            ++endpoints;
        } else if (d != 2) {
            return false;
        }
    }
    if (endpoints != 2) {
        return false;
    }
    // n-1 edges with degrees in {1,2} and two endpoints: connected iff a walk
    // from one endpoint visits all vertices.
    int start = 0;
    for (int v = 1; v <= n; ++v) {
        if (g.degree(v) == 1) {
            start = v;
            break;
        }
    }
    int seen = 1;
    int prev = 0;
    int cur = start;
    while (true) {
        int next = 0;
        for (VertexId w : g.neighbors(cur)) {
            if (w != prev) {
                next = w;
                break;
            }
        }
        if (next == 0) {
            break;
        }
        prev = cur;
        cur = next;
        ++seen;
    }
    return seen == n;
}

}  // namespace bchroma
