#include "bchroma/cliques.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace bchroma {

namespace {

constexpr int kCliqueCap = 31;

std::vector<uint32_t> adjacency_masks(const Graph& g, bool complemented) {
    int n = g.vertex_count();
    std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
    for (int v = 1; v <= n; ++v) {
        for (VertexId u : g.neighbors(v)) {
            adj[static_cast<size_t>(v) - 1] |= 1U << (u - 1);
        }
    }
    if (complemented) {
        uint32_t full = (n == 31) ? 0x7FFFFFFFU : ((1U << n) - 1);
        for (int v = 0; v < n; ++v) {
            adj[static_cast<size_t>(v)] = full & ~adj[static_cast<size_t>(v)] & ~(1U << v);
        }
    }
    return adj;
}

// Bron-Kerbosch with a pivot chosen to maximize |P & N(pivot)|; ties go to
// the lowest vertex so enumeration order is stable.
void bron_kerbosch(const std::vector<uint32_t>& adj, uint32_t r, uint32_t p, uint32_t x,
                   const std::function<void(uint32_t)>& report) {
    if (p == 0 && x == 0) {
        report(r);
        return;
    }
    uint32_t px = p | x;
    int pivot = -1;
    int best = -1;
    for (uint32_t rest = px; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        int gain = std::popcount(p & adj[static_cast<size_t>(v)]);
        if (gain > best) {
            best = gain;
            pivot = v;
        }
    }
    uint32_t work = p & ~adj[static_cast<size_t>(pivot)];
    while (work) {
        int v = std::countr_zero(work);
        uint32_t bit = 1U << v;
        work &= work - 1;
        bron_kerbosch(adj, r | bit, p & adj[static_cast<size_t>(v)],
                      x & adj[static_cast<size_t>(v)], report);
        p &= ~bit;
        x |= bit;
    }
}

}  // namespace

CliqueCount count_max_cliques(const Graph& g) {
    int n = g.vertex_count();
    if (n > kCliqueCap) {
        throw std::invalid_argument("clique enumeration capped at " +
                                    std::to_string(kCliqueCap) + " vertices, got " +
                                    std::to_string(n));
    }
    auto adj = adjacency_masks(g, false);
    uint32_t all = (n == 31) ? 0x7FFFFFFFU : ((1U << n) - 1);
    CliqueCount out;
    bron_kerbosch(adj, 0, all, 0, [&out](uint32_t clique) {
        int size = std::popcount(clique);
        if (size > out.size) {
            out.size = size;
            out.count = 1;
        } else if (size == out.size) {
            ++out.count;
        }
    });
    return out;
}

std::vector<std::vector<VertexId>> maximal_independent_sets(const Graph& g) {
    int n = g.vertex_count();
    if (n > kCliqueCap) {
        throw std::invalid_argument("independent-set enumeration capped at " +
                                    std::to_string(kCliqueCap) + " vertices, got " +
                                    std::to_string(n));
    }
    auto adj = adjacency_masks(g, true);
    uint32_t all = (n == 31) ? 0x7FFFFFFFU : ((1U << n) - 1);
    std::vector<std::vector<VertexId>> sets;
    bron_kerbosch(adj, 0, all, 0, [&sets](uint32_t clique) {
        std::vector<VertexId> members;
        for (uint32_t rest = clique; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            members.push_back(v + 1);
        }
        sets.push_back(std::move(members));
    });
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    });
    return sets;
}

}  // namespace bchroma
