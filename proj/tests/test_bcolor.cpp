#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "bchroma/bcolor.hpp"
#include "bchroma/families.hpp"
#include "bchroma/graph.hpp"
#include "bchroma/verify.hpp"
#include "support/oracles.hpp"

using bchroma::Coloring;
using bchroma::Graph;
using bchroma::SearchStatus;

namespace {

Coloring make_coloring(int k, std::vector<int> colors) {
    return Coloring{k, std::move(colors)};
}

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
    std::vector<bchroma::Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(perm[static_cast<size_t>(u) - 1], perm[static_cast<size_t>(v) - 1]);
    }
    return Graph::from_edges(g.vertex_count(), edges);
}

}  // namespace

TEST_CASE("proper coloring check") {
    Graph k3 = bchroma::complete(3);
    CHECK(bchroma::is_proper(k3, make_coloring(3, {1, 2, 3})));
    CHECK_FALSE(bchroma::is_proper(k3, make_coloring(2, {1, 1, 2})));
    CHECK(bchroma::is_proper(bchroma::edgeless(4), make_coloring(1, {1, 1, 1, 1})));
    CHECK_THROWS_AS(bchroma::is_proper(k3, make_coloring(2, {1, 2})), std::invalid_argument);
}

TEST_CASE("b-vertex sets") {
    SUBCASE("C5 with colors 1,2,3,1,2") {
        auto classes = bchroma::b_vertices(bchroma::cycle(5), make_coloring(3, {1, 2, 3, 1, 2}));
        CHECK(classes.at(1) == std::vector<int>{4});
        CHECK(classes.at(2) == std::vector<int>{2});
        CHECK(classes.at(3) == std::vector<int>{3});
    }
    SUBCASE("P3 with colors 1,2,1") {
        auto classes = bchroma::b_vertices(bchroma::path(3), make_coloring(2, {1, 2, 1}));
        CHECK(classes.at(1) == std::vector<int>{1, 3});
        CHECK(classes.at(2) == std::vector<int>{2});
    }
    SUBCASE("rainbow K4") {
        auto classes = bchroma::b_vertices(bchroma::complete(4), make_coloring(4, {1, 2, 3, 4}));
        for (int c = 1; c <= 4; ++c) {
            CHECK(classes.at(c) == std::vector<int>{c});
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(bchroma::b_vertices(bchroma::complete(3), make_coloring(2, {1, 1, 2})),
                        std::invalid_argument);
        CHECK_THROWS_AS(bchroma::b_vertices(bchroma::path(3), make_coloring(3, {1, 2, 1})),
                        std::invalid_argument);
    }
}

TEST_CASE("b-coloring check") {
    CHECK(bchroma::is_b_coloring(bchroma::cycle(4), make_coloring(2, {1, 2, 1, 2}), 2));
    CHECK(bchroma::is_b_coloring(bchroma::path(5), make_coloring(3, {1, 2, 3, 1, 2}), 3));
    CHECK_FALSE(bchroma::is_b_coloring(bchroma::complete(3), make_coloring(4, {1, 2, 3}), 4));
    CHECK_FALSE(bchroma::is_b_coloring(bchroma::complete(3), make_coloring(2, {1, 1, 2}), 2));
}

TEST_CASE("m bound") {
    CHECK(bchroma::m_bound(bchroma::complete(4)) == 4);
    CHECK(bchroma::m_bound(bchroma::cycle(4)) == 3);
    CHECK(bchroma::m_bound(bchroma::complete_bipartite(1, 5)) == 2);
    CHECK(bchroma::m_bound(bchroma::edgeless(5)) == 1);
}

TEST_CASE("feasibility search") {
    SUBCASE("C4 admits two colors and the witness is stable") {
        auto first = bchroma::feasible_k(bchroma::cycle(4), 2);
        REQUIRE(first.status == SearchStatus::kFound);
        CHECK(bchroma::is_b_coloring(bchroma::cycle(4), *first.coloring, 2));
        auto second = bchroma::feasible_k(bchroma::cycle(4), 2);
        CHECK(first.coloring == second.coloring);
    }
    SUBCASE("C4 admits no three-color b-coloring") {
        CHECK(bchroma::feasible_k(bchroma::cycle(4), 3).status == SearchStatus::kInfeasible);
    }
    SUBCASE("P4 admits no three-color b-coloring") {
        // Three classes would need three vertices of degree >= 2; P4 has two.
        CHECK(testsupport::chi_exact(bchroma::path(4)) == 2);
        CHECK(bchroma::phi_oracle(bchroma::path(4)) == 2);
        CHECK(bchroma::feasible_k(bchroma::path(4), 3).status == SearchStatus::kInfeasible);
    }
    SUBCASE("a tiny budget reports timeout, not infeasibility") {
        bchroma::SearchLimits limits{3};
        auto r = bchroma::feasible_k(bchroma::set_graph(3), 4, limits);
        CHECK(r.status == SearchStatus::kTimeout);
    }
}

TEST_CASE("phi on known graphs") {
    auto expect_phi = [](const Graph& g, int value) {
        auto outcome = bchroma::phi(g);
        REQUIRE(outcome.status == SearchStatus::kFound);
        CHECK(outcome.best->phi == value);
    };
    expect_phi(bchroma::complete(5), 5);
    expect_phi(bchroma::path(3), 2);
    expect_phi(underlying(bchroma::jaco({5, 1, 0})), 3);
    expect_phi(bchroma::edgeless(4), 1);
    expect_phi(bchroma::complete(1), 1);

    SUBCASE("witness invariants") {
        for (const Graph& g : {bchroma::wheel(5), bchroma::sun(3), bchroma::cycle(7),
                               underlying(bchroma::jaco({9, 1, 0}))}) {
            auto outcome = bchroma::phi(g);
            REQUIRE(outcome.status == SearchStatus::kFound);
            const auto& result = *outcome.best;
            CHECK(bchroma::is_b_coloring(g, result.witness, result.phi));
            CHECK(static_cast<int>(result.b_vertex_of.size()) == result.phi);
            for (const auto& [color, vertex] : result.b_vertex_of) {
                CHECK(g.degree(vertex) >= result.phi - 1);
                CHECK(result.witness.colors[static_cast<size_t>(vertex) - 1] == color);
            }
        }
    }
}

TEST_CASE("oracle values") {
    CHECK(bchroma::phi_oracle(bchroma::cycle(5)) == 3);
    CHECK(bchroma::phi_oracle(bchroma::complete_bipartite(3, 3)) == 2);
    CHECK(bchroma::phi_oracle(bchroma::edgeless(4)) == 1);
    CHECK_THROWS_AS(bchroma::phi_oracle(bchroma::cycle(10)), std::invalid_argument);
}

TEST_CASE("b-spectrum") {
    auto p5 = bchroma::b_spectrum(bchroma::path(5));
    CHECK(p5.feasible == std::vector<int>{2, 3});
    CHECK(p5.undecided.empty());

    CHECK(bchroma::b_spectrum(bchroma::complete(4)).feasible == std::vector<int>{4});
    CHECK(bchroma::b_spectrum(bchroma::cycle(4)).feasible == std::vector<int>{2});
}

TEST_CASE("solver matches the oracle on random graphs") {
    int index = 0;
    for (int n = 4; n <= 7; ++n) {
        for (double p : {0.2, 0.5, 0.8}) {
            for (int seed = 0; seed < 4; ++seed) {
                Graph g = bchroma::random_graph(n, p, 1000 + static_cast<uint32_t>(index++));
                auto outcome = bchroma::phi(g);
                REQUIRE(outcome.status == SearchStatus::kFound);
                CHECK(outcome.best->phi == bchroma::phi_oracle(g));
            }
        }
    }
}

TEST_CASE("bounds sandwich phi") {
    for (const Graph& g : {bchroma::wheel(4), bchroma::sun(3), bchroma::cycle(9),
                           bchroma::rasta({{4, 3, 2}}), bchroma::set_graph(3),
                           underlying(bchroma::jaco({8, 1, 1}))}) {
        auto outcome = bchroma::phi(g);
        REQUIRE(outcome.status == SearchStatus::kFound);
        int value = outcome.best->phi;
        CHECK(testsupport::chi_exact(g) <= value);
        CHECK(value <= bchroma::m_bound(g));
        CHECK(bchroma::m_bound(g) <= g.max_degree() + 1);
    }
}

TEST_CASE("verdicts are invariant under color permutations") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = bchroma::random_graph(6, 0.5, 500 + trial);
        auto outcome = bchroma::phi(g);
        REQUIRE(outcome.status == SearchStatus::kFound);
        Coloring witness = outcome.best->witness;
        std::vector<int> perm(static_cast<size_t>(witness.k));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        Coloring permuted = witness;
        for (auto& c : permuted.colors) {
            c = perm[static_cast<size_t>(c) - 1];
        }
        CHECK(bchroma::is_proper(g, permuted));
        CHECK(bchroma::is_b_coloring(g, permuted, witness.k));
    }
}

TEST_CASE("phi is invariant under vertex relabeling") {
    std::mt19937 rng(13);
    for (const Graph& g : {bchroma::sun(3), bchroma::wheel(5), bchroma::set_graph(3),
                           bchroma::random_graph(7, 0.5, 99)}) {
        std::vector<int> perm(static_cast<size_t>(g.vertex_count()));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph shuffled = relabeled(g, perm);
        auto a = bchroma::phi(g);
        auto b = bchroma::phi(shuffled);
        REQUIRE(a.status == SearchStatus::kFound);
        REQUIRE(b.status == SearchStatus::kFound);
        CHECK(a.best->phi == b.best->phi);
    }
}

TEST_CASE("infeasible k agrees with the oracle") {
    for (int seed = 0; seed < 10; ++seed) {
        Graph g = bchroma::random_graph(6, 0.4, 4242 + seed);
        int value = bchroma::phi_oracle(g);
        for (int k = value + 1; k <= bchroma::m_bound(g); ++k) {
            CHECK(bchroma::feasible_k(g, k).status == SearchStatus::kInfeasible);
        }
    }
}

TEST_CASE("per-k verdicts match brute enumeration") {
    // Feasibility is not monotone in k, so each k gets its own check: walk
    // every assignment of <= k colors and ask is_b_coloring directly.
    auto brute_feasible = [](const Graph& g, int k) {
        int n = g.vertex_count();
        std::vector<int> colors(static_cast<size_t>(n), 1);
        while (true) {
            if (bchroma::is_b_coloring(g, Coloring{k, colors}, k)) {
                return true;
            }
            int pos = n - 1;
            while (pos >= 0 && colors[static_cast<size_t>(pos)] == k) {
                colors[static_cast<size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) {
                return false;
            }
            ++colors[static_cast<size_t>(pos)];
        }
    };
    for (int seed = 0; seed < 6; ++seed) {
        Graph g = bchroma::random_graph(6, 0.5, 31000 + seed);
        for (int k = 1; k <= bchroma::m_bound(g); ++k) {
            bool found = bchroma::feasible_k(g, k).status == SearchStatus::kFound;
            CHECK(found == brute_feasible(g, k));
        }
    }
}

TEST_CASE("relaxed pairwise-linkage definition") {
    SUBCASE("checker") {
        CHECK(bchroma::is_linked_coloring(bchroma::cycle(4), make_coloring(2, {1, 2, 1, 2}), 2));
        // P3 colored 1,2,3 is proper but classes 1 and 3 have no edge.
        CHECK_FALSE(bchroma::is_linked_coloring(bchroma::path(3), make_coloring(3, {1, 2, 3}), 3));
    }
    SUBCASE("solver matches the relaxed oracle and dominates phi") {
        for (int seed = 0; seed < 8; ++seed) {
            Graph g = bchroma::random_graph(6, 0.5, 777 + seed);
            auto relaxed = bchroma::phi_linked(g);
            REQUIRE(relaxed.status == SearchStatus::kFound);
            CHECK(relaxed.best->phi == bchroma::phi_oracle_linked(g));
            auto strict = bchroma::phi(g);
            CHECK(relaxed.best->phi >= strict.best->phi);
        }
    }
}
