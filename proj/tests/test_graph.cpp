#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "bchroma/edgelist.hpp"
#include "bchroma/families.hpp"
#include "bchroma/graph.hpp"

using bchroma::Digraph;
using bchroma::Graph;

TEST_CASE("graph construction") {
    Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.degree_profile() == std::vector<int>{1, 2, 1});

    Graph dup = Graph::from_edges(4, {{1, 2}, {2, 1}});
    CHECK(dup.edge_count() == 1);

    Graph k1 = Graph::from_edges(1, {});
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);

    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(0, {}), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and loop-free for generated families") {
    for (const Graph& g : {bchroma::wheel(5), bchroma::sun(4), bchroma::rasta({{4, 3, 2}}),
                           bchroma::set_graph(4), bchroma::helm(5)}) {
        for (int v = 1; v <= g.vertex_count(); ++v) {
            for (int u : g.neighbors(v)) {
                CHECK(u != v);
                CHECK(g.adjacent(u, v));
                CHECK(g.adjacent(v, u));
            }
        }
    }
}

TEST_CASE("underlying graph of a digraph") {
    Digraph both = Digraph::from_arcs(2, {{1, 2}, {2, 1}});
    Graph k2 = underlying(both);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.adjacent(1, 2));

    Digraph empty = Digraph::from_arcs(3, {});
    CHECK(underlying(empty).edge_count() == 0);

    Digraph sweep = Digraph::from_arcs(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(underlying(sweep).degree_profile() == std::vector<int>{1, 2, 3, 2, 2});
}

TEST_CASE("underlying graph never has more edges than arcs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<bchroma::Arc> arcs;
        int arc_count = static_cast<int>(rng() % 20);
        for (int i = 0; i < arc_count; ++i) {
            int tail = 1 + static_cast<int>(rng() % n);
            int head = 1 + static_cast<int>(rng() % n);
            if (tail != head) {
                arcs.emplace_back(tail, head);
            }
        }
        Digraph d = Digraph::from_arcs(n, arcs);
        CHECK(underlying(d).edge_count() <= d.arc_count());
    }
}

TEST_CASE("induced subgraphs") {
    CHECK(bchroma::complete(4).induced({1, 2, 3}) == bchroma::complete(3));
    CHECK(bchroma::path(4).induced({1, 3}).edge_count() == 0);
    CHECK(bchroma::cycle(5).induced({1, 2, 3}) == bchroma::path(3));

    Graph w = bchroma::wheel(4);
    std::vector<int> everything;
    for (int v = 1; v <= w.vertex_count(); ++v) {
        everything.push_back(v);
    }
    CHECK(w.induced(everything) == w);

    CHECK_THROWS_AS(w.induced({}), std::invalid_argument);
    CHECK_THROWS_AS(w.induced({1, 99}), std::invalid_argument);
    CHECK_THROWS_AS(w.induced({1, 1}), std::invalid_argument);
}

TEST_CASE("degree profiles") {
    CHECK(bchroma::cycle(4).degree_profile() == std::vector<int>{2, 2, 2, 2});
    CHECK(bchroma::complete_bipartite(1, 3).degree_profile() == std::vector<int>{3, 1, 1, 1});
    CHECK(bchroma::wheel(4).degree_profile() == std::vector<int>{4, 3, 3, 3, 3});
}

TEST_CASE("completeness test") {
    CHECK(bchroma::complete(5).is_complete());
    CHECK_FALSE(bchroma::path(3).is_complete());
    CHECK(bchroma::complete(1).is_complete());
}

TEST_CASE("edge list parsing") {
    CHECK(bchroma::parse_edgelist("3 2\n1 2\n2 3\n") == bchroma::path(3));
    CHECK(bchroma::emit_edgelist(bchroma::complete(3)) == "3 3\n1 2\n1 3\n2 3\n");

    auto expect_error_line = [](const char* text, int line) {
        try {
            bchroma::parse_edgelist(text);
            FAIL_CHECK("expected a parse error for ", text);
        } catch (const bchroma::ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_error_line("2 1\n2 1\n", 2);          // u >= v
    expect_error_line("", 1);                    // missing header
    expect_error_line("2\n", 1);                 // short header
    expect_error_line("2 1\n1 x\n", 2);          // bad token
    expect_error_line("2 1\n1 3\n", 2);          // out of range
    expect_error_line("3 2\n1 2\n1 2\n", 3);     // duplicate
    expect_error_line("3 2\n1 2\n", 2);          // missing edge line
    expect_error_line("3 1\n1 2\n2 3\n", 3);     // extra line
    expect_error_line("3 1\n1 2 9\n", 2);        // trailing token
}

TEST_CASE("parse round-trips emit on family instances") {
    for (const Graph& g :
         {bchroma::path(7), bchroma::cycle(9), bchroma::complete(6), bchroma::edgeless(4),
          bchroma::sunlet(5), bchroma::sun(3), bchroma::helm(4), bchroma::set_graph(3),
          bchroma::rasta({{5, 4, 3, 2}}), underlying(bchroma::jaco({9, 1, 0}))}) {
        CHECK(bchroma::parse_edgelist(bchroma::emit_edgelist(g)) == g);
    }
}
