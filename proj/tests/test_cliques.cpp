#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "bchroma/cliques.hpp"
#include "bchroma/families.hpp"
#include "bchroma/verify.hpp"
#include "support/oracles.hpp"

using bchroma::Graph;

TEST_CASE("maximum clique counts on set graphs") {
    auto s2 = bchroma::count_max_cliques(bchroma::set_graph(2));
    CHECK(s2.size == 2);
    CHECK(s2.count == 2);

    auto s3 = bchroma::count_max_cliques(bchroma::set_graph(3));
    CHECK(s3.size == 4);
    CHECK(s3.count == 4);

    // At n=4 the count stops doubling: besides the four element-stars there
    // are eight families built from all four 3-sets, the full set, and one
    // 2-set from each complementary pair. The subset-enumeration oracle
    // agrees.
    auto s4 = bchroma::count_max_cliques(bchroma::set_graph(4));
    auto brute = testsupport::brute_max_cliques(bchroma::set_graph(4));
    CHECK(s4.size == brute.first);
    CHECK(s4.count == brute.second);
    CHECK(s4.size == 8);
    CHECK(s4.count == 12);
}

TEST_CASE("maximum clique counts on small graphs") {
    auto k4 = bchroma::count_max_cliques(bchroma::complete(4));
    CHECK(k4.size == 4);
    CHECK(k4.count == 1);

    auto c5 = bchroma::count_max_cliques(bchroma::cycle(5));
    CHECK(c5.size == 2);
    CHECK(c5.count == 5);

    auto n3 = bchroma::count_max_cliques(bchroma::edgeless(3));
    CHECK(n3.size == 1);
    CHECK(n3.count == 3);
}

TEST_CASE("clique counts match subset enumeration on random graphs") {
    for (int seed = 0; seed < 20; ++seed) {
        Graph g = bchroma::random_graph(4 + seed % 8, 0.5, 9000 + seed);
        auto fast = bchroma::count_max_cliques(g);
        auto brute = testsupport::brute_max_cliques(g);
        CHECK(fast.size == brute.first);
        CHECK(fast.count == brute.second);
    }
}

TEST_CASE("clique enumeration cap") {
    CHECK(bchroma::count_max_cliques(bchroma::set_graph(5)).size == 16);
    CHECK_THROWS_AS(bchroma::count_max_cliques(bchroma::edgeless(32)), std::invalid_argument);
}

TEST_CASE("maximal independent sets") {
    auto c4 = bchroma::maximal_independent_sets(bchroma::cycle(4));
    CHECK(c4 == std::vector<std::vector<int>>{{1, 3}, {2, 4}});

    auto c5 = bchroma::maximal_independent_sets(bchroma::cycle(5));
    CHECK(c5 == std::vector<std::vector<int>>{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}});

    SUBCASE("each set is independent and inextensible") {
        for (int seed = 0; seed < 15; ++seed) {
            Graph g = bchroma::random_graph(7, 0.4, 300 + seed);
            for (const auto& members : bchroma::maximal_independent_sets(g)) {
                for (size_t i = 0; i < members.size(); ++i) {
                    for (size_t j = i + 1; j < members.size(); ++j) {
                        CHECK_FALSE(g.adjacent(members[i], members[j]));
                    }
                }
                for (int v = 1; v <= g.vertex_count(); ++v) {
                    bool inside = std::find(members.begin(), members.end(), v) != members.end();
                    if (inside) {
                        continue;
                    }
                    bool touches = false;
                    for (int u : members) {
                        if (g.adjacent(u, v)) {
                            touches = true;
                            break;
                        }
                    }
                    CHECK(touches);
                }
            }
        }
    }
}
