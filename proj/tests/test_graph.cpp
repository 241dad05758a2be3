#include <doctest.h>

#include <numeric>

#include "gridgenus/graph.hpp"
#include "gridgenus/grid.hpp"

using namespace gridgenus;

TEST_CASE("path graphs") {
    SimpleGraph p3 = path_graph(3);
    CHECK(p3.n == 4);
    CHECK(p3.edges == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(path_graph(0).n == 1);
    CHECK(path_graph(0).edge_count() == 0);
    CHECK(path_graph(1).edge_count() == 1);
}

TEST_CASE("graph constructor rejects bad input") {
    CHECK_THROWS(SimpleGraph(2, {{0, 0}}));
    CHECK_THROWS(SimpleGraph(2, {{0, 1}, {1, 0}}));
    CHECK_THROWS(SimpleGraph(2, {{0, 2}}));
}

TEST_CASE("cartesian products") {
    SimpleGraph c4 = cartesian_product(path_graph(1), path_graph(1));
    CHECK(c4.n == 4);
    CHECK(c4.edge_count() == 4);
    SimpleGraph q3 = cartesian_product(c4, path_graph(1));
    CHECK(q3.n == 8);
    CHECK(q3.edge_count() == 12);
    SimpleGraph g22 = cartesian_product(path_graph(2), path_graph(2));
    CHECK(g22.n == 9);
    CHECK(g22.edge_count() == 12);
}

TEST_CASE("girth") {
    CHECK(*girth(grid_graph(GridSpec({1, 1}))) == 4);
    CHECK(!girth(path_graph(5)).has_value());
    CHECK(*girth(complete_bipartite(3, 3)) == 4);
    SimpleGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(*girth(k4) == 3);
}

TEST_CASE("connected components") {
    CHECK(connected_components(grid_graph(GridSpec({1, 1, 1}))).size() == 1);
    SimpleGraph two_c4(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
    CHECK(connected_components(two_c4).size() == 2);
    CHECK(connected_components(SimpleGraph(3, {})).size() == 3);
}

TEST_CASE("block decomposition") {
    SUBCASE("path has one block per edge") {
        auto bd = block_decomposition(path_graph(3));
        CHECK(bd.blocks.size() == 3);
        CHECK(bd.cut_vertices == std::vector<Vertex>{1, 2});
    }
    SUBCASE("cycle is a single block") {
        SimpleGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        auto bd = block_decomposition(c4);
        CHECK(bd.blocks.size() == 1);
        CHECK(bd.cut_vertices.empty());
    }
    SUBCASE("edge sets partition the graph") {
        SimpleGraph g = grid_graph(GridSpec({2, 2}));
        auto bd = block_decomposition(g);
        size_t total = 0;
        for (const auto& es : bd.block_edges) total += es.size();
        CHECK(total == static_cast<size_t>(g.edge_count()));
    }
    SUBCASE("disconnected input is rejected") {
        CHECK_THROWS_AS(block_decomposition(SimpleGraph(2, {})), std::invalid_argument);
    }
}

TEST_CASE("isomorphism") {
    SimpleGraph a = grid_graph(GridSpec({2, 1}));
    SimpleGraph b = cartesian_product(path_graph(2), path_graph(1));
    CHECK(is_isomorphic(a, b, 100000).isomorphic);
    SimpleGraph k33 = complete_bipartite(3, 3);
    SimpleGraph k33_minus(6, [] {
        auto es = complete_bipartite(3, 3).edges;
        es.pop_back();
        return es;
    }());
    CHECK_FALSE(is_isomorphic(k33, k33_minus, 100000).isomorphic);
    SimpleGraph q3 = grid_graph(GridSpec({1, 1, 1}));
    SimpleGraph c8(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}});
    CHECK_FALSE(is_isomorphic(q3, c8, 100000).isomorphic);
    // permuted grids are isomorphic
    CHECK(is_isomorphic(grid_graph(GridSpec({3, 2})), grid_graph(GridSpec({2, 3})), 1000000)
              .isomorphic);
}

TEST_CASE("minor witness verification") {
    SimpleGraph k33 = complete_bipartite(3, 3);
    SUBCASE("identity witness") {
        MinorWitness w;
        w.target = k33;
        for (int i = 0; i < 6; ++i) w.branch_sets.push_back({i});
        for (auto e : k33.edges) w.edge_map[e] = e;
        CHECK(verify_minor_witness(k33, w).ok);
    }
    SUBCASE("host too small") {
        SimpleGraph host = grid_graph(GridSpec({1, 1}));
        MinorWitness w;
        w.target = k33;
        for (int i = 0; i < 6; ++i) w.branch_sets.push_back({i});
        CHECK_FALSE(verify_minor_witness(host, w).ok);
    }
    SUBCASE("overlap is reported") {
        MinorWitness w;
        w.target = complete_bipartite(1, 1);
        w.branch_sets = {{0}, {0}};
        w.edge_map[{0, 1}] = {0, 1};
        auto r = verify_minor_witness(k33, w);
        CHECK_FALSE(r.ok);
        CHECK(r.reason == "branch sets overlap");
    }
}

TEST_CASE("find_minor") {
    SUBCASE("K33 is a minor of itself") {
        SimpleGraph k33 = complete_bipartite(3, 3);
        auto r = find_minor(k33, k33, 1000000);
        REQUIRE(r.status == SearchStatus::Found);
        CHECK(verify_minor_witness(k33, *r.witness).ok);
    }
    SUBCASE("K33 inside G(2,2,1)") {
        SimpleGraph host = grid_graph(GridSpec({2, 2, 1}));
        auto r = find_minor(host, complete_bipartite(3, 3), 5000000);
        REQUIRE(r.status == SearchStatus::Found);
        CHECK(verify_minor_witness(host, *r.witness).ok);
    }
    SUBCASE("no K33 in a planar prism") {
        for (long long a : {1, 2}) {
            SimpleGraph host = grid_graph(GridSpec({a, 1, 1}));
            auto r = find_minor(host, complete_bipartite(3, 3), 200000000);
            CHECK(r.status == SearchStatus::None);
        }
    }
    SUBCASE("budget exhaustion is reported distinctly") {
        SimpleGraph host = grid_graph(GridSpec({2, 2, 1}));
        auto r = find_minor(host, complete_bipartite(3, 3), 3);
        CHECK(r.status == SearchStatus::BudgetExhausted);
    }
}
