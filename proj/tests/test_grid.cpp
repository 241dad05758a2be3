#include <doctest.h>

#include "gridgenus/grid.hpp"
#include "gridgenus/oracle.hpp"

using namespace gridgenus;

TEST_CASE("grid construction basics") {
    SimpleGraph q3 = grid_graph(GridSpec({1, 1, 1}));
    CHECK(q3.n == 8);
    CHECK(q3.edge_count() == 12);
    SimpleGraph g221 = grid_graph(GridSpec({2, 2, 1}));
    CHECK(g221.n == 18);
    CHECK(g221.edge_count() == 33);
    SimpleGraph g333 = grid_graph(GridSpec({3, 3, 3}));
    CHECK(g333.n == 64);
    CHECK(g333.edge_count() == 144);
}

TEST_CASE("closed-form counts") {
    CHECK(counts(GridSpec({1, 1, 1})).vertices == 8);
    CHECK(counts(GridSpec({1, 1, 1})).edges == 12);
    CHECK(counts(GridSpec({7})).vertices == 8);
    CHECK(counts(GridSpec({7})).edges == 7);
    CHECK(counts(GridSpec({2, 2, 2})).vertices == 27);
    CHECK(counts(GridSpec({2, 2, 2})).edges == 54);
}

TEST_CASE("counts equal constructed counts for every small spec") {
    for (const GridSpec& spec : enumerate_specs(200)) {
        auto c = counts(spec);
        SimpleGraph g = grid_graph(spec);
        CHECK(c.vertices == g.n);
        CHECK(c.edges == g.edge_count());
    }
}

TEST_CASE("betti numbers") {
    CHECK(betti(GridSpec({1, 1, 1})) == 5);
    CHECK(betti(GridSpec({9})) == 0);
    CHECK(betti(GridSpec({1, 1})) == 1);
}

TEST_CASE("coordinates round-trip") {
    GridSpec spec({3, 2, 4});
    SimpleGraph g = grid_graph(spec);
    for (Vertex v = 0; v < g.n; ++v) CHECK(coords_vertex(spec, vertex_coords(spec, v)) == v);
    // adjacency means exactly one coordinate differs by one
    for (auto [u, v] : g.edges) {
        auto cu = vertex_coords(spec, u), cv = vertex_coords(spec, v);
        int diffs = 0;
        for (size_t i = 0; i < cu.size(); ++i)
            if (cu[i] != cv[i]) {
                ++diffs;
                CHECK(std::abs(cu[i] - cv[i]) == 1);
            }
        CHECK(diffs == 1);
    }
}

TEST_CASE("normalization") {
    GridSpec s({0, 1, 1, 1});
    CHECK(s.normalized().params == std::vector<long long>{1, 1, 1});
    CHECK(parity_profile(s).odd == 3);
    CHECK(parity_profile(s).even == 0);
    CHECK(parity_profile(GridSpec({2, 2, 1})).odd == 1);
    CHECK(parity_profile(GridSpec({3, 3, 3})).odd == 3);
}

TEST_CASE("zero parameters collapse") {
    SimpleGraph a = grid_graph(GridSpec({2, 0, 2}));
    SimpleGraph b = grid_graph(GridSpec({2, 2}));
    CHECK(is_isomorphic(a, b, 1000000).isomorphic);
}

TEST_CASE("permutation invariance") {
    CHECK(is_isomorphic(grid_graph(GridSpec({3, 1, 2})), grid_graph(GridSpec({1, 2, 3})), 5000000)
              .isomorphic);
    CHECK(is_isomorphic(grid_graph(GridSpec({2, 1})), grid_graph(GridSpec({1, 2})), 1000000)
              .isomorphic);
}

TEST_CASE("girth of grids") {
    for (const GridSpec& spec : enumerate_specs(80)) {
        auto g = girth(grid_graph(spec));
        if (spec.normalized().dimension() > 1)
            CHECK(*g == 4);
        else
            CHECK(!g.has_value());
    }
}

TEST_CASE("spec parsing") {
    CHECK(parse_spec({"3", "2", "1"}).params == std::vector<long long>{3, 2, 1});
    CHECK_THROWS(parse_spec({"0"}));
    CHECK_THROWS(parse_spec({"x"}));
    CHECK_THROWS(parse_spec(std::vector<std::string>{}));
}
