#include <doctest.h>

#include "gridgenus/constructions.hpp"
#include "gridgenus/formulas.hpp"
#include "gridgenus/oracle.hpp"
#include "gridgenus/rotation.hpp"

using namespace gridgenus;

TEST_CASE("rotation system counts") {
    CHECK(rotation_system_count(grid_graph(GridSpec({1, 1, 1}))) == 256);
    CHECK(rotation_system_count(complete_bipartite(3, 3)) == 64);
    CHECK(rotation_system_count(path_graph(4)) == 1);
}

TEST_CASE("exhaustive genus of the cube") {
    OracleResult r = exhaustive_genus(grid_graph(GridSpec({1, 1, 1})), 1000000);
    CHECK(r.exhausted);
    CHECK(r.enumerated == 256);
    CHECK(r.min_genus == 0);
    CHECK(r.max_genus == 2);
    CHECK(r.spectrum == std::set<long long>{0, 1, 2});
}

TEST_CASE("exhaustive genus of K33") {
    OracleResult r = exhaustive_genus(complete_bipartite(3, 3), 1000000);
    CHECK(r.exhausted);
    CHECK(r.enumerated == 64);
    CHECK(r.min_genus == 1);
}

TEST_CASE("exhaustive genus of K4") {
    SimpleGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    OracleResult r = exhaustive_genus(k4, 1000000);
    CHECK(r.exhausted);
    CHECK(r.enumerated == 16);
    CHECK(r.min_genus == 0);
    CHECK(r.max_genus == 1);
}

TEST_CASE("budget exhaustion is flagged") {
    OracleResult r = exhaustive_genus(grid_graph(GridSpec({1, 1, 1})), 10);
    CHECK_FALSE(r.exhausted);
    CHECK(r.enumerated == 10);
}

TEST_CASE("oracle max genus is floor(betti/2) on enumerable grids") {
    for (auto params : std::vector<std::vector<long long>>{{1, 1}, {2, 1}, {3, 1}, {2, 2}, {1, 1, 1}}) {
        GridSpec spec(params);
        OracleResult r = exhaustive_genus(grid_graph(spec), 10000000);
        REQUIRE(r.exhausted);
        CHECK(r.max_genus == max_genus(spec));
        CHECK(r.min_genus == *exact_genus(spec).genus);
        // Duke interpolation: the spectrum is an interval
        for (long long g = r.min_genus; g <= r.max_genus; ++g) CHECK(r.spectrum.count(g) == 1);
    }
}

TEST_CASE("T_n construction") {
    SimpleGraph t1 = build_Tn(1);
    CHECK(is_isomorphic(t1, complete_bipartite(3, 3), 100000).isomorphic);
    SimpleGraph t2 = build_Tn(2);
    CHECK(t2.n == 11);
    CHECK(t2.edge_count() == 18);
    SimpleGraph t3 = build_Tn(3);
    CHECK(t3.n == 16);
    CHECK(t3.edge_count() == 27);
    auto bd = block_decomposition(t3);
    CHECK(bd.blocks.size() == 3);
    for (const auto& block : bd.blocks) {
        auto [bg, map] = induced_subgraph(t3, block);
        CHECK(is_isomorphic(bg, complete_bipartite(3, 3), 100000).isomorphic);
    }
    CHECK(bd.cut_vertices.size() == 2);
}

TEST_CASE("genus by blocks") {
    auto oracle = [](const SimpleGraph& g) {
        return exhaustive_genus(g, 10000000).min_genus;
    };
    CHECK(genus_by_blocks(build_Tn(1), oracle) == 1);
    CHECK(genus_by_blocks(build_Tn(2), oracle) == 2);
    CHECK(genus_by_blocks(build_Tn(3), oracle) == 3);
    CHECK(genus_by_blocks(path_graph(7), oracle) == 0);
    // two disjoint K33
    std::vector<Edge> es = complete_bipartite(3, 3).edges;
    for (auto [u, v] : complete_bipartite(3, 3).edges) es.push_back({u + 6, v + 6});
    CHECK(genus_by_blocks(SimpleGraph(12, es), oracle) == 2);
}

TEST_CASE("packing lower bound on G(2,2,1)") {
    SimpleGraph host = grid_graph(GridSpec({2, 2, 1}));
    PackingResult r =
        packing_lower_bound(host, {{complete_bipartite(3, 3), 1}}, 20000000);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.certificate.implied_lower_bound == 1);
    CHECK(r.certificate.disjoint_witnesses.size() == 1);
}

TEST_CASE("spec walker agrees with the materialized enumeration") {
    long long count = 0;
    for_each_spec(64, [&](const std::vector<long long>&) { ++count; });
    CHECK(count == static_cast<long long>(enumerate_specs(64).size()));
}

TEST_CASE("construction suite is clean and deterministic at 30 vertices") {
    SuiteReport a = verify_construction_suite(30, 1000000);
    CHECK(a.ok());
    SuiteReport b = verify_construction_suite(30, 1000000);
    CHECK(a.lines == b.lines);
}
