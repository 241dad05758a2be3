#include <doctest.h>

#include "gridgenus/constructions.hpp"
#include "gridgenus/formulas.hpp"
#include "gridgenus/oracle.hpp"

using namespace gridgenus;

TEST_CASE("euler lower bound") {
    CHECK(euler_lower_bound(GridSpec({2, 2, 1})) == 1);     // 1/4 rounds up
    CHECK(euler_lower_bound(GridSpec({1, 1, 1, 1})) == 1);
    CHECK(euler_lower_bound(GridSpec({2, 1, 1, 1})) == 2);
    CHECK(euler_lower_bound(GridSpec({9})) == 0);
    CHECK(euler_lower_bound(GridSpec({3, 3})) == 0);
}

TEST_CASE("white genus") {
    CHECK(*white_genus(GridSpec({3, 3, 3})) == 5);
    CHECK(*white_genus(GridSpec({1, 1, 1, 1})) == 1);
    CHECK_FALSE(white_genus(GridSpec({2, 2, 1})).has_value());
    CHECK_FALSE(white_genus(GridSpec({3, 3})).has_value());
    CHECK(*white_genus(GridSpec({1, 1, 1})) == 0);
}

TEST_CASE("exact genus dispatch") {
    CHECK(*exact_genus(GridSpec({4, 2, 1})).genus == 2);
    CHECK(*exact_genus(GridSpec({5, 4, 1})).genus == 4);
    CHECK(*exact_genus(GridSpec({7, 2, 2})).genus == 7);
    CHECK(*exact_genus(GridSpec({5, 1, 1})).genus == 0);
    CHECK(*exact_genus(GridSpec({4, 4})).genus == 0);
    CHECK(*exact_genus(GridSpec({3, 3, 3})).genus == 5);
    CHECK_FALSE(exact_genus(GridSpec({4, 4, 2})).genus.has_value());
    // overlapping families agree: G(1,2,2) sorts into the (a1,a2,1) family
    CHECK(*exact_genus(GridSpec({1, 2, 2})).genus == 1);
    CHECK(*exact_genus(GridSpec({2, 2, 2})).genus == 2);
}

TEST_CASE("quadrilateral distance") {
    CHECK(quadrilateral_distance(GridSpec({3, 3, 3}), 5) == Rational(0));
    CHECK(quadrilateral_distance(GridSpec({2, 2, 1}), 1) == Rational(3, 4));
    CHECK(quadrilateral_distance(GridSpec({2, 2, 2}), 2) == Rational(1));
    // d_Q(G(2n,2,1)) = (2n+1)/4, strictly increasing
    Rational prev(-1);
    for (long long n = 1; n <= 4; ++n) {
        GridSpec s({2 * n, 2, 1});
        long long genus = *exact_genus(s).genus;
        Rational d = quadrilateral_distance(s, genus);
        CHECK(d == Rational(2 * n + 1, 4));
        CHECK(d > prev);
        prev = d;
    }
}

TEST_CASE("maximum genus") {
    CHECK(max_genus(GridSpec({1, 1, 1})) == 2);
    CHECK(max_genus(GridSpec({1, 1, 1, 1})) == 8);
    for (long long a : {1, 2, 3, 7}) CHECK(max_genus(GridSpec({a, 1, 1})) == 2 * a);
    // closed form equals floor(betti/2) on a broad sweep
    for (const GridSpec& spec : enumerate_specs(500))
        CHECK(max_genus(spec) == max_genus_closed_form(spec));
}

TEST_CASE("hypercube genus range") {
    // 1+(k-4)2^(k-3) .. (k-2)2^(k-2)
    auto cube = [](int k) { return GridSpec(std::vector<long long>(k, 1)); };
    CHECK(genus_range(cube(2)).low == 0);
    CHECK(genus_range(cube(2)).high == 0);
    CHECK(genus_range(cube(3)).low == 0);
    CHECK(genus_range(cube(3)).high == 2);
    CHECK(genus_range(cube(4)).low == 1);
    CHECK(genus_range(cube(4)).high == 8);
    CHECK(genus_range(cube(5)).low == 5);
    CHECK(genus_range(cube(5)).high == 24);
    CHECK_FALSE(genus_range(cube(4)).partial);
}

TEST_CASE("2-parameter genus range") {
    for (long long a1 : {1, 2, 3})
        for (long long a2 : {1, 2, 3}) {
            GenusRange r = genus_range(GridSpec({a1, a2}));
            CHECK(r.low == 0);
            CHECK(r.high == a1 * a2 / 2);
        }
}

TEST_CASE("planarity classification") {
    CHECK(classify_planar(GridSpec({7, 1, 1})).planar);
    CHECK_FALSE(classify_planar(GridSpec({2, 2, 1})).planar);
    CHECK_FALSE(classify_planar(GridSpec({1, 1, 1, 1})).planar);
    CHECK(classify_planar(GridSpec({9, 9})).planar);
    CHECK(classify_planar(GridSpec({1, 1, 1})).planar);
}

TEST_CASE("toroidality classification") {
    CHECK(classify_toroidal(GridSpec({3, 3, 1})).toroidal_2cell);
    CHECK(classify_toroidal(GridSpec({2, 2, 1})).toroidal_2cell);
    CHECK(classify_toroidal(GridSpec({3, 2, 1})).toroidal_2cell);
    CHECK_FALSE(classify_toroidal(GridSpec({4, 2, 1})).toroidal_2cell);
    CHECK(classify_toroidal(GridSpec({1, 1, 1, 1})).toroidal_2cell);
    CHECK_FALSE(classify_toroidal(GridSpec({2, 1, 1, 1})).toroidal_2cell);
    CHECK(classify_toroidal(GridSpec({2, 1})).toroidal_2cell);
    CHECK_FALSE(classify_toroidal(GridSpec({1, 1})).toroidal_2cell);
    CHECK(classify_toroidal(GridSpec({1, 1})).embeds_on_torus);
    CHECK(classify_toroidal(GridSpec({9})).embeds_on_torus);
    CHECK_FALSE(classify_toroidal(GridSpec({9})).toroidal_2cell);
    CHECK(classify_toroidal(GridSpec({7, 1, 1})).toroidal_2cell);
}

TEST_CASE("classifications agree with exact genus everywhere small") {
    for (const GridSpec& spec : enumerate_specs(64)) {
        ExactGenus e = exact_genus(spec);
        Classification pl = classify_planar(spec);
        Classification to = classify_toroidal(spec);
        if (e.genus) {
            CHECK(pl.planar == (*e.genus == 0));
            if (to.toroidal_2cell) CHECK(*e.genus <= 1);
            // 2-cell torus embedding exists iff genus <= 1 <= max genus
            bool in_range = *e.genus <= 1 && 1 <= max_genus(spec);
            if (spec.normalized().dimension() >= 2) CHECK(to.toroidal_2cell == in_range);
        }
    }
}

TEST_CASE("bipartite genus") {
    CHECK(bipartite_genus(3, 3) == 1);
    CHECK(bipartite_genus(2, 9) == 0);
    for (long long a = 1; a <= 5; ++a) CHECK(bipartite_genus(3, 4 * a) == a);
}

TEST_CASE("best bounds") {
    GenusBounds b221 = best_bounds(GridSpec({2, 2, 1}));
    CHECK(b221.exact);
    CHECK(b221.lower == 1);
    CHECK(b221.upper == 1);

    GenusBounds b442 = best_bounds(GridSpec({4, 4, 2}));
    CHECK_FALSE(b442.exact);
    CHECK(b442.lower == euler_lower_bound(GridSpec({4, 4, 2})));
    CHECK(b442.upper == perimeter_genus(GridSpec({4, 4, 2})));
    CHECK(b442.lower <= b442.upper);
    CHECK(b442.upper_source == "case-construction");

    GenusBounds b511 = best_bounds(GridSpec({5, 1, 1}));
    CHECK(b511.exact);
    CHECK(b511.lower == 0);

    // a packing bound can lift the lower end
    GenusBounds lifted = best_bounds(GridSpec({4, 4, 2}), 7);
    CHECK(lifted.lower == 7);
    CHECK(lifted.lower_source == "minor-packing");
}

TEST_CASE("sandwich invariant where exact genus is known") {
    for (const GridSpec& spec : enumerate_specs(100)) {
        if (spec.normalized().dimension() <= 1) continue;  // trees have no girth
        ExactGenus e = exact_genus(spec);
        if (!e.genus) continue;
        CHECK(euler_lower_bound(spec) <= *e.genus);
        CHECK(*e.genus <= max_genus(spec));
        if (spec.normalized().dimension() == 3)
            CHECK(*e.genus <= perimeter_genus(spec));
        Rational d = quadrilateral_distance(spec, *e.genus);
        CHECK(d >= Rational(0));
        auto pp = parity_profile(spec);
        if (pp.odd >= 3 && spec.normalized().dimension() >= 3) CHECK(d == Rational(0));
    }
}
