#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gridgenus/cubical.hpp"
#include "gridgenus/formulas.hpp"
#include "gridgenus/grid.hpp"
#include "gridgenus/rotation.hpp"

using namespace gridgenus;

namespace {

RotationSystem square() {
    SimpleGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    return {c4, {{1, 3}, {0, 2}, {1, 3}, {0, 2}}};
}

}  // namespace

TEST_CASE("planar square traces to two quadrilaterals") {
    FaceTrace t = trace_faces(square());
    CHECK(t.faces.size() == 2);
    CHECK(t.face_lengths == std::vector<int>{4, 4});
    CHECK(t.genus == 0);
    CHECK(is_quadrilateral(t));
}

TEST_CASE("cube rotation traces to six quadrilaterals") {
    RotationSystem cube = skeleton_rotation(1, 1, 1);
    FaceTrace t = trace_faces(cube);
    CHECK(t.faces.size() == 6);
    CHECK(t.genus == 0);
    CHECK(is_quadrilateral(t));
}

TEST_CASE("dart coverage") {
    RotationSystem cube = skeleton_rotation(1, 1, 1);
    FaceTrace t = trace_faces(cube);
    std::set<Dart> darts;
    size_t total = 0;
    for (const auto& f : t.faces) {
        total += f.size();
        for (const Dart& d : f) darts.insert(d);
    }
    CHECK(total == 2 * cube.graph.edges.size());
    CHECK(darts.size() == total);
}

TEST_CASE("K33 attains genus 1 with some rotation") {
    // Exhaustive check lives in the oracle tests; here freeze one embedding
    // found by enumeration: the natural rotation of K33 happens to trace to
    // genus 1.
    SimpleGraph k33 = complete_bipartite(3, 3);
    RotationSystem sys{k33, {}};
    sys.rot.assign(6, {});
    for (int i = 0; i < 3; ++i) sys.rot[i] = {3, 4, 5};
    for (int j = 3; j < 6; ++j) sys.rot[j] = {0, 1, 2};
    FaceTrace t = trace_faces(sys);
    CHECK(t.genus >= 1);
}

TEST_CASE("validate rejects malformed rotations") {
    RotationSystem s = square();
    s.rot[0] = {1};  // missing neighbor 3
    auto r = validate(s);
    CHECK_FALSE(r.ok);
    CHECK(r.reason == "incomplete rotation");
    RotationSystem s2 = square();
    s2.rot[0] = {1, 2};  // 2 is not adjacent to 0
    auto r2 = validate(s2);
    CHECK_FALSE(r2.ok);
    CHECK(r2.reason == "foreign dart");
}

TEST_CASE("trace rejects disconnected graphs") {
    SimpleGraph two(4, {{0, 1}, {2, 3}});
    RotationSystem s{two, {{1}, {0}, {3}, {2}}};
    CHECK_THROWS_AS(trace_faces(s), std::invalid_argument);
}

TEST_CASE("attach_handle between two squares") {
    RotationSystem a = square(), b = square();
    FaceTrace ta = trace_faces(a);
    Dart fa = ta.face_id(0);
    const auto& walk_a = ta.faces[0];
    // pairing follows walk_a, and the partner square reversed
    FaceTrace tb = trace_faces(b);
    std::vector<Dart> walk_b;
    std::vector<std::pair<Vertex, Vertex>> pairing;
    // order partners against walk_b reversed
    std::vector<Vertex> bverts;
    for (const Dart& d : tb.faces[0]) bverts.push_back(d.first);
    for (size_t i = 0; i < 4; ++i)
        pairing.push_back({walk_a[i].first, bverts[(4 - i) % 4]});
    RotationSystem joined = attach_handle(a, fa, b, tb.face_id(0), pairing);
    CHECK(joined.graph.n == 8);
    CHECK(joined.graph.edge_count() == 12);
    FaceTrace t = trace_faces(joined);
    CHECK(t.genus == 0);  // one connecting tube between two spheres
    CHECK(t.faces.size() == 6);

    SUBCASE("a second handle adds one to the genus") {
        FaceTrace tj = trace_faces(joined);
        // the two original inner faces survive: find them by vertex sets
        auto ia = face_with_vertices(tj, {0, 1, 2, 3});
        auto ib = face_with_vertices(tj, {4, 5, 6, 7});
        REQUIRE(ia.has_value());
        REQUIRE(ib.has_value());
        const auto& wa = tj.faces[*ia];
        const auto& wb = tj.faces[*ib];
        std::vector<Vertex> bv;
        for (const Dart& d : wb) bv.push_back(d.first);
        // pick an alignment that is orientation-compatible and does not
        // duplicate the first tube's edges
        std::vector<std::pair<Vertex, Vertex>> pairing2;
        for (int off = 0; off < 4 && pairing2.empty(); ++off) {
            std::vector<std::pair<Vertex, Vertex>> cand;
            bool fresh = true;
            for (size_t i = 0; i < 4; ++i) {
                Vertex p = wa[i].first, q = bv[(off + 4 - i) % 4];
                if (joined.graph.adjacent(p, q)) fresh = false;
                cand.push_back({p, q});
            }
            if (fresh && handle_pairing_compatible(wa, wb, cand)) pairing2 = cand;
        }
        REQUIRE(!pairing2.empty());
        RotationSystem again = attach_handle(joined, tj.face_id(*ia), tj.face_id(*ib), pairing2);
        FaceTrace t2 = trace_faces(again);
        CHECK(t2.genus == 1);
    }
}

TEST_CASE("attach_handle rejects a vertex off the face") {
    RotationSystem a = square(), b = square();
    FaceTrace ta = trace_faces(a), tb = trace_faces(b);
    std::vector<std::pair<Vertex, Vertex>> bad{{0, 0}, {1, 3}, {2, 2}, {5, 1}};
    CHECK_THROWS_AS(attach_handle(a, ta.face_id(0), b, tb.face_id(0), bad),
                    std::invalid_argument);
}

TEST_CASE("attach_handle rejects non-monotone pairings") {
    RotationSystem a = square(), b = square();
    FaceTrace ta = trace_faces(a), tb = trace_faces(b);
    const auto& wa = ta.faces[0];
    std::vector<Vertex> bv;
    for (const Dart& d : tb.faces[0]) bv.push_back(d.first);
    // partners in the SAME cyclic order as walk_b: must be rejected
    std::vector<std::pair<Vertex, Vertex>> bad;
    for (size_t i = 0; i < 4; ++i) bad.push_back({wa[i].first, bv[i]});
    bool ok_somewhere = handle_pairing_compatible(wa, tb.faces[0], bad) &&
                        handle_pairing_compatible(wa, tb.faces[1], bad);
    CHECK_FALSE(ok_somewhere);
}

TEST_CASE("random rotations of small grids have valid integer genus") {
    std::mt19937 rng(20240817);
    for (const GridSpec& spec : {GridSpec({2, 2}), GridSpec({1, 1, 1}), GridSpec({3, 2})}) {
        SimpleGraph g = grid_graph(spec);
        long long cap = betti(spec) / 2;
        for (int it = 0; it < 200; ++it) {
            RotationSystem sys{g, {}};
            sys.rot.assign(g.n, {});
            for (int v = 0; v < g.n; ++v) {
                sys.rot[v] = g.adj[v];
                std::shuffle(sys.rot[v].begin(), sys.rot[v].end(), rng);
            }
            FaceTrace t = trace_faces(sys);
            CHECK(t.genus >= 0);
            CHECK(t.genus <= cap);
        }
    }
}

TEST_CASE("rotation serialization round-trips") {
    RotationSystem cube = skeleton_rotation(3, 1, 1);
    std::string s = serialize_rotation(cube);
    RotationSystem back = parse_rotation(s);
    CHECK(same_rotation(back, cube));
    CHECK(serialize_rotation(back) == s);
}

TEST_CASE("reflect preserves genus") {
    RotationSystem cube = skeleton_rotation(3, 3, 1);
    CHECK(trace_faces(cube).genus == trace_faces(reflect(cube)).genus);
}
