#include "gridgenus/constructions.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gridgenus/cubical.hpp"
#include "gridgenus/formulas.hpp"

namespace gridgenus {

namespace {

// Work axis i of the arranged 3-parameter spec came from user axis perm[i].
struct Arrangement {
    std::array<long long, 3> beta;
    std::vector<int> perm;
    int even_count;
};

Arrangement arrange(const GridSpec& spec, bool want_even) {
    GridSpec norm = spec.normalized();
    if (norm.dimension() != 3)
        throw std::invalid_argument("construction needs a spec with exactly 3 nonzero parameters");
    std::vector<long long> odds, evens;
    for (long long a : norm.params) (a % 2 ? odds : evens).push_back(a);
    Arrangement out;
    out.even_count = static_cast<int>(evens.size());
    if (want_even && evens.empty())
        throw std::invalid_argument("all parameters odd: use the quadrilateral construction");
    if (!want_even && !evens.empty())
        throw std::invalid_argument("even parameter present: use the handle construction");
    // Statement positions: odds first, evens last, both non-increasing.
    std::vector<long long> b;
    b.insert(b.end(), odds.begin(), odds.end());
    b.insert(b.end(), evens.begin(), evens.end());
    std::copy(b.begin(), b.end(), out.beta.begin());
    std::vector<bool> used(spec.params.size(), false);
    for (long long v : b) {
        for (size_t j = 0; j < spec.params.size(); ++j)
            if (!used[j] && spec.params[j] == v) {
                used[j] = true;
                out.perm.push_back(static_cast<int>(j));
                break;
            }
    }
    return out;
}

// Relabel an embedding whose vertices carry work-space coordinates back to
// the ids of grid_graph(user_spec).
RotationSystem to_user_ids(const RotationSystem& sys, const std::vector<Coord3>& coord_of,
                           const GridSpec& user_spec, const std::vector<int>& axis_perm) {
    std::vector<Vertex> perm(sys.graph.n);
    for (Vertex v = 0; v < sys.graph.n; ++v) {
        std::vector<long long> uc(user_spec.params.size(), 0);
        for (int i = 0; i < 3; ++i) uc[axis_perm[i]] = coord_of[v][i];
        perm[v] = coords_vertex(user_spec, uc);
    }
    RotationSystem out = relabel(sys, perm);
    if (out.graph.edges != grid_graph(user_spec).edges)
        throw std::logic_error("construction: relabeled embedding is not the grid graph");
    return out;
}

ConstructionReport finish_report(GridSpec spec, std::vector<int> perm, RotationSystem emb,
                                 long long claimed, std::string tag) {
    FaceTrace t = trace_faces(emb);
    ConstructionReport r;
    r.spec = std::move(spec);
    r.permutation = std::move(perm);
    r.traced_genus = t.genus;
    r.claimed_bound = claimed;
    r.face_profile = t.face_lengths;
    r.construction_case = std::move(tag);
    r.embedding = std::move(emb);
    return r;
}

}  // namespace

ConstructionReport quad_embedding_all_odd(const GridSpec& spec) {
    Arrangement ar = arrange(spec, false);
    auto [b1, b2, b3] = ar.beta;
    RotationSystem sys = skeleton_rotation(b1, b2, b3);
    GridSpec work({b1, b2, b3});
    std::vector<Coord3> coords(sys.graph.n);
    for (Vertex v = 0; v < sys.graph.n; ++v) {
        auto c = vertex_coords(work, v);
        coords[v] = {c[0], c[1], c[2]};
    }
    RotationSystem emb = to_user_ids(sys, coords, spec, ar.perm);
    auto cnt = counts(work);
    long long claimed = 1 + cnt.edges / 4 - cnt.vertices / 2;
    return finish_report(spec, ar.perm, std::move(emb), claimed, "all-odd");
}

ConstructionReport prism_embedding(long long a) {
    if (a < 1) throw std::invalid_argument("prism_embedding: parameter must be >= 1");
    GridSpec spec({a, 1, 1});
    BoundarySurface s = boundary_surface(cube_set(a, 1, 1));
    RotationSystem local = surface_rotation(s);
    RotationSystem emb = to_user_ids(local, s.vertices, spec, {0, 1, 2});
    ConstructionReport r = finish_report(spec, {0, 1, 2}, std::move(emb), 0, "prism");
    return r;
}

namespace {

struct HandlePlan {
    std::array<Coord3, 4> inner_corners;  // corners of the face removed from S_I
    int axis;                             // connecting edges point along +axis
};

Coord3 shift(Coord3 c, int axis, long long d) {
    c[axis] += d;
    return c;
}

std::vector<HandlePlan> plan_handles(const std::array<long long, 3>& b, int even_count) {
    std::vector<HandlePlan> out;
    auto quad = [](int axis, Coord3 base, long long u0, long long u1) {
        // Face of constant `axis` coordinate; the four corners offset by
        // {0,1} along the other two axes (u then v).
        int ua = (axis + 1) % 3, va = (axis + 2) % 3;
        HandlePlan h;
        h.axis = axis;
        int k = 0;
        for (long long du : {0, 1})
            for (long long dv : {0, 1}) {
                Coord3 c = base;
                c[ua] += u0 + du;
                c[va] += u1 + dv;
                h.inner_corners[k++] = c;
            }
        return h;
    };
    auto [b1, b2, b3] = b;
    if (even_count == 1) {
        // Faces centered at (1/2+2m, 1/2+2n, b3-1).
        for (long long m = 0; 2 * m + 1 <= b1; ++m)
            for (long long n = 0; 2 * n + 1 <= b2; ++n)
                out.push_back(quad(2, {0, 0, b3 - 1}, 2 * m, 2 * n));
    } else if (even_count == 2) {
        for (long long m = 0; 2 * m + 1 <= b1; ++m)
            for (long long n = 0; 2 * n + 1 <= b3 - 1; ++n)
                out.push_back(quad(1, {0, b2 - 1, 0}, 2 * n, 2 * m));
        for (long long m = 0; 2 * m + 1 <= b1; ++m)
            for (long long n = 0; 2 * n + 1 <= b2 - 1; ++n)
                out.push_back(quad(2, {0, 0, b3 - 1}, 2 * m, 2 * n));
    } else {
        for (long long m = 0; 2 * m + 1 <= b2 - 1; ++m)
            for (long long n = 0; 2 * n + 1 <= b3 - 1; ++n)
                out.push_back(quad(0, {b1 - 1, 0, 0}, 2 * m, 2 * n));
        for (long long m = 0; 2 * m + 1 <= b1 - 1; ++m)
            for (long long n = 0; 2 * n + 1 <= b3 - 1; ++n)
                out.push_back(quad(1, {0, b2 - 1, 0}, 2 * n, 2 * m));
        for (long long m = 0; 2 * m + 1 <= b1 - 1; ++m)
            for (long long n = 0; 2 * n + 1 <= b2 - 1; ++n)
                out.push_back(quad(2, {0, 0, b3 - 1}, 2 * m, 2 * n));
    }
    return out;
}

std::vector<Coord3> j_vertices(const std::array<long long, 3>& b, int even_count) {
    auto [b1, b2, b3] = b;
    std::vector<Coord3> out;
    for (long long x = 0; x <= b1; ++x)
        for (long long y = 0; y <= b2; ++y)
            for (long long z = 0; z <= b3; ++z) {
                bool in_j = false;
                if (even_count == 1)
                    in_j = z == b3;
                else if (even_count == 2)
                    in_j = y == b2 || z == b3;
                else
                    in_j = x == b1 || y == b2 || z == b3;
                if (in_j) out.push_back({x, y, z});
            }
    return out;
}

struct JSphere {
    RotationSystem sys;               // restricted to the shell, local ids
    std::vector<Coord3> coord_of;     // local id -> coordinates
    std::map<Coord3, Vertex> id_of;   // coordinates -> local id
};

JSphere build_j_sphere(const std::array<long long, 3>& b, int even_count) {
    BoundarySurface box = boundary_surface(box_cubes(b[0], b[1], b[2]));
    RotationSystem whole = surface_rotation(box);
    std::map<Coord3, Vertex> box_id;
    for (size_t i = 0; i < box.vertices.size(); ++i)
        box_id[box.vertices[i]] = static_cast<Vertex>(i);
    std::vector<Vertex> keep;
    for (const Coord3& c : j_vertices(b, even_count)) keep.push_back(box_id.at(c));
    auto [sub, map_back] = restrict_system(whole, keep);
    JSphere out;
    out.sys = std::move(sub);
    out.coord_of.resize(map_back.size());
    for (size_t i = 0; i < map_back.size(); ++i) {
        out.coord_of[i] = box.vertices[map_back[i]];
        out.id_of[out.coord_of[i]] = static_cast<Vertex>(i);
    }
    return out;
}

// Face of `t` whose vertex set is `verts` and whose walk runs opposite to
// the pairing order (the attach_handle precondition).
std::optional<Dart> pick_compatible_face(const FaceTrace& t, const std::vector<Vertex>& verts,
                                         const std::vector<Dart>& walk_a,
                                         const std::vector<std::pair<Vertex, Vertex>>& pairing) {
    for (size_t idx : faces_with_vertices(t, verts)) {
        if (handle_pairing_compatible(walk_a, t.faces[idx], pairing))
            return t.faces[idx].front();
    }
    return std::nullopt;
}

}  // namespace

ConstructionReport even_case_embedding(const GridSpec& spec) {
    Arrangement ar = arrange(spec, true);
    const auto b = ar.beta;
    GridSpec work({b[0], b[1], b[2]});

    // Odd core.
    std::array<long long, 3> ip = b;
    if (ar.even_count == 1)
        ip[2] -= 1;
    else if (ar.even_count == 2)
        ip[1] -= 1, ip[2] -= 1;
    else
        ip[0] -= 1, ip[1] -= 1, ip[2] -= 1;
    GridSpec ispec({ip[0], ip[1], ip[2]});
    RotationSystem inner = skeleton_rotation(ip[0], ip[1], ip[2]);
    const int n_inner = inner.graph.n;

    JSphere shell = build_j_sphere(b, ar.even_count);
    std::vector<HandlePlan> handles = plan_handles(b, ar.even_count);
    if (handles.empty()) throw std::logic_error("even_case_embedding: no handles planned");

    auto inner_id = [&](const Coord3& c) {
        return coords_vertex(ispec, {c[0], c[1], c[2]});
    };

    // Corners of the inner face in its walk order, plus the matched pairing.
    auto make_pairing = [&](const FaceTrace& t, const HandlePlan& h, int shell_offset)
        -> std::tuple<Dart, std::vector<Dart>, std::vector<std::pair<Vertex, Vertex>>> {
        std::vector<Vertex> iverts;
        for (const Coord3& c : h.inner_corners) iverts.push_back(inner_id(c));
        auto hits = faces_with_vertices(t, iverts);
        if (hits.empty()) throw std::logic_error("even_case_embedding: inner face missing");
        const auto& walk = t.faces[hits.front()];
        std::vector<std::pair<Vertex, Vertex>> pairing;
        for (const Dart& d : walk) {
            Vertex iv = d.first;
            Coord3 c{0, 0, 0};
            auto cc = vertex_coords(ispec, iv);
            c = {cc[0], cc[1], cc[2]};
            Vertex jv = shell.id_of.at(shift(c, h.axis, 1)) + shell_offset;
            pairing.push_back({iv, jv});
        }
        return {walk.front(), walk, pairing};
    };

    // Decide the shell's global orientation on the first handle.
    {
        FaceTrace it = trace_faces(inner);
        auto [ia, iwalk, pairing0] = make_pairing(it, handles[0], 0);
        std::vector<Vertex> jverts;
        for (auto [p, q] : pairing0) jverts.push_back(q);
        FaceTrace jt = trace_faces(shell.sys);
        if (!pick_compatible_face(jt, jverts, iwalk, pairing0)) {
            shell.sys = reflect(shell.sys);
            jt = trace_faces(shell.sys);
            if (!pick_compatible_face(jt, jverts, iwalk, pairing0))
                throw std::logic_error("even_case_embedding: no orientation fits the first handle");
        }
    }

    RotationSystem combined;
    for (size_t h = 0; h < handles.size(); ++h) {
        if (h == 0) {
            FaceTrace it = trace_faces(inner);
            auto [ia, iwalk, pairing] = make_pairing(it, handles[0], 0);
            std::vector<Vertex> jverts;
            for (auto [p, q] : pairing) jverts.push_back(q);
            FaceTrace jt = trace_faces(shell.sys);
            auto jd = pick_compatible_face(jt, jverts, iwalk, pairing);
            if (!jd) throw std::logic_error("even_case_embedding: shell face not compatible");
            combined = attach_handle(inner, ia, shell.sys, *jd, pairing);
        } else {
            FaceTrace t = trace_faces(combined);
            auto [ia, iwalk, pairing] = make_pairing(t, handles[h], n_inner);
            std::vector<Vertex> jverts;
            for (auto [p, q] : pairing) jverts.push_back(q);
            auto jd = pick_compatible_face(t, jverts, iwalk, pairing);
            if (!jd) throw std::logic_error("even_case_embedding: handle face not compatible");
            combined = attach_handle(combined, ia, *jd, pairing);
        }
    }

    // Back to the caller's grid ids.
    std::vector<Coord3> coord_of(combined.graph.n);
    for (Vertex v = 0; v < n_inner; ++v) {
        auto c = vertex_coords(ispec, v);
        coord_of[v] = {c[0], c[1], c[2]};
    }
    for (Vertex j = 0; j < static_cast<Vertex>(shell.coord_of.size()); ++j)
        coord_of[n_inner + j] = shell.coord_of[j];
    RotationSystem emb = to_user_ids(combined, coord_of, spec, ar.perm);

    long long inner_genus = *white_genus(ispec);
    long long claimed = inner_genus + static_cast<long long>(handles.size()) - 1;
    std::string tag = ar.even_count == 1 ? "one-even" : ar.even_count == 2 ? "two-even" : "three-even";
    return finish_report(spec, ar.perm, std::move(emb), claimed, tag);
}

Rational perimeter_formula(const GridSpec& spec) {
    GridSpec norm = spec.normalized();
    if (norm.dimension() != 3)
        throw std::invalid_argument("perimeter_formula needs exactly 3 nonzero parameters");
    std::vector<long long> odds, evens;
    for (long long a : norm.params) (a % 2 ? odds : evens).push_back(a);
    auto c = counts(norm);
    if (evens.empty()) {
        // No handles, no outer face: the surface is the quadrilateral one.
        return Rational(1) + Rational(c.edges, 4) - Rational(c.vertices, 2);
    }
    long long P = evens.size() == 1
                      ? 2 * (odds[0] + odds[1])
                      : 2 * (norm.params[0] + norm.params[1] + norm.params[2]);
    Rational g = Rational(1, 2) + Rational(c.edges, 4) - Rational(c.vertices, 2) + Rational(P, 8);
    if (g.denominator() != 1)
        throw std::logic_error("perimeter_formula: non-integer genus (parameters mis-sorted)");
    return g;
}

long long perimeter_genus(const GridSpec& spec) {
    return boost::rational_cast<long long>(perimeter_formula(spec));
}

namespace {

long long white_or_case_bound(const GridSpec& norm);

// Leaf evaluation for the peeling recursion.
long long peel_bound(std::vector<long long> params, std::map<std::vector<long long>, long long>& memo);

long long leaf_value(const GridSpec& s, std::map<std::vector<long long>, long long>& memo) {
    GridSpec norm = s.normalized();
    int k = norm.dimension();
    if (k <= 2) return 0;
    if (auto w = white_genus(norm)) return *w;
    if (k == 3) return white_or_case_bound(norm);
    return peel_bound(norm.params, memo);
}

long long white_or_case_bound(const GridSpec& norm) {
    if (auto w = white_genus(norm)) return *w;
    return perimeter_genus(norm);
}

long long peel_bound(std::vector<long long> params, std::map<std::vector<long long>, long long>& memo) {
    auto it = memo.find(params);
    if (it != memo.end()) return it->second;
    std::vector<long long> rest(params.begin() + 1, params.end());
    std::vector<long long> peeled = params;
    peeled[0] -= 1;
    long long prod = 1;
    for (long long a : rest) prod *= a + 1;
    long long val = leaf_value(GridSpec(peeled), memo) + leaf_value(GridSpec(rest), memo) + prod - 1;
    memo[params] = val;
    return val;
}

}  // namespace

long long recursive_upper_bound(const GridSpec& spec) {
    GridSpec norm = spec.normalized();
    int k = norm.dimension();
    if (k <= 2) return 0;
    if (k == 3) return white_or_case_bound(norm);
    std::map<std::vector<long long>, long long> memo;
    return peel_bound(norm.params, memo);
}

}  // namespace gridgenus
