#include "gridgenus/cubical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gridgenus {

CubeSet cube_set(long long a1, long long a2, long long a3) {
    if (a1 < 1 || a2 < 1 || a3 < 1)
        throw std::invalid_argument("cube_set: parameters must be >= 1");
    CubeSet c;
    for (long long n1 = 0; n1 < a1; ++n1)
        for (long long n2 = 0; n2 < a2; ++n2)
            for (long long n3 = 0; n3 < a3; ++n3) {
                int even = (n1 % 2 == 0) + (n2 % 2 == 0) + (n3 % 2 == 0);
                if (even >= 2) c.cubes.push_back({n1, n2, n3});
            }
    return c;
}

CubeSet box_cubes(long long a1, long long a2, long long a3) {
    if (a1 < 1 || a2 < 1 || a3 < 1)
        throw std::invalid_argument("box_cubes: parameters must be >= 1");
    CubeSet c;
    for (long long n1 = 0; n1 < a1; ++n1)
        for (long long n2 = 0; n2 < a2; ++n2)
            for (long long n3 = 0; n3 < a3; ++n3) c.cubes.push_back({n1, n2, n3});
    return c;
}

namespace {

Coord3 add(Coord3 a, const Coord3& b) {
    for (int i = 0; i < 3; ++i) a[i] += b[i];
    return a;
}

Coord3 unit(int axis) {
    Coord3 e{0, 0, 0};
    e[axis] = 1;
    return e;
}

// Outward-oriented corner loop of the face of the cube at `pos` facing
// direction sign*e_axis. (axis,b,c) is the right-handed cyclic frame.
std::array<Coord3, 4> face_loop(const Coord3& pos, int axis, int sign) {
    int b = (axis + 1) % 3, c = (axis + 2) % 3;
    Coord3 anchor = pos;
    if (sign > 0) anchor = add(anchor, unit(axis));
    if (sign > 0)
        return {anchor, add(anchor, unit(b)), add(add(anchor, unit(b)), unit(c)),
                add(anchor, unit(c))};
    return {anchor, add(anchor, unit(c)), add(add(anchor, unit(c)), unit(b)),
            add(anchor, unit(b))};
}

}  // namespace

BoundarySurface boundary_surface(const CubeSet& c) {
    if (c.cubes.empty()) throw std::invalid_argument("boundary_surface: empty cube set");
    std::set<Coord3> present(c.cubes.begin(), c.cubes.end());

    std::vector<std::array<Coord3, 4>> loops;
    for (const Coord3& pos : present) {
        for (int axis = 0; axis < 3; ++axis) {
            for (int sign : {-1, +1}) {
                Coord3 nb = pos;
                nb[axis] += sign;
                if (!present.count(nb)) loops.push_back(face_loop(pos, axis, sign));
            }
        }
    }

    BoundarySurface s;
    {
        std::set<Coord3> vs;
        for (const auto& loop : loops)
            for (const auto& p : loop) vs.insert(p);
        s.vertices.assign(vs.begin(), vs.end());
    }
    std::map<Coord3, int> vid;
    for (size_t i = 0; i < s.vertices.size(); ++i) vid[s.vertices[i]] = static_cast<int>(i);

    std::map<Dart, int> dart_count;
    for (const auto& loop : loops) {
        std::array<int, 4> sq;
        for (int i = 0; i < 4; ++i) sq[i] = vid[loop[i]];
        s.squares.push_back(sq);
        for (int i = 0; i < 4; ++i) {
            Dart d{sq[i], sq[(i + 1) % 4]};
            if (++dart_count[d] > 1)
                throw std::runtime_error("boundary_surface: non-manifold edge (dart reused)");
        }
    }
    // Each skeleton edge must be traversed exactly once per direction.
    std::set<Edge> eset;
    for (const auto& [d, cnt] : dart_count) {
        if (!dart_count.count({d.second, d.first}))
            throw std::runtime_error("boundary_surface: edge bounds only one square");
        eset.insert({std::min(d.first, d.second), std::max(d.first, d.second)});
    }
    s.edges.assign(eset.begin(), eset.end());

    // Vertex fans must be single cycles: the per-vertex successor maps (built
    // from square corners) must each form one cycle over the neighbors.
    {
        std::vector<std::map<int, int>> succ(s.vertices.size());
        for (const auto& sq : s.squares)
            for (int i = 0; i < 4; ++i) {
                int p = sq[i], v = sq[(i + 1) % 4], nxt = sq[(i + 2) % 4];
                if (!succ[v].emplace(p, nxt).second)
                    throw std::runtime_error("boundary_surface: inconsistent corner fan");
            }
        for (size_t v = 0; v < succ.size(); ++v) {
            const auto& m = succ[v];
            if (m.empty()) throw std::runtime_error("boundary_surface: isolated vertex");
            int start = m.begin()->first, cur = start;
            size_t steps = 0;
            do {
                cur = m.at(cur);
                ++steps;
            } while (cur != start && steps <= m.size());
            if (steps != m.size())
                throw std::runtime_error("boundary_surface: non-manifold vertex fan");
        }
    }
    // Connectivity of the surface skeleton.
    {
        SimpleGraph g(static_cast<int>(s.vertices.size()), s.edges);
        if (!is_connected(g)) throw std::runtime_error("boundary_surface: surface is disconnected");
    }

    long long V = static_cast<long long>(s.vertices.size());
    long long E = static_cast<long long>(s.edges.size());
    long long F = static_cast<long long>(s.squares.size());
    long long chi = V - E + F;
    if ((2 - chi) % 2 != 0 || chi > 2)
        throw std::runtime_error("boundary_surface: bad Euler characteristic");
    s.genus = (2 - chi) / 2;
    return s;
}

std::pair<SimpleGraph, std::vector<Coord3>> skeleton_graph(const CubeSet& c) {
    BoundarySurface s = boundary_surface(c);
    return {SimpleGraph(static_cast<int>(s.vertices.size()), s.edges), s.vertices};
}

RotationSystem surface_rotation(const BoundarySurface& s) {
    int n = static_cast<int>(s.vertices.size());
    std::vector<std::map<int, int>> succ(n);
    for (const auto& sq : s.squares)
        for (int i = 0; i < 4; ++i) succ[sq[(i + 1) % 4]][sq[i]] = sq[(i + 2) % 4];
    std::vector<std::vector<Vertex>> rot(n);
    for (int v = 0; v < n; ++v) {
        const auto& m = succ[v];
        int start = m.begin()->first, cur = start;
        do {
            rot[v].push_back(cur);
            cur = m.at(cur);
        } while (cur != start);
    }
    return {SimpleGraph(n, s.edges), std::move(rot)};
}

RotationSystem skeleton_rotation(long long a1, long long a2, long long a3) {
    for (long long a : {a1, a2, a3})
        if (a % 2 == 0)
            throw std::invalid_argument(
                "skeleton_rotation: all parameters must be odd (the skeleton of an "
                "even-parameter surface is a proper subgraph of the grid)");
    CubeSet c = cube_set(a1, a2, a3);
    BoundarySurface s = boundary_surface(c);
    RotationSystem local = surface_rotation(s);

    GridSpec spec({a1, a2, a3});
    auto want = counts(spec);
    if (static_cast<long long>(s.vertices.size()) != want.vertices ||
        static_cast<long long>(s.edges.size()) != want.edges)
        throw std::logic_error("skeleton_rotation: skeleton does not match the grid graph");
    std::vector<Vertex> perm(local.graph.n);
    for (Vertex v = 0; v < local.graph.n; ++v) {
        const Coord3& p = s.vertices[v];
        perm[v] = coords_vertex(spec, {p[0], p[1], p[2]});
    }
    RotationSystem out = relabel(local, perm);
    if (out.graph.edges != grid_graph(spec).edges)
        throw std::logic_error("skeleton_rotation: edge set differs from the grid graph");
    return out;
}

std::string export_off(const BoundarySurface& s) {
    std::ostringstream os;
    os << "OFF\n";
    os << s.vertices.size() << " " << s.squares.size() << " " << s.edges.size() << "\n";
    for (const auto& p : s.vertices) os << p[0] << " " << p[1] << " " << p[2] << "\n";
    for (const auto& sq : s.squares)
        os << "4 " << sq[0] << " " << sq[1] << " " << sq[2] << " " << sq[3] << "\n";
    return os.str();
}

std::string export_obj(const BoundarySurface& s) {
    std::ostringstream os;
    for (const auto& p : s.vertices) os << "v " << p[0] << " " << p[1] << " " << p[2] << "\n";
    for (const auto& sq : s.squares)
        os << "f " << sq[0] + 1 << " " << sq[1] + 1 << " " << sq[2] + 1 << " " << sq[3] + 1
           << "\n";
    return os.str();
}

}  // namespace gridgenus
