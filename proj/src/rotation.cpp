#include "gridgenus/rotation.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gridgenus {

CheckResult validate(const RotationSystem& e) {
    if (static_cast<int>(e.rot.size()) != e.graph.n)
        return CheckResult::fail("rotation table size does not match vertex count");
    for (Vertex v = 0; v < e.graph.n; ++v) {
        std::vector<Vertex> r = e.rot[v];
        std::sort(r.begin(), r.end());
        if (std::adjacent_find(r.begin(), r.end()) != r.end())
            return CheckResult::fail("duplicate neighbor in rotation");
        for (Vertex w : r)
            if (w < 0 || w >= e.graph.n || !e.graph.adjacent(v, w))
                return CheckResult::fail("foreign dart");
        if (r.size() != e.graph.adj[v].size()) return CheckResult::fail("incomplete rotation");
    }
    return CheckResult::pass();
}

namespace {

int rot_index(const std::vector<Vertex>& rot, Vertex w) {
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == w) return static_cast<int>(i);
    return -1;
}

// Start each face walk at its lexicographically least dart.
std::vector<Dart> canonical_walk(std::vector<Dart> walk) {
    auto it = std::min_element(walk.begin(), walk.end());
    std::rotate(walk.begin(), it, walk.end());
    return walk;
}

}  // namespace

FaceTrace trace_faces(const RotationSystem& e) {
    auto chk = validate(e);
    if (!chk.ok) throw std::invalid_argument("trace_faces: invalid rotation system: " + chk.reason);
    if (!is_connected(e.graph))
        throw std::invalid_argument("trace_faces: graph must be connected");

    std::map<Dart, bool> used;
    for (auto [u, v] : e.graph.edges) {
        used[{u, v}] = false;
        used[{v, u}] = false;
    }
    FaceTrace t;
    for (auto& [start, flag] : used) {
        if (flag) continue;
        std::vector<Dart> walk;
        Dart d = start;
        do {
            used[d] = true;
            walk.push_back(d);
            auto [u, v] = d;
            const auto& rv = e.rot[v];
            int i = rot_index(rv, u);
            Vertex w = rv[(i + 1) % rv.size()];
            d = {v, w};
        } while (d != start);
        t.faces.push_back(canonical_walk(std::move(walk)));
    }
    std::sort(t.faces.begin(), t.faces.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (const auto& f : t.faces) t.face_lengths.push_back(static_cast<int>(f.size()));
    std::sort(t.face_lengths.begin(), t.face_lengths.end());

    long long V = e.graph.n, E = e.graph.edge_count(), F = static_cast<long long>(t.faces.size());
    long long chi = V - E + F;
    if ((2 - chi) % 2 != 0 || chi > 2)
        throw std::logic_error("trace_faces: Euler characteristic " + std::to_string(chi) +
                               " is not of the form 2-2g");
    t.genus = (2 - chi) / 2;
    return t;
}

bool is_quadrilateral(const FaceTrace& t) {
    for (const auto& f : t.faces) {
        if (f.size() != 4) return false;
        std::vector<Vertex> vs;
        for (auto [u, v] : f) vs.push_back(u);
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    }
    return true;
}

size_t face_of_dart(const FaceTrace& t, Dart d) {
    for (size_t i = 0; i < t.faces.size(); ++i)
        for (const Dart& x : t.faces[i])
            if (x == d) return i;
    throw std::invalid_argument("face_of_dart: dart not present in any face");
}

std::vector<size_t> faces_with_vertices(const FaceTrace& t, std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    std::vector<size_t> hits;
    for (size_t i = 0; i < t.faces.size(); ++i) {
        std::vector<Vertex> vs;
        for (auto [u, v] : t.faces[i]) vs.push_back(u);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        if (vs == vertices) hits.push_back(i);
    }
    return hits;
}

std::optional<size_t> face_with_vertices(const FaceTrace& t, std::vector<Vertex> vertices) {
    auto hits = faces_with_vertices(t, std::move(vertices));
    if (hits.size() == 1) return hits.front();
    return std::nullopt;
}

namespace {

struct Corner {
    Vertex at;       // the pairing vertex
    Vertex in_from;  // neighbor preceding it on the face walk
    int walk_pos;    // index of the in-dart on the walk
};

// Locate the corner of each pairing vertex on the face walk (first
// occurrence). Throws when a vertex is not on the boundary.
std::vector<Corner> find_corners(const std::vector<Dart>& walk, const std::vector<Vertex>& verts,
                                 const char* which) {
    std::vector<Corner> out;
    for (Vertex p : verts) {
        bool found = false;
        for (size_t i = 0; i < walk.size() && !found; ++i) {
            if (walk[i].second == p) {
                out.push_back({p, walk[i].first, static_cast<int>(i)});
                found = true;
            }
        }
        if (!found)
            throw std::invalid_argument(std::string("attach_handle: pairing vertex not on the ") +
                                        which + " face");
    }
    return out;
}

// Exactly one cyclic descent <=> the positions are a rotation of an
// increasing sequence.
bool cyclically_increasing(const std::vector<int>& pos) {
    if (pos.size() <= 1) return true;
    int descents = 0;
    for (size_t i = 0; i < pos.size(); ++i) {
        int a = pos[i], b = pos[(i + 1) % pos.size()];
        if (a == b) return false;
        if (a > b) ++descents;
    }
    return descents == 1;
}

}  // namespace

bool handle_pairing_compatible(const std::vector<Dart>& walk_a, const std::vector<Dart>& walk_b,
                               const std::vector<std::pair<Vertex, Vertex>>& pairing) {
    std::vector<Vertex> ps, qs;
    for (auto [p, q] : pairing) {
        ps.push_back(p);
        qs.push_back(q);
    }
    try {
        auto ca = find_corners(walk_a, ps, "first");
        auto cb = find_corners(walk_b, qs, "second");
        std::vector<int> pos_a, pos_b;
        for (const auto& c : ca) pos_a.push_back(c.walk_pos);
        for (const auto& c : cb) pos_b.push_back(c.walk_pos);
        std::vector<int> pos_b_rev(pos_b.rbegin(), pos_b.rend());
        return cyclically_increasing(pos_a) && cyclically_increasing(pos_b_rev);
    } catch (const std::invalid_argument&) {
        return false;
    }
}

namespace {

// Core surgery on one rotation table. Both faces belong to `rot`'s system;
// pairing vertices are in the combined id space.
void splice_handle(std::vector<std::vector<Vertex>>& rot, const std::vector<Dart>& walk_a,
                   const std::vector<Dart>& walk_b,
                   const std::vector<std::pair<Vertex, Vertex>>& pairing) {
    if (pairing.empty() || pairing.size() > 4)
        throw std::invalid_argument("attach_handle: pairing must carry 1 to 4 edges");
    std::vector<Vertex> ps, qs;
    for (auto [p, q] : pairing) {
        ps.push_back(p);
        qs.push_back(q);
    }
    auto ca = find_corners(walk_a, ps, "first");
    auto cb = find_corners(walk_b, qs, "second");
    std::vector<int> pos_a, pos_b;
    for (const auto& c : ca) pos_a.push_back(c.walk_pos);
    for (const auto& c : cb) pos_b.push_back(c.walk_pos);
    std::vector<int> pos_b_rev(pos_b.rbegin(), pos_b.rend());
    if (!cyclically_increasing(pos_a) || !cyclically_increasing(pos_b_rev))
        throw std::invalid_argument("attach_handle: pairing order not monotone along the boundaries");

    // Insert each new edge immediately after the dart preceding its corner.
    auto insert_after = [&](Vertex at, Vertex after, Vertex added) {
        auto& r = rot[at];
        int i = rot_index(r, after);
        r.insert(r.begin() + i + 1, added);
    };
    for (size_t i = 0; i < pairing.size(); ++i) {
        insert_after(ca[i].at, ca[i].in_from, cb[i].at);
        insert_after(cb[i].at, cb[i].in_from, ca[i].at);
    }
}

}  // namespace

RotationSystem attach_handle(const RotationSystem& a, Dart face_a, const RotationSystem& b,
                             Dart face_b, const std::vector<std::pair<Vertex, Vertex>>& pairing) {
    FaceTrace ta = trace_faces(a), tb = trace_faces(b);
    const auto& walk_a = ta.faces[face_of_dart(ta, face_a)];
    std::vector<Dart> walk_b = tb.faces[face_of_dart(tb, face_b)];
    const int off = a.graph.n;
    for (auto& [u, v] : walk_b) {
        u += off;
        v += off;
    }

    std::vector<std::vector<Vertex>> rot = a.rot;
    rot.resize(a.graph.n + b.graph.n);
    for (Vertex v = 0; v < b.graph.n; ++v) {
        rot[off + v] = b.rot[v];
        for (Vertex& w : rot[off + v]) w += off;
    }
    std::vector<std::pair<Vertex, Vertex>> shifted;
    for (auto [p, q] : pairing) shifted.push_back({p, q + off});
    splice_handle(rot, walk_a, walk_b, shifted);

    std::vector<Edge> es = a.graph.edges;
    for (auto [u, v] : b.graph.edges) es.push_back({u + off, v + off});
    for (auto [p, q] : shifted) es.push_back({std::min(p, q), std::max(p, q)});
    RotationSystem out{SimpleGraph(a.graph.n + b.graph.n, std::move(es)), std::move(rot)};
    return out;
}

RotationSystem attach_handle(const RotationSystem& sys, Dart face_a, Dart face_b,
                             const std::vector<std::pair<Vertex, Vertex>>& pairing) {
    FaceTrace t = trace_faces(sys);
    size_t ia = face_of_dart(t, face_a), ib = face_of_dart(t, face_b);
    if (ia == ib) throw std::invalid_argument("attach_handle: the two faces must be distinct");
    std::vector<std::vector<Vertex>> rot = sys.rot;
    splice_handle(rot, t.faces[ia], t.faces[ib], pairing);
    std::vector<Edge> es = sys.graph.edges;
    for (auto [p, q] : pairing) es.push_back({std::min(p, q), std::max(p, q)});
    return {SimpleGraph(sys.graph.n, std::move(es)), std::move(rot)};
}

RotationSystem reflect(const RotationSystem& e) {
    RotationSystem out = e;
    for (auto& r : out.rot) std::reverse(r.begin(), r.end());
    return out;
}

RotationSystem relabel(const RotationSystem& e, const std::vector<Vertex>& perm) {
    std::vector<Edge> es;
    for (auto [u, v] : e.graph.edges) {
        Vertex a = perm[u], b = perm[v];
        es.push_back({std::min(a, b), std::max(a, b)});
    }
    std::vector<std::vector<Vertex>> rot(e.graph.n);
    for (Vertex v = 0; v < e.graph.n; ++v) {
        rot[perm[v]] = e.rot[v];
        for (Vertex& w : rot[perm[v]]) w = perm[w];
    }
    return {SimpleGraph(e.graph.n, std::move(es)), std::move(rot)};
}

std::pair<RotationSystem, std::vector<Vertex>> restrict_system(const RotationSystem& e,
                                                               const std::vector<Vertex>& keep) {
    auto [g, map_back] = induced_subgraph(e.graph, keep);
    std::vector<int> newid(e.graph.n, -1);
    for (size_t i = 0; i < map_back.size(); ++i) newid[map_back[i]] = static_cast<int>(i);
    std::vector<std::vector<Vertex>> rot(g.n);
    for (Vertex v = 0; v < g.n; ++v)
        for (Vertex w : e.rot[map_back[v]])
            if (newid[w] != -1) rot[v].push_back(newid[w]);
    return {RotationSystem{std::move(g), std::move(rot)}, map_back};
}

namespace {

std::vector<Vertex> canonical_cycle(std::vector<Vertex> r) {
    if (r.empty()) return r;
    auto it = std::min_element(r.begin(), r.end());
    std::rotate(r.begin(), it, r.end());
    return r;
}

}  // namespace

std::string serialize_rotation(const RotationSystem& e) {
    std::ostringstream os;
    os << "rotation " << e.graph.n << " " << e.graph.edges.size() << "\n";
    for (auto [u, v] : e.graph.edges) os << u << " " << v << "\n";
    for (Vertex v = 0; v < e.graph.n; ++v) {
        os << v << ":";
        for (Vertex w : canonical_cycle(e.rot[v])) os << " " << w;
        os << "\n";
    }
    return os.str();
}

RotationSystem parse_rotation(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    if (!(is >> tok) || tok != "rotation")
        throw std::invalid_argument("rotation file: missing header");
    int n;
    long long m;
    is >> n >> m;
    std::vector<Edge> es;
    for (long long i = 0; i < m; ++i) {
        int u, v;
        is >> u >> v;
        es.push_back({u, v});
    }
    SimpleGraph g(n, std::move(es));
    std::vector<std::vector<Vertex>> rot(n);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int v;
        char colon;
        ls >> v >> colon;
        Vertex w;
        while (ls >> w) rot[v].push_back(w);
    }
    RotationSystem out{std::move(g), std::move(rot)};
    auto chk = validate(out);
    if (!chk.ok) throw std::invalid_argument("rotation file: " + chk.reason);
    return out;
}

bool same_rotation(const RotationSystem& a, const RotationSystem& b) {
    if (a.graph.n != b.graph.n || a.graph.edges != b.graph.edges) return false;
    for (Vertex v = 0; v < a.graph.n; ++v)
        if (canonical_cycle(a.rot[v]) != canonical_cycle(b.rot[v])) return false;
    return true;
}

}  // namespace gridgenus
