#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridgenus/graph.hpp"

namespace gridgenus {

using Dart = std::pair<Vertex, Vertex>;  // directed edge (from, to)

// Cyclic neighbor order at each vertex; encodes an orientable 2-cell
// embedding. Faces are recovered by the orbit rule: the dart after (u,v) is
// (v, w) where w follows u in the rotation at v.
struct RotationSystem {
    SimpleGraph graph;
    std::vector<std::vector<Vertex>> rot;
};

struct FaceTrace {
    std::vector<std::vector<Dart>> faces;  // each walk starts at its least dart
    std::vector<int> face_lengths;         // sorted ascending
    long long genus = 0;

    // Faces are identified by the lexicographically least dart on their walk.
    Dart face_id(size_t i) const { return faces[i].front(); }
};

CheckResult validate(const RotationSystem& e);

// Requires a connected underlying graph; throws std::invalid_argument else.
FaceTrace trace_faces(const RotationSystem& e);

bool is_quadrilateral(const FaceTrace& t);

// Index of the face whose walk contains the given dart.
size_t face_of_dart(const FaceTrace& t, Dart d);

// Index of the face whose vertex set equals `vertices` (sorted); nullopt if
// no such face or several.
std::optional<size_t> face_with_vertices(const FaceTrace& t, std::vector<Vertex> vertices);

// All faces with exactly that vertex set (two faces of an embedded cycle can
// share their vertices).
std::vector<size_t> faces_with_vertices(const FaceTrace& t, std::vector<Vertex> vertices);

// True when the pairing's first components follow walk_a's orientation and
// the second components follow walk_b reversed, as attach_handle requires.
bool handle_pairing_compatible(const std::vector<Dart>& walk_a, const std::vector<Dart>& walk_b,
                               const std::vector<std::pair<Vertex, Vertex>>& pairing);

// Joins two disjoint rotation systems with a handle between face_a of `a`
// and face_b of `b`, threading one new edge per pairing entry through the
// tube. Vertices of `b` are shifted by a.graph.n in the result; the pairing
// is given as (vertex of a, vertex of b in b's own ids). Pairing order must
// follow face_a's boundary orientation and face_b's orientation reversed.
RotationSystem attach_handle(const RotationSystem& a, Dart face_a, const RotationSystem& b,
                             Dart face_b, const std::vector<std::pair<Vertex, Vertex>>& pairing);

// Same surgery between two distinct faces of one system.
RotationSystem attach_handle(const RotationSystem& sys, Dart face_a, Dart face_b,
                             const std::vector<std::pair<Vertex, Vertex>>& pairing);

// Reverse every rotation; flips the global orientation, preserving genus.
RotationSystem reflect(const RotationSystem& e);

// perm[old] = new id; permutes vertices of graph and rotations alike.
RotationSystem relabel(const RotationSystem& e, const std::vector<Vertex>& perm);

// Embedded subgraph: keep only `keep` vertices and the edges induced among
// them; rotations become subsequences. Returns the system (re-indexed
// 0..k-1) plus the map new id -> old id.
std::pair<RotationSystem, std::vector<Vertex>> restrict_system(const RotationSystem& e,
                                                               const std::vector<Vertex>& keep);

std::string serialize_rotation(const RotationSystem& e);
RotationSystem parse_rotation(const std::string& text);

// Same embedding up to the starting points of the cyclic lists.
bool same_rotation(const RotationSystem& a, const RotationSystem& b);

}  // namespace gridgenus
