#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gridgenus/graph.hpp"
#include "gridgenus/grid.hpp"
#include "gridgenus/rotation.hpp"

namespace gridgenus {

using Coord3 = std::array<long long, 3>;

// Positions of translated unit cubes.
struct CubeSet {
    std::vector<Coord3> cubes;  // sorted lexicographically
};

// Quad-faced closed surface bounding a union of unit cubes. Square corner
// loops are oriented outward and globally consistent: every skeleton edge is
// traversed once in each direction.
struct BoundarySurface {
    std::vector<Coord3> vertices;               // sorted; index = vertex id
    std::vector<std::array<int, 4>> squares;    // corner vertex ids in loop order
    std::vector<Edge> edges;                    // skeleton edges
    long long genus = 0;
};

// The parity-constrained cube positions: at least two even components and
// n_i < a_i.
CubeSet cube_set(long long a1, long long a2, long long a3);

// Every position of the full a1 x a2 x a3 box.
CubeSet box_cubes(long long a1, long long a2, long long a3);

// Boundary of the solid union: a unit square is kept iff exactly one of its
// two incident cubes is present. Throws on empty input, non-manifold edges
// or vertices, and disconnected surfaces.
BoundarySurface boundary_surface(const CubeSet& c);

// Skeleton of the boundary as a plain graph, for any parameters.
// Returns the graph on boundary vertices plus their coordinates.
std::pair<SimpleGraph, std::vector<Coord3>> skeleton_graph(const CubeSet& c);

// Rotation system traced from the oriented squares: faces of the trace are
// exactly the squares. Vertex ids are the surface's local ids.
RotationSystem surface_rotation(const BoundarySurface& s);

// Quadrilateral embedding of G(a1,a2,a3) for odd parameters, on grid vertex
// ids (identity coordinate map). Throws when a parameter is even.
RotationSystem skeleton_rotation(long long a1, long long a2, long long a3);

std::string export_off(const BoundarySurface& s);
std::string export_obj(const BoundarySurface& s);

}  // namespace gridgenus
