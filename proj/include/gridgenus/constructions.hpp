#pragma once

#include <string>
#include <vector>

#include "gridgenus/grid.hpp"
#include "gridgenus/rotation.hpp"

namespace gridgenus {

// An explicit embedding plus the bound it is meant to attain. traced_genus
// always comes from trace_faces on the embedding, never from the claim.
struct ConstructionReport {
    GridSpec spec;                     // in the caller's parameter order
    std::vector<int> permutation;      // work axis i came from spec axis permutation[i]
    RotationSystem embedding;          // graph equals grid_graph(spec)
    long long traced_genus = 0;
    long long claimed_bound = 0;
    std::vector<int> face_profile;     // sorted face lengths
    std::string construction_case;     // all-odd | one-even | two-even | three-even | prism
};

// Quadrilateral embedding via the cubical boundary surface; needs exactly
// three odd parameters.
ConstructionReport quad_embedding_all_odd(const GridSpec& spec);

// Planar embedding of G(a,1,1) as the boundary of a row of unit cubes.
ConstructionReport prism_embedding(long long a);

// Handle construction for a 3-parameter spec with at least one even entry:
// quadrilateral surface for the odd core, sphere for the outer shell, one
// handle per removed face pair carrying four connecting edges.
ConstructionReport even_case_embedding(const GridSpec& spec);

// 1/2 + |E|/4 - |V|/2 + P/8 with the perimeter P determined by the parity
// pattern; always an integer for 3-parameter specs.
Rational perimeter_formula(const GridSpec& spec);
long long perimeter_genus(const GridSpec& spec);

// Upper bound for arbitrary dimension: peels the largest parameter until
// exact 3-dimensional machinery (or a quadrilateral embedding) applies.
long long recursive_upper_bound(const GridSpec& spec);

}  // namespace gridgenus
