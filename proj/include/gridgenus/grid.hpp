#pragma once

#include <boost/rational.hpp>

#include <string>
#include <vector>

#include "gridgenus/graph.hpp"

namespace gridgenus {

using Rational = boost::rational<long long>;

// Ordered grid parameters a1..ak. Zero entries are legal and collapse to
// nothing under normalization (a path of length 0 is a single vertex).
struct GridSpec {
    std::vector<long long> params;

    GridSpec() = default;
    explicit GridSpec(std::vector<long long> p);

    int dimension() const { return static_cast<int>(params.size()); }

    // Zeros dropped, remaining entries sorted non-increasing. A spec that
    // collapses entirely normalizes to the single-vertex spec ().
    GridSpec normalized() const;

    std::string to_string() const;  // space-separated parameters
};

struct GridCounts {
    long long vertices;
    long long edges;
};

struct ParityProfile {
    int odd;
    int even;
};

// Iterated Cartesian product of paths. Vertex ids are mixed-radix over the
// coordinates with the last coordinate varying fastest, so ids and
// coordinates round-trip via the functions below.
SimpleGraph grid_graph(const GridSpec& spec);

std::vector<long long> vertex_coords(const GridSpec& spec, Vertex v);
Vertex coords_vertex(const GridSpec& spec, const std::vector<long long>& coords);

// Closed-form vertex/edge counts in exact integer arithmetic.
GridCounts counts(const GridSpec& spec);

// betti = |E| - |V| + 1
long long betti(const GridSpec& spec);

// Odd/even parameter counts of the normalized spec.
ParityProfile parity_profile(const GridSpec& spec);

GridSpec parse_spec(const std::vector<std::string>& args);

}  // namespace gridgenus
