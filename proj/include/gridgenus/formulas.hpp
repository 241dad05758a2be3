#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridgenus/grid.hpp"

namespace gridgenus {

struct GenusBounds {
    long long lower = 0;
    long long upper = 0;
    std::string lower_source;  // euler | minor-packing | subgraph | exact-theorem
    std::string upper_source;  // white | case-construction | recursive | exact-theorem
    bool exact = false;
};

struct Classification {
    bool planar = false;
    bool toroidal_2cell = false;
    bool embeds_on_torus = false;
    std::vector<std::string> reasons;
};

struct ExactGenus {
    std::optional<long long> genus;
    std::string certificate;  // which theorem family settled it
};

struct GenusRange {
    long long low = 0;
    long long high = 0;
    bool partial = false;  // low is only a bound, not the exact genus
};

// ceil(max(0, 1 + |E|/4 - |V|/2)); 0 for 1-dimensional specs.
long long euler_lower_bound(const GridSpec& spec);

// Exact genus when at least three normalized parameters are odd and k >= 3.
std::optional<long long> white_genus(const GridSpec& spec);

// Dispatch over the known exact families.
ExactGenus exact_genus(const GridSpec& spec);

// genus - (1 + |E|/4 - |V|/2); >= 0, zero iff quadrilateral.
Rational quadrilateral_distance(const GridSpec& spec, long long genus);

// floor(betti/2); grids are upper-embeddable.
long long max_genus(const GridSpec& spec);

// The closed-form version of the maximum genus, for cross-checking.
long long max_genus_closed_form(const GridSpec& spec);

GenusRange genus_range(const GridSpec& spec);

Classification classify_planar(const GridSpec& spec);
Classification classify_toroidal(const GridSpec& spec);

// ceil((m-2)(n-2)/4) for m, n >= 2.
long long bipartite_genus(long long m, long long n);

// Aggregate of every formula and construction bound. extra_lower, when
// present, is a certified lower bound (e.g. from minor packing).
GenusBounds best_bounds(const GridSpec& spec,
                        std::optional<long long> extra_lower = std::nullopt,
                        const std::string& extra_lower_source = "minor-packing");

std::string rational_to_string(const Rational& r);

}  // namespace gridgenus
