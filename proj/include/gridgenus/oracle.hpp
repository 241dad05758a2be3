#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gridgenus/graph.hpp"
#include "gridgenus/grid.hpp"

namespace gridgenus {

struct OracleResult {
    long long min_genus = 0;
    long long max_genus = 0;
    std::set<long long> spectrum;
    std::uint64_t enumerated = 0;
    bool exhausted = false;
};

struct PackingCertificate {
    std::vector<MinorWitness> disjoint_witnesses;
    long long implied_lower_bound = 0;
};

struct PackingResult {
    SearchStatus status;
    PackingCertificate certificate;  // valid when status == Found
};

// Number of distinct rotation systems of g: prod (deg(v)-1)!. Saturates at
// a large sentinel to avoid overflow.
std::uint64_t rotation_system_count(const SimpleGraph& g);

// Enumerates every rotation system (in a fixed odometer order), traces each
// and aggregates min/max/spectrum. Stops after `budget` systems with
// exhausted=false.
OracleResult exhaustive_genus(const SimpleGraph& g, std::uint64_t budget);

// Genus via block additivity: sum of the per-block oracle over components
// and blocks.
long long genus_by_blocks(const SimpleGraph& g,
                          const std::function<long long(const SimpleGraph&)>& per_block_oracle);

// Chain of n K_{3,3} blocks, consecutive blocks sharing exactly one vertex.
SimpleGraph build_Tn(int n);

// Vertex-disjoint minor witnesses for the targets, found sequentially in
// increasing-id order on the remaining host. Implied bound is the sum of the
// supplied target genera.
PackingResult packing_lower_bound(const SimpleGraph& host,
                                  const std::vector<std::pair<SimpleGraph, long long>>& targets,
                                  std::uint64_t budget);

struct SuiteReport {
    std::vector<std::string> lines;       // deterministic, one per check
    std::vector<std::string> discrepancies;
    bool ok() const { return discrepancies.empty(); }
};

// Cross-validates constructions, formulas and (within budget) the exhaustive
// oracle over every normalized spec with at most max_vertices vertices.
SuiteReport verify_construction_suite(long long max_vertices, std::uint64_t budget);

// All normalized specs (non-increasing positive parameters) with vertex
// count at most max_vertices, in deterministic order.
std::vector<GridSpec> enumerate_specs(long long max_vertices);

// Walks the same family without materializing it; parameters arrive
// non-increasing. Meant for large arithmetic sweeps.
void for_each_spec(long long max_vertices,
                   const std::function<void(const std::vector<long long>&)>& fn);

}  // namespace gridgenus
