#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gridgenus {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // normalized u < v

// Finite simple undirected graph. Vertices are 0..n-1, edges stored sorted
// with u < v, adjacency lists sorted ascending.
struct SimpleGraph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> adj;

    SimpleGraph() = default;
    SimpleGraph(int vertex_count, std::vector<Edge> edge_list);

    int vertex_count() const { return n; }
    long long edge_count() const { return static_cast<long long>(edges.size()); }
    int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;
};

// Outcome of a structural check, with the first violated condition.
struct CheckResult {
    bool ok = true;
    std::string reason;
    static CheckResult pass() { return {true, ""}; }
    static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

struct MinorWitness {
    SimpleGraph target;
    std::vector<std::vector<Vertex>> branch_sets;        // target vertex -> host vertices
    std::map<Edge, Edge> edge_map;                       // target edge -> host edge
};

struct BlockDecomposition {
    std::vector<std::vector<Vertex>> blocks;             // vertex sets, each maximal 2-connected
    std::vector<std::vector<Edge>> block_edges;          // host edges per block (partition of E)
    std::vector<Vertex> cut_vertices;
};

enum class SearchStatus { Found, None, BudgetExhausted };

struct IsoResult {
    SearchStatus status;
    bool isomorphic = false;  // valid when status == Found
};

struct MinorSearchResult {
    SearchStatus status;
    std::optional<MinorWitness> witness;
};

SimpleGraph path_graph(int length);
SimpleGraph cartesian_product(const SimpleGraph& g, const SimpleGraph& h);
SimpleGraph complete_bipartite(int m, int n);

// Length of the shortest cycle; nullopt when acyclic.
std::optional<int> girth(const SimpleGraph& g);

std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);

// Requires a connected graph; throws std::invalid_argument otherwise.
BlockDecomposition block_decomposition(const SimpleGraph& g);

// Induced subgraph on `keep`; returns the graph plus the map new id -> old id.
std::pair<SimpleGraph, std::vector<Vertex>> induced_subgraph(const SimpleGraph& g,
                                                             const std::vector<Vertex>& keep);

// Deterministic refinement + backtracking. Budget counts search-tree nodes.
IsoResult is_isomorphic(const SimpleGraph& g, const SimpleGraph& h, std::uint64_t budget);

CheckResult verify_minor_witness(const SimpleGraph& host, const MinorWitness& w);

// Deterministic branch-and-bound for target ≼ host. Target vertices are
// processed in decreasing degree order, host candidates in increasing id
// order; the budget counts search-tree nodes.
MinorSearchResult find_minor(const SimpleGraph& host, const SimpleGraph& target,
                             std::uint64_t budget);

// Restrict the search to a host whose vertex set is masked down to `allowed`.
MinorSearchResult find_minor_in(const SimpleGraph& host, const std::vector<Vertex>& allowed,
                                const SimpleGraph& target, std::uint64_t budget);

std::string serialize_graph(const SimpleGraph& g);
SimpleGraph parse_graph(const std::string& text);

std::string serialize_witness(const MinorWitness& w);
MinorWitness parse_witness(const std::string& text);

}  // namespace gridgenus
