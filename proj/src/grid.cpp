#include "gridgenus/grid.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gridgenus {

GridSpec::GridSpec(std::vector<long long> p) : params(std::move(p)) {
    if (params.empty()) return;
    for (long long a : params)
        if (a < 0) throw std::invalid_argument("grid parameter must be >= 0");
}

GridSpec GridSpec::normalized() const {
    std::vector<long long> q;
    for (long long a : params)
        if (a > 0) q.push_back(a);
    std::sort(q.begin(), q.end(), std::greater<>());
    return GridSpec(std::move(q));
}

std::string GridSpec::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) os << " ";
        os << params[i];
    }
    return os.str();
}

SimpleGraph grid_graph(const GridSpec& spec) {
    SimpleGraph g = path_graph(0);
    for (long long a : spec.params) {
        if (a > 1000000) throw std::invalid_argument("grid parameter too large to construct");
        g = cartesian_product(g, path_graph(static_cast<int>(a)));
    }
    return g;
}

std::vector<long long> vertex_coords(const GridSpec& spec, Vertex v) {
    std::vector<long long> c(spec.params.size(), 0);
    long long rem = v;
    for (int i = static_cast<int>(spec.params.size()) - 1; i >= 0; --i) {
        long long base = spec.params[i] + 1;
        c[i] = rem % base;
        rem /= base;
    }
    return c;
}

Vertex coords_vertex(const GridSpec& spec, const std::vector<long long>& coords) {
    long long id = 0;
    for (size_t i = 0; i < spec.params.size(); ++i) {
        if (coords[i] < 0 || coords[i] > spec.params[i])
            throw std::invalid_argument("coordinate out of bounds");
        id = id * (spec.params[i] + 1) + coords[i];
    }
    return static_cast<Vertex>(id);
}

GridCounts counts(const GridSpec& spec) {
    long long verts = 1;
    for (long long a : spec.params) verts *= a + 1;
    // |E| = prod(a_i+1) * sum a_i/(a_i+1); each term divides exactly.
    long long edges = 0;
    for (long long a : spec.params) edges += verts / (a + 1) * a;
    return {verts, edges};
}

long long betti(const GridSpec& spec) {
    auto c = counts(spec);
    return c.edges - c.vertices + 1;
}

ParityProfile parity_profile(const GridSpec& spec) {
    ParityProfile p{0, 0};
    for (long long a : spec.normalized().params) {
        if (a % 2 == 1)
            ++p.odd;
        else
            ++p.even;
    }
    return p;
}

GridSpec parse_spec(const std::vector<std::string>& args) {
    std::vector<long long> ps;
    for (const auto& s : args) {
        size_t used = 0;
        long long v;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("grid parameter '" + s + "' is not an integer");
        }
        if (used != s.size() || v < 1)
            throw std::invalid_argument("grid parameter '" + s + "' must be a positive integer");
        ps.push_back(v);
    }
    if (ps.empty()) throw std::invalid_argument("at least one grid parameter required");
    return GridSpec(std::move(ps));
}

}  // namespace gridgenus
