// Generates the minor-witness fixture files under tests/fixtures. The easy
// certificates are written down constructively; the large complete-bipartite
// witnesses are found by a seeded stochastic hub search and then verified
// before being written. Run from the repository root:
//
//   ./build/tools/genfixtures tests/fixtures
//
// Every emitted witness is rechecked by verify_minor_witness; the test suite
// re-verifies the files on every run, so this tool is only needed to

// regenerate them.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gridgenus/formulas.hpp"
#include "gridgenus/graph.hpp"
#include "gridgenus/grid.hpp"
#include "gridgenus/oracle.hpp"

using namespace gridgenus;

namespace {

Vertex gid(const GridSpec& s, long long x, long long y, long long z) {
    return coords_vertex(s, {x, y, z});
}

MinorWitness finish(const SimpleGraph& host, const SimpleGraph& target,
                    std::vector<std::vector<Vertex>> sets) {
    MinorWitness w;
    w.target = target;
    w.branch_sets = std::move(sets);
    std::vector<int> owner(host.n, -1);
    for (size_t i = 0; i < w.branch_sets.size(); ++i)
        for (Vertex v : w.branch_sets[i]) owner[v] = static_cast<int>(i);
    for (auto [a, b] : target.edges) {
        Edge best{-1, -1};
        for (Vertex u : w.branch_sets[a])
            for (Vertex v : host.adj[u])
                if (owner[v] == b) {
                    Edge e{std::min(u, v), std::max(u, v)};
                    if (best.first == -1 || e < best) best = e;
                }
        if (best.first == -1) throw std::runtime_error("constructive witness: missing edge");
        w.edge_map[{a, b}] = best;
    }
    auto chk = verify_minor_witness(host, w);
    if (!chk.ok) throw std::runtime_error("constructive witness invalid: " + chk.reason);
    return w;
}

// ---- constructive witnesses -------------------------------------------------

// Two vertex-disjoint K33 models in G(4,2,1): pillars in the x=1 / x=3
// planes, rows on the end planes, the x=2 plane split between floors.
std::vector<MinorWitness> two_k33_in_g421() {
    GridSpec s({4, 2, 1});
    SimpleGraph host = grid_graph(s);
    SimpleGraph k33 = complete_bipartite(3, 3);
    auto col = [&](long long x, long long z) {
        return std::vector<Vertex>{gid(s, x, 0, z), gid(s, x, 1, z), gid(s, x, 2, z)};
    };
    auto pillar = [&](long long x, long long y) {
        return std::vector<Vertex>{gid(s, x, y, 0), gid(s, x, y, 1)};
    };
    std::vector<std::vector<Vertex>> a{pillar(1, 0), pillar(1, 1), pillar(1, 2),
                                       col(0, 0),    col(0, 1),    col(2, 1)};
    std::vector<std::vector<Vertex>> b{pillar(3, 0), pillar(3, 1), pillar(3, 2),
                                       col(4, 0),    col(4, 1),    col(2, 0)};
    return {finish(host, k33, a), finish(host, k33, b)};
}

// Two vertex-disjoint K33 models in G(5,2,1): x-windows [0,2] and [3,5].
std::vector<MinorWitness> two_k33_in_g521() {
    GridSpec s({5, 2, 1});
    SimpleGraph host = grid_graph(s);
    SimpleGraph k33 = complete_bipartite(3, 3);
    auto unit = [&](long long x0) {
        std::vector<std::vector<Vertex>> sets;
        for (long long d = 0; d < 3; ++d) sets.push_back({gid(s, x0 + d, 1, 0)});
        std::vector<Vertex> a, b, c;
        for (long long d = 0; d < 3; ++d) {
            a.push_back(gid(s, x0 + d, 0, 0));
            b.push_back(gid(s, x0 + d, 2, 0));
            c.push_back(gid(s, x0 + d, 1, 1));
        }
        sets.push_back(a);
        sets.push_back(b);
        sets.push_back(c);
        return sets;
    };
    return {finish(host, k33, unit(0)), finish(host, k33, unit(3))};
}

// T2 in G(a,2,1) for a >= 4: slim block on x-window [0,2], wide block on
// x in {3,4}, sharing the bent middle set c.
MinorWitness t2_in_ga21(long long alpha) {
    GridSpec s({alpha, 2, 1});
    SimpleGraph host = grid_graph(s);
    SimpleGraph t2 = build_Tn(2);
    // build_Tn(2): block 0 = parts {0,1,2} x {3,4,5}; block 1 = parts
    // {6,7,8} x {5,9,10} with vertex 5 shared.
    std::vector<std::vector<Vertex>> sets(11);
    for (long long d = 0; d < 3; ++d) sets[d] = {gid(s, d, 1, 0)};
    std::vector<Vertex> a, b, c;
    for (long long d = 0; d < 3; ++d) {
        a.push_back(gid(s, d, 0, 0));
        b.push_back(gid(s, d, 2, 0));
        c.push_back(gid(s, d, 1, 1));
    }
    c.push_back(gid(s, 2, 0, 1));
    c.push_back(gid(s, 2, 2, 1));
    sets[3] = a;
    sets[4] = b;
    sets[5] = c;  // the cut vertex
    for (long long y = 0; y < 3; ++y) sets[6 + y] = {gid(s, 3, y, 0), gid(s, 3, y, 1)};
    std::vector<Vertex> d0, d1;
    for (long long y = 0; y < 3; ++y) {
        d0.push_back(gid(s, 4, y, 0));
        d1.push_back(gid(s, 4, y, 1));
    }
    sets[9] = d0;
    sets[10] = d1;
    return finish(host, t2, sets);
}

// T2 in G(2,2,2): two z-slab blocks glued along the middle line.
MinorWitness t2_in_g222() {
    GridSpec s({2, 2, 2});
    SimpleGraph host = grid_graph(s);
    SimpleGraph t2 = build_Tn(2);
    std::vector<std::vector<Vertex>> sets(11);
    for (long long d = 0; d < 3; ++d) sets[d] = {gid(s, d, 1, 0)};
    std::vector<Vertex> a, b, c;
    for (long long d = 0; d < 3; ++d) {
        a.push_back(gid(s, d, 0, 0));
        b.push_back(gid(s, d, 2, 0));
        c.push_back(gid(s, d, 1, 1));
    }
    sets[3] = a;
    sets[4] = b;
    sets[5] = c;
    for (long long d = 0; d < 3; ++d) sets[6 + d] = {gid(s, d, 1, 2)};
    std::vector<Vertex> a2, b2;
    for (long long d = 0; d < 3; ++d) {
        a2.push_back(gid(s, d, 0, 2));
        b2.push_back(gid(s, d, 2, 2));
    }
    sets[9] = a2;
    sets[10] = b2;
    return finish(host, t2, sets);
}

// Two vertex-disjoint T2 models in G(5,4,1): slim chains in the y-bands
// [0,2] (floor 0) and [2,4] (floor 1).
std::vector<MinorWitness> two_t2_in_g541() {
    GridSpec s({5, 4, 1});
    SimpleGraph host = grid_graph(s);
    SimpleGraph t2 = build_Tn(2);
    auto band = [&](long long ybase, long long f) {
        std::vector<std::vector<Vertex>> sets(11);
        std::vector<Vertex> c;
        for (long long x = 0; x <= 5; ++x) c.push_back(gid(s, x, ybase + 1, 1 - f));
        for (long long d = 0; d < 3; ++d) sets[d] = {gid(s, d, ybase + 1, f)};
        std::vector<Vertex> a, b;
        for (long long d = 0; d < 3; ++d) {
            a.push_back(gid(s, d, ybase, f));
            b.push_back(gid(s, d, ybase + 2, f));
        }
        sets[3] = a;
        sets[4] = b;
        sets[5] = c;
        for (long long d = 0; d < 3; ++d) sets[6 + d] = {gid(s, 3 + d, ybase + 1, f)};
        std::vector<Vertex> a2, b2;
        for (long long d = 0; d < 3; ++d) {
            a2.push_back(gid(s, 3 + d, ybase, f));
            b2.push_back(gid(s, 3 + d, ybase + 2, f));
        }
        sets[9] = a2;
        sets[10] = b2;
        return sets;
    };
    return {finish(host, t2, band(0, 0)), finish(host, t2, band(2, 1))};
}

// ---- stochastic search for K3,m witnesses ----------------------------------

struct HubSearch {
    const SimpleGraph& host;
    int m;  // want K_{3,m}
    std::mt19937 rng;

    explicit HubSearch(const SimpleGraph& h, int m_, unsigned seed)
        : host(h), m(m_), rng(seed) {}

    // Grow a random connected set from `root` avoiding `blocked`.
    std::vector<Vertex> grow(int root, int size, const std::vector<bool>& blocked) {
        std::vector<Vertex> set{root};
        std::vector<bool> inside(host.n, false);
        inside[root] = true;
        while (static_cast<int>(set.size()) < size) {
            std::vector<Vertex> frontier;
            for (Vertex u : set)
                for (Vertex w : host.adj[u])
                    if (!inside[w] && !blocked[w]) frontier.push_back(w);
            if (frontier.empty()) break;
            Vertex pick = frontier[rng() % frontier.size()];
            inside[pick] = true;
            set.push_back(pick);
        }
        return set;
    }

    // Exact-ish packing: greedily take rainbow singletons, then try pairs and
    // triples for the remainder, with a couple of random restarts.
    int pack(const std::vector<std::vector<Vertex>>& hubs, std::vector<std::vector<Vertex>>* out) {
        std::vector<int> hub_of(host.n, -1);
        for (int i = 0; i < 3; ++i)
            for (Vertex v : hubs[i]) hub_of[v] = i;
        auto hubmask = [&](const std::vector<Vertex>& set) {
            int mask = 0;
            for (Vertex u : set)
                for (Vertex w : host.adj[u])
                    if (hub_of[w] >= 0) mask |= 1 << hub_of[w];
            return mask;
        };
        std::vector<Vertex> free_vs;
        for (Vertex v = 0; v < host.n; ++v)
            if (hub_of[v] == -1) free_vs.push_back(v);

        int best = -1;
        for (int attempt = 0; attempt < 40; ++attempt) {
            std::vector<Vertex> order = free_vs;
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<bool> used(host.n, false);
            std::vector<std::vector<Vertex>> rs;
            // singletons first
            for (Vertex v : order)
                if (!used[v] && hubmask({v}) == 7) {
                    used[v] = true;
                    rs.push_back({v});
                }
            // connected pairs
            for (Vertex v : order) {
                if (used[v]) continue;
                for (Vertex w : host.adj[v]) {
                    if (w <= v || used[w] || hub_of[w] != -1) continue;
                    if (hubmask({v, w}) == 7) {
                        used[v] = used[w] = true;
                        rs.push_back({v, w});
                        break;
                    }
                }
            }
            // connected triples (v-w-x paths)
            for (Vertex v : order) {
                if (used[v]) continue;
                bool done = false;
                for (Vertex w : host.adj[v]) {
                    if (used[w] || hub_of[w] != -1 || done) continue;
                    for (Vertex x : host.adj[w]) {
                        if (x == v || used[x] || hub_of[x] != -1) continue;
                        if (hubmask({v, w, x}) == 7) {
                            used[v] = used[w] = used[x] = true;
                            rs.push_back({v, w, x});
                            done = true;
                            break;
                        }
                    }
                }
            }
            if (static_cast<int>(rs.size()) > best) {
                best = static_cast<int>(rs.size());
                if (out) *out = rs;
            }
            if (best >= m) break;
        }
        return best;
    }

    std::optional<MinorWitness> run(int iterations) {
        SimpleGraph target = complete_bipartite(3, m);
        std::uniform_int_distribution<int> size_dist(3, std::max(4, host.n / 4));
        for (int it = 0; it < iterations; ++it) {
            std::vector<bool> blocked(host.n, false);
            std::vector<std::vector<Vertex>> hubs(3);
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) {
                std::vector<Vertex> candidates;
                for (Vertex v = 0; v < host.n; ++v)
                    if (!blocked[v]) candidates.push_back(v);
                if (candidates.empty()) {
                    ok = false;
                    break;
                }
                Vertex root = candidates[rng() % candidates.size()];
                hubs[i] = grow(root, size_dist(rng), blocked);
                for (Vertex v : hubs[i]) blocked[v] = true;
            }
            if (!ok) continue;
            std::vector<std::vector<Vertex>> rs;
            if (pack(hubs, &rs) < m) continue;
            rs.resize(m);
            std::vector<std::vector<Vertex>> sets;
            for (int i = 0; i < 3; ++i) sets.push_back(hubs[i]);
            for (auto& r : rs) sets.push_back(r);
            try {
                return finish(host, target, sets);
            } catch (const std::exception&) {
                continue;
            }
        }
        return std::nullopt;
    }
};

void write_witness(const std::filesystem::path& dir, const std::string& name,
                   const MinorWitness& w) {
    std::ofstream out(dir / name, std::ios::binary);
    out << serialize_witness(w);
    std::cout << "wrote " << name << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "tests/fixtures";
    std::filesystem::create_directories(dir);

    auto g421 = two_k33_in_g421();
    write_witness(dir, "g421_k33_a.witness", g421[0]);
    write_witness(dir, "g421_k33_b.witness", g421[1]);

    auto g521 = two_k33_in_g521();
    write_witness(dir, "g521_k33_a.witness", g521[0]);
    write_witness(dir, "g521_k33_b.witness", g521[1]);

    write_witness(dir, "g421_t2.witness", t2_in_ga21(4));
    write_witness(dir, "g521_t2.witness", t2_in_ga21(5));
    write_witness(dir, "g222_t2.witness", t2_in_g222());

    auto g541 = two_t2_in_g541();
    write_witness(dir, "g541_t2_a.witness", g541[0]);
    write_witness(dir, "g541_t2_b.witness", g541[1]);

    // K3,8 <= G(2,2,2)
    {
        SimpleGraph host = grid_graph(GridSpec({2, 2, 2}));
        HubSearch hs(host, 8, 12345);
        if (auto w = hs.run(2000000)) {
            write_witness(dir, "g222_k38.witness", *w);
        } else {
            std::cout << "K3,8 in G(2,2,2): not found\n";
        }
    }
    // K3,12 <= G(3,2,2)
    {
        SimpleGraph host = grid_graph(GridSpec({3, 2, 2}));
        HubSearch hs(host, 12, 54321);
        if (auto w = hs.run(2000000)) {
            write_witness(dir, "g322_k312.witness", *w);
        } else {
            std::cout << "K3,12 in G(3,2,2): not found\n";
        }
    }
    return 0;
}
