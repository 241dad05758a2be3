#include "gridgenus/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace gridgenus {

SimpleGraph::SimpleGraph(int vertex_count, std::vector<Edge> edge_list) : n(vertex_count) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("loop edge");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw std::invalid_argument("duplicate edge");
    edges = std::move(edge_list);
    adj.assign(n, {});
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

SimpleGraph path_graph(int length) {
    if (length < 0) throw std::invalid_argument("negative path length");
    std::vector<Edge> es;
    for (int i = 0; i < length; ++i) es.push_back({i, i + 1});
    return SimpleGraph(length + 1, std::move(es));
}

SimpleGraph cartesian_product(const SimpleGraph& g, const SimpleGraph& h) {
    // Pair (u, v) gets id u * h.n + v, so the second factor varies fastest.
    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(g.edges.size()) * h.n + static_cast<size_t>(h.edges.size()) * g.n);
    for (int u = 0; u < g.n; ++u)
        for (auto [v1, v2] : h.edges) es.push_back({u * h.n + v1, u * h.n + v2});
    for (auto [u1, u2] : g.edges)
        for (int v = 0; v < h.n; ++v) es.push_back({u1 * h.n + v, u2 * h.n + v});
    return SimpleGraph(g.n * h.n, std::move(es));
}

SimpleGraph complete_bipartite(int m, int n) {
    std::vector<Edge> es;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) es.push_back({i, m + j});
    return SimpleGraph(m + n, std::move(es));
}

std::optional<int> girth(const SimpleGraph& g) {
    // BFS from every vertex; shortest cycle through the root is detected when
    // a non-tree edge closes two BFS branches.
    int best = -1;
    std::vector<int> dist(g.n), parent(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.adj[u]) {
                if (v == parent[u]) continue;
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else {
                    int len = dist[u] + dist[v] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<Vertex>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<int> q{s};
        comp[s] = id;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            out[id].push_back(u);
            for (int v : g.adj[u])
                if (comp[v] == -1) {
                    comp[v] = id;
                    q.push_back(v);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const SimpleGraph& g) {
    if (g.n == 0) return true;
    return connected_components(g).size() == 1;
}

BlockDecomposition block_decomposition(const SimpleGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("block_decomposition: graph is disconnected");
    BlockDecomposition out;
    if (g.n == 0) return out;
    if (g.n == 1) {
        out.blocks.push_back({0});
        out.block_edges.push_back({});
        return out;
    }

    // Iterative Hopcroft-Tarjan with an edge stack.
    std::vector<int> num(g.n, -1), low(g.n, 0), parent(g.n, -1), child_count(g.n, 0);
    std::vector<Edge> estack;
    std::vector<bool> is_cut(g.n, false);
    int timer = 0;

    struct Frame {
        int v;
        size_t idx;
    };
    std::vector<Frame> stack;

    auto emit_block = [&](Edge top) {
        std::vector<Edge> bedges;
        while (true) {
            Edge e = estack.back();
            estack.pop_back();
            bedges.push_back(e);
            if (e == top) break;
        }
        std::vector<Vertex> vs;
        for (auto [a, b] : bedges) {
            vs.push_back(a);
            vs.push_back(b);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        std::sort(bedges.begin(), bedges.end());
        out.blocks.push_back(std::move(vs));
        out.block_edges.push_back(std::move(bedges));
    };

    num[0] = low[0] = timer++;
    stack.push_back({0, 0});
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < g.adj[v].size()) {
            int w = g.adj[v][idx++];
            if (num[w] == -1) {
                Edge e{std::min(v, w), std::max(v, w)};
                estack.push_back(e);
                parent[w] = v;
                ++child_count[v];
                num[w] = low[w] = timer++;
                stack.push_back({w, 0});
            } else if (w != parent[v] && num[w] < num[v]) {
                estack.push_back({std::min(v, w), std::max(v, w)});
                low[v] = std::min(low[v], num[w]);
            }
        } else {
            stack.pop_back();
            int p = parent[v];
            if (p != -1) {
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= num[p]) {
                    // p separates v's subtree: close off one block.
                    emit_block({std::min(p, v), std::max(p, v)});
                    if (num[p] > 0) is_cut[p] = true;
                }
            }
        }
    }
    // The root is a cut vertex iff it has more than one DFS child.
    is_cut[0] = child_count[0] > 1;
    for (int v = 0; v < g.n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

std::pair<SimpleGraph, std::vector<Vertex>> induced_subgraph(const SimpleGraph& g,
                                                             const std::vector<Vertex>& keep) {
    std::vector<Vertex> map_back(keep.begin(), keep.end());
    std::sort(map_back.begin(), map_back.end());
    std::vector<int> newid(g.n, -1);
    for (size_t i = 0; i < map_back.size(); ++i) newid[map_back[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (auto [u, v] : g.edges)
        if (newid[u] != -1 && newid[v] != -1) es.push_back({newid[u], newid[v]});
    return {SimpleGraph(static_cast<int>(map_back.size()), std::move(es)), map_back};
}

namespace {

// Iterated neighbor-degree refinement (1-dimensional Weisfeiler-Leman).
std::vector<int> refine_colors(const SimpleGraph& g) {
    std::vector<int> color(g.n);
    for (int v = 0; v < g.n; ++v) color[v] = g.degree(v);
    for (int round = 0; round < g.n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> ns;
            for (int w : g.adj[v]) ns.push_back(color[w]);
            std::sort(ns.begin(), ns.end());
            sig[v] = {color[v], std::move(ns)};
        }
        std::vector<std::pair<int, std::vector<int>>> uniq(sig.begin(), sig.end());
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<int> next(g.n);
        bool changed = false;
        for (int v = 0; v < g.n; ++v) {
            next[v] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
            if (next[v] != color[v]) changed = true;
        }
        color = std::move(next);
        if (!changed) break;
    }
    return color;
}

struct IsoSearcher {
    const SimpleGraph& g;
    const SimpleGraph& h;
    std::vector<int> gcol, hcol;
    std::vector<int> gtoh, htog;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;

    bool feasible(int gv, int hv) {
        if (gcol[gv] != hcol[hv]) return false;
        for (int w : g.adj[gv]) {
            if (gtoh[w] != -1 && !h.adjacent(hv, gtoh[w])) return false;
        }
        for (int w : h.adj[hv]) {
            if (htog[w] != -1 && !g.adjacent(gv, htog[w])) return false;
        }
        return true;
    }

    bool extend(int depth) {
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        if (depth == g.n) return true;
        // Pick the unmapped g-vertex with the fewest same-color candidates.
        int gv = -1;
        for (int v = 0; v < g.n; ++v)
            if (gtoh[v] == -1) {
                gv = v;
                break;
            }
        for (int hv = 0; hv < h.n; ++hv) {
            if (htog[hv] != -1 || !feasible(gv, hv)) continue;
            gtoh[gv] = hv;
            htog[hv] = gv;
            if (extend(depth + 1)) return true;
            if (exhausted) return false;
            gtoh[gv] = -1;
            htog[hv] = -1;
        }
        return false;
    }
};

}  // namespace

IsoResult is_isomorphic(const SimpleGraph& g, const SimpleGraph& h, std::uint64_t budget) {
    if (g.n != h.n || g.edges.size() != h.edges.size()) return {SearchStatus::Found, false};
    auto gc = refine_colors(g), hc = refine_colors(h);
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(gc) != sorted(hc)) return {SearchStatus::Found, false};
    IsoSearcher s{g, h, gc, hc, std::vector<int>(g.n, -1), std::vector<int>(h.n, -1), budget};
    bool found = s.extend(0);
    if (s.exhausted) return {SearchStatus::BudgetExhausted, false};
    return {SearchStatus::Found, found};
}

CheckResult verify_minor_witness(const SimpleGraph& host, const MinorWitness& w) {
    const int t = w.target.n;
    if (static_cast<int>(w.branch_sets.size()) != t)
        return CheckResult::fail("branch set count does not match target vertex count");
    std::vector<int> owner(host.n, -1);
    for (int i = 0; i < t; ++i) {
        if (w.branch_sets[i].empty()) return CheckResult::fail("empty branch set");
        for (Vertex v : w.branch_sets[i]) {
            if (v < 0 || v >= host.n) return CheckResult::fail("branch set vertex out of range");
            if (owner[v] != -1) return CheckResult::fail("branch sets overlap");
            owner[v] = i;
        }
    }
    // Each branch set must induce a connected subgraph of the host.
    for (int i = 0; i < t; ++i) {
        const auto& bs = w.branch_sets[i];
        std::vector<Vertex> seen{bs[0]};
        std::deque<Vertex> q{bs[0]};
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            for (Vertex v : host.adj[u])
                if (owner[v] == i && std::find(seen.begin(), seen.end(), v) == seen.end()) {
                    seen.push_back(v);
                    q.push_back(v);
                }
        }
        if (seen.size() != bs.size()) return CheckResult::fail("disconnected branch set");
    }
    for (auto [a, b] : w.target.edges) {
        auto it = w.edge_map.find({a, b});
        if (it == w.edge_map.end()) return CheckResult::fail("missing edge assignment");
        auto [u, v] = it->second;
        if (u < 0 || v < 0 || u >= host.n || v >= host.n || !host.adjacent(u, v))
            return CheckResult::fail("edge assignment is not a host edge");
        bool fwd = owner[u] == a && owner[v] == b;
        bool rev = owner[u] == b && owner[v] == a;
        if (!fwd && !rev) return CheckResult::fail("edge assignment does not join the right branch sets");
    }
    return CheckResult::pass();
}

namespace {

struct MinorSearcher {
    const SimpleGraph& host;
    const SimpleGraph& target;
    const std::vector<bool>& allowed;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;

    std::vector<int> order;           // target vertices, decreasing degree
    std::vector<int> pos;             // target vertex -> order index
    std::vector<std::vector<Vertex>> sets;  // branch sets per target vertex
    std::vector<int> owner;           // host vertex -> target vertex or -1
    int used = 0;                     // total vertices across branch sets
    int cap = 0;                      // model-size bound for iterative deepening

    MinorSearcher(const SimpleGraph& hg, const SimpleGraph& tg, const std::vector<bool>& mask,
                  std::uint64_t b)
        : host(hg), target(tg), allowed(mask), budget(b) {
        // Decreasing degree, with ties broken toward vertices adjacent to
        // the part of the target already ordered (keeps edges realizable
        // early), then by id.
        std::vector<bool> done(target.n, false);
        std::vector<int> adj_count(target.n, 0);
        for (int i = 0; i < target.n; ++i) {
            int best = -1;
            for (int v = 0; v < target.n; ++v) {
                if (done[v]) continue;
                if (best == -1 || target.degree(v) > target.degree(best) ||
                    (target.degree(v) == target.degree(best) &&
                     (adj_count[v] > adj_count[best] ||
                      (adj_count[v] == adj_count[best] && v < best))))
                    best = v;
            }
            order.push_back(best);
            done[best] = true;
            for (int w : target.adj[best]) ++adj_count[w];
        }
        pos.assign(target.n, 0);
        for (int i = 0; i < target.n; ++i) pos[order[i]] = i;
        sets.assign(target.n, {});
        owner.assign(host.n, -1);
    }

    bool edge_realized(int a, int b) const {
        for (Vertex u : sets[a])
            for (Vertex w : host.adj[u])
                if (owner[w] == b) return true;
        return false;
    }

    // First target edge among placed vertices that has no host edge yet.
    std::optional<std::pair<int, int>> first_unrealized(int placed) const {
        for (auto [a, b] : target.edges) {
            if (pos[a] >= placed || pos[b] >= placed) continue;
            if (!edge_realized(a, b)) return std::make_pair(a, b);
        }
        return std::nullopt;
    }

    // BFS distances from branch set `t` through free vertices; dist to the
    // set itself is 0. Unreachable = -1.
    std::vector<int> distances_from(int t) const {
        std::vector<int> dist(host.n, -1);
        std::deque<Vertex> q;
        for (Vertex u : sets[t]) {
            dist[u] = 0;
            q.push_back(u);
        }
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            for (Vertex w : host.adj[u]) {
                if (dist[w] != -1 || !allowed[w]) continue;
                if (owner[w] != -1) continue;
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        }
        return dist;
    }

    // Every pending edge must still be bridgeable through free vertices, and
    // every placed vertex must keep one free boundary slot per future
    // neighbor.
    bool prune(int placed) const {
        int free_count = 0;
        for (int v = 0; v < host.n; ++v)
            if (allowed[v] && owner[v] == -1) ++free_count;
        if (free_count < target.n - placed) return true;
        if (used + (target.n - placed) > cap) return true;
        for (int i = 0; i < placed; ++i) {
            int a = order[i];
            int future = 0;
            for (int b : target.adj[a])
                if (pos[b] >= placed) ++future;
            std::vector<int> pending_partners;
            for (int b : target.adj[a])
                if (pos[b] < placed && !edge_realized(a, b)) pending_partners.push_back(b);
            if (future == 0 && pending_partners.empty()) continue;
            std::vector<int> dist = distances_from(a);
            int boundary = 0;
            for (int v = 0; v < host.n; ++v)
                if (dist[v] == 1) ++boundary;
            if (boundary < future) return true;
            for (int b : pending_partners) {
                // some free vertex adjacent to B_b must be reachable from B_a
                bool reach = false;
                for (Vertex u : sets[b])
                    for (Vertex w : host.adj[u])
                        if (dist[w] > 0 && owner[w] == -1) reach = true;
                if (!reach) return true;
            }
        }
        return false;
    }

    bool search(int placed) {
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        auto pending = first_unrealized(placed);
        if (!pending) {
            if (placed == target.n) return true;
            if (prune(placed)) return false;
            int t = order[placed];
            // Roots that sit unreachably far from a placed neighbor's branch
            // set cannot fit under the size cap.
            std::vector<std::vector<int>> nbr_dists;
            for (int b : target.adj[t])
                if (pos[b] < placed) nbr_dists.push_back(distances_from(b));
            for (Vertex r = 0; r < host.n; ++r) {
                if (!allowed[r] || owner[r] != -1) continue;
                int extra = 0;
                bool dead = false;
                for (const auto& d : nbr_dists) {
                    if (d[r] == -1) {
                        dead = true;
                        break;
                    }
                    extra = std::max(extra, d[r] - 1);
                }
                if (dead || used + 1 + extra + (target.n - placed - 1) > cap) continue;
                sets[t].push_back(r);
                owner[r] = t;
                ++used;
                if (search(placed + 1)) return true;
                --used;
                owner[r] = -1;
                sets[t].pop_back();
                if (exhausted) return false;
            }
            return false;
        }
        auto [a, b] = *pending;
        // Grow either endpoint's branch set by one adjacent free vertex.
        // Candidates that cannot reach the far side through free vertices are
        // useless for this edge; the rest are tried nearest-first.
        std::vector<std::tuple<int, int, Vertex>> cands;  // (far distance, side, vertex)
        {
            std::vector<int> da = distances_from(a), db = distances_from(b);
            int best_bridge = -1;
            for (Vertex w = 0; w < host.n; ++w) {
                if (owner[w] != -1 || !allowed[w]) continue;
                if (da[w] == 1 && db[w] != -1) {
                    cands.push_back({db[w], 0, w});
                    if (best_bridge == -1 || db[w] < best_bridge) best_bridge = db[w];
                }
                if (db[w] == 1 && da[w] != -1) {
                    cands.push_back({da[w], 1, w});
                    if (best_bridge == -1 || da[w] < best_bridge) best_bridge = da[w];
                }
            }
            if (cands.empty()) return false;
            // Completing this edge takes at least best_bridge more vertices,
            // and each unplaced target vertex one more.
            if (used + best_bridge + (target.n - placed) > cap) return false;
        }
        std::sort(cands.begin(), cands.end());
        for (auto [d, side, w] : cands) {
            int t = side == 0 ? a : b;
            // Canonical representation: the root is the smallest vertex of
            // its branch set, so growth never goes below it.
            if (w < sets[t].front()) continue;
            sets[t].push_back(w);
            owner[w] = t;
            ++used;
            if (search(placed)) return true;
            --used;
            owner[w] = -1;
            sets[t].pop_back();
            if (exhausted) return false;
        }
        return false;
    }

    MinorWitness make_witness() const {
        MinorWitness w;
        w.target = target;
        w.branch_sets.assign(target.n, {});
        for (int i = 0; i < target.n; ++i) {
            w.branch_sets[i] = sets[i];
            std::sort(w.branch_sets[i].begin(), w.branch_sets[i].end());
        }
        for (auto [a, b] : target.edges) {
            Edge best{-1, -1};
            for (Vertex u : sets[a])
                for (Vertex v : host.adj[u])
                    if (owner[v] == b) {
                        Edge e{std::min(u, v), std::max(u, v)};
                        if (best.first == -1 || e < best) best = e;
                    }
            w.edge_map[{a, b}] = best;
        }
        return w;
    }
};

}  // namespace

MinorSearchResult find_minor_in(const SimpleGraph& host, const std::vector<Vertex>& allowed,
                                const SimpleGraph& target, std::uint64_t budget) {
    std::vector<bool> mask(host.n, false);
    int room = 0;
    for (Vertex v : allowed)
        if (!mask[v]) {
            mask[v] = true;
            ++room;
        }
    if (target.n == 0) return {SearchStatus::Found, MinorWitness{target, {}, {}}};
    // Iterative deepening over the model size keeps the branch-and-bound out
    // of pointlessly large configurations.
    std::uint64_t spent = 0;
    const bool dbg = std::getenv("GRIDGENUS_MINOR_DEBUG") != nullptr;
    // Width-3 deepening steps; only the final full-size level can conclude
    // that no model exists.
    std::vector<int> caps;
    for (int cap = target.n; cap < room; cap += 3) caps.push_back(cap);
    caps.push_back(room);
    for (int cap : caps) {
        MinorSearcher s(host, target, mask, budget - spent);
        s.cap = cap;
        bool found = s.search(0);
        spent += s.nodes;
        if (dbg)
            std::fprintf(stderr, "find_minor: cap=%d nodes=%llu found=%d exhausted=%d\n", cap,
                         static_cast<unsigned long long>(s.nodes), found ? 1 : 0,
                         s.exhausted ? 1 : 0);
        if (found) return {SearchStatus::Found, s.make_witness()};
        if (s.exhausted) return {SearchStatus::BudgetExhausted, std::nullopt};
    }
    return {SearchStatus::None, std::nullopt};
}

MinorSearchResult find_minor(const SimpleGraph& host, const SimpleGraph& target,
                             std::uint64_t budget) {
    std::vector<Vertex> all(host.n);
    std::iota(all.begin(), all.end(), 0);
    return find_minor_in(host, all, target, budget);
}

std::string serialize_graph(const SimpleGraph& g) {
    std::ostringstream os;
    os << g.n << " " << g.edges.size() << "\n";
    for (auto [u, v] : g.edges) os << u << " " << v << "\n";
    return os.str();
}

SimpleGraph parse_graph(const std::string& text) {
    std::istringstream is(text);
    int n;
    long long m;
    if (!(is >> n >> m)) throw std::invalid_argument("graph header malformed");
    std::vector<Edge> es;
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(is >> u >> v)) throw std::invalid_argument("graph edge list truncated");
        es.push_back({u, v});
    }
    return SimpleGraph(n, std::move(es));
}

std::string serialize_witness(const MinorWitness& w) {
    std::ostringstream os;
    os << "target " << w.target.n << " " << w.target.edges.size() << "\n";
    for (auto [u, v] : w.target.edges) os << u << " " << v << "\n";
    for (size_t i = 0; i < w.branch_sets.size(); ++i) {
        os << "branch " << i << ":";
        for (Vertex v : w.branch_sets[i]) os << " " << v;
        os << "\n";
    }
    for (const auto& [te, he] : w.edge_map)
        os << "edge " << te.first << " " << te.second << ": " << he.first << " " << he.second
           << "\n";
    return os.str();
}

MinorWitness parse_witness(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    if (!(is >> tok) || tok != "target") throw std::invalid_argument("witness: missing target header");
    int n;
    long long m;
    is >> n >> m;
    std::vector<Edge> es;
    for (long long i = 0; i < m; ++i) {
        int u, v;
        is >> u >> v;
        es.push_back({u, v});
    }
    MinorWitness w;
    w.target = SimpleGraph(n, std::move(es));
    w.branch_sets.assign(n, {});
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        ls >> tok;
        if (tok == "branch") {
            int id;
            char colon;
            ls >> id >> colon;
            std::string rest;
            std::getline(ls, rest);
            std::istringstream rs(rest);
            Vertex v;
            while (rs >> v) w.branch_sets[id].push_back(v);
        } else if (tok == "edge") {
            int a, b, u, v;
            char colon;
            ls >> a >> b >> colon >> u >> v;
            Edge te{std::min(a, b), std::max(a, b)};
            w.edge_map[te] = {std::min(u, v), std::max(u, v)};
        } else {
            throw std::invalid_argument("witness: unknown line '" + tok + "'");
        }
    }
    return w;
}

}  // namespace gridgenus
