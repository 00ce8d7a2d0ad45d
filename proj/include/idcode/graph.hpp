#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idcode/bitset.hpp"
#include "idcode/errors.hpp"

namespace idcode {

// Sorted list of vertex ids together with the universe they live in.
struct VertexSet {
    std::vector<int> members;  // strictly increasing
    int universe_size = 0;

    VertexSet() = default;
    VertexSet(std::vector<int> m, int n) : members(std::move(m)), universe_size(n) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (int v : members)
            if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
    }

    static VertexSet from_bits(const Bitset& b) {
        VertexSet s;
        s.universe_size = b.universe();
        s.members = b.to_vector();
        return s;
    }

    Bitset bits() const {
        Bitset b(universe_size);
        for (int v : members) b.set(v);
        return b;
    }

    int size() const { return (int)members.size(); }
    bool empty() const { return members.empty(); }
    bool contains(int v) const { return std::binary_search(members.begin(), members.end(), v); }
};

// Simple undirected graph; adjacency kept as one bitset row per vertex.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(checked_n(n)), adj_(n, Bitset(n)) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int n() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
        adj_[u].set(v);
        adj_[v].set(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }

    const Bitset& neighbors(int v) const {  // open neighborhood N(v)
        check_vertex(v);
        return adj_[v];
    }

    Bitset closed(int v) const {  // N[v]
        Bitset b = neighbors(v);
        b.set(v);
        return b;
    }

    int degree(int v) const { return neighbors(v).count(); }

    long num_edges() const {
        long s = 0;
        for (int v = 0; v < n_; ++v) s += degree(v);
        return s / 2;
    }

    std::vector<std::pair<int, int>> edges() const {  // lexicographic, u < v
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1)) out.push_back({u, v});
        return out;
    }

  private:
    static int checked_n(int n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        return n;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
    }

    int n_ = 0;
    std::vector<Bitset> adj_;
};

inline VertexSet closed_neighborhood(const Graph& g, int v) { return VertexSet::from_bits(g.closed(v)); }

inline VertexSet neighborhood_symmetric_difference(const Graph& g, int j, int k) {
    return VertexSet::from_bits(g.closed(j) ^ g.closed(k));
}

// All pairs u < v with N[u] = N[v], lexicographic.
inline std::vector<std::pair<int, int>> find_twins(const Graph& g) {
    std::vector<Bitset> closed;
    closed.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) closed.push_back(g.closed(v));
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (closed[u] == closed[v]) out.push_back({u, v});
    return out;
}

inline bool is_twin_free(const Graph& g) { return find_twins(g).empty(); }

// BFS 2-coloring; isolated vertices land on the first side.
inline std::optional<std::pair<VertexSet, VertexSet>> is_bipartite(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    std::queue<int> q;
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            const Bitset& nb = g.neighbors(u);
            for (int v = nb.next(0); v >= 0; v = nb.next(v + 1)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<int> a, b;
    for (int v = 0; v < g.n(); ++v) (color[v] == 0 ? a : b).push_back(v);
    return std::make_pair(VertexSet(std::move(a), g.n()), VertexSet(std::move(b), g.n()));
}

struct C4Witness {
    int u, v;  // opposite corners, u < v
    int x, y;  // the two common neighbors, x < y
};

// First (lexicographic in (u, v)) pair with two common neighbors, if any.
// u-x-v-y-u is then a C4 subgraph; for the witness we report the smallest
// two common neighbors.
inline std::optional<C4Witness> find_c4(const Graph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            Bitset common = g.neighbors(u) & g.neighbors(v);
            int x = common.next(0);
            if (x < 0) continue;
            int y = common.next(x + 1);
            if (y < 0) continue;
            return C4Witness{u, v, x, y};
        }
    return std::nullopt;
}

inline bool is_c4_free(const Graph& g) { return !find_c4(g).has_value(); }

// Length of a shortest cycle; nullopt when the graph is acyclic. One BFS per
// start vertex: a non-tree edge (a, b) seen from root r gives a closed walk of
// length dist[a] + dist[b] + 1, and the minimum over all roots and edges is
// attained exactly, with equality when r lies on a shortest cycle.
inline std::optional<int> girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(g.n()), parent(g.n());
    for (int r = 0; r < g.n(); ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[r] = 0;
        q.push(r);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] >= best) continue;
            const Bitset& nb = g.neighbors(u);
            for (int v = nb.next(0); v >= 0; v = nb.next(v + 1)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u] && u < v) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

namespace detail {

// Extends induced paths inside one bipartite component looking for an induced
// cycle of length >= 6. Exponential in the worst case; guarded by a cap.
inline bool has_long_induced_cycle(const Graph& g, std::vector<int>& path, Bitset& on_path, Bitset& blocked) {
    int last = path.back();
    int first = path.front();
    const Bitset& nb = g.neighbors(last);
    for (int v = nb.next(0); v >= 0; v = nb.next(v + 1)) {
        if (on_path.test(v) || blocked.test(v)) continue;
        // v must see only `last` among path vertices, except possibly `first`
        // when it closes a cycle.
        Bitset seen = g.neighbors(v) & on_path;
        seen.reset(last);
        bool closes = seen.test(first);
        if (closes) seen.reset(first);
        if (seen.any()) continue;
        if (closes) {
            // v is adjacent to the path start: either it closes an induced
            // cycle now, or it can never be an internal vertex (chord).
            if ((int)path.size() + 1 >= 6) return true;
            continue;
        }
        path.push_back(v);
        on_path.set(v);
        if (has_long_induced_cycle(g, path, on_path, blocked)) return true;
        on_path.reset(v);
        path.pop_back();
    }
    return false;
}

}  // namespace detail

// Bipartite with no induced cycle of length 6 or more. Enumeration-based;
// intended for the small instances in this project (cap below).
inline bool is_chordal_bipartite(const Graph& g, int cap = 18) {
    if (g.n() > cap) throw CapExceeded("is_chordal_bipartite: n > " + std::to_string(cap));
    if (!is_bipartite(g)) return false;
    // Every induced cycle through edge (u, v) with u as the smallest vertex
    // is found from the path [u, v]; vertices below u are blocked.
    for (int u = 0; u < g.n(); ++u) {
        Bitset blocked(g.n());
        for (int w = 0; w < u; ++w) blocked.set(w);
        const Bitset& nb = g.neighbors(u);
        for (int v = nb.next(u + 1); v >= 0; v = nb.next(v + 1)) {
            std::vector<int> path = {u, v};
            Bitset on_path(g.n());
            on_path.set(u);
            on_path.set(v);
            if (detail::has_long_induced_cycle(g, path, on_path, blocked)) return false;
        }
    }
    return true;
}

// Induced subgraph; second member maps new ids to original ids (ascending).
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe_size != g.n()) throw std::invalid_argument("vertex set universe mismatch");
    std::vector<int> orig = s.members;
    std::vector<int> newid(g.n(), -1);
    for (int i = 0; i < (int)orig.size(); ++i) newid[orig[i]] = i;
    Graph h((int)orig.size());
    for (int i = 0; i < (int)orig.size(); ++i) {
        const Bitset& nb = g.neighbors(orig[i]);
        for (int v = nb.next(orig[i] + 1); v >= 0; v = nb.next(v + 1))
            if (newid[v] >= 0) h.add_edge(i, newid[v]);
    }
    return {std::move(h), std::move(orig)};
}

namespace detail {

// Uniform double in [0, 1); fixed construction so streams are stable across
// standard libraries.
inline double next_unit(std::mt19937_64& rng) { return (double)(rng() >> 11) * 0x1.0p-53; }

}  // namespace detail

// Erdos–Renyi G(n, p) with a fixed, library-independent edge stream.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability out of [0,1]");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (detail::next_unit(rng) < p) g.add_edge(u, v);
    return g;
}

// Intersection graph of unit-radius disks: centers are integer points at the
// given scale (true coordinate = value / scale), adjacent iff the disks meet,
// i.e. squared center distance <= (2 * scale)^2. Exact integer test.
inline Graph unit_disk_graph(const std::vector<std::pair<long long, long long>>& centers, long long scale) {
    if (scale <= 0) throw std::invalid_argument("scale must be positive");
    Graph g((int)centers.size());
    long long d = 2 * scale;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            long long dx = centers[u].first - centers[v].first;
            long long dy = centers[u].second - centers[v].second;
            if (dx * dx + dy * dy <= d * d) g.add_edge(u, v);
        }
    return g;
}

// Vertex-intersection graph of paths in a tree. Each path is a vertex
// sequence; it must be a simple path of the tree (consecutive vertices
// adjacent, no repeats), which in a tree is the unique path between its ends.
inline Graph tree_path_intersection_graph(int tree_n, const std::vector<std::pair<int, int>>& tree_edges,
                                          const std::vector<std::vector<int>>& paths) {
    Graph tree = Graph::from_edges(tree_n, tree_edges);
    if (tree.num_edges() != tree_n - 1) throw std::invalid_argument("edge count is not n - 1");
    // Connectivity check: BFS from 0 must reach everything.
    {
        std::vector<char> seen(tree_n, 0);
        std::queue<int> q;
        if (tree_n > 0) {
            seen[0] = 1;
            q.push(0);
        }
        int cnt = tree_n > 0 ? 1 : 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            const Bitset& nb = tree.neighbors(u);
            for (int v = nb.next(0); v >= 0; v = nb.next(v + 1))
                if (!seen[v]) {
                    seen[v] = 1;
                    ++cnt;
                    q.push(v);
                }
        }
        if (cnt != tree_n) throw std::invalid_argument("tree is not connected");
    }
    std::vector<Bitset> path_bits;
    for (const auto& p : paths) {
        if (p.empty()) throw std::invalid_argument("empty path");
        Bitset b(tree_n);
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] < 0 || p[i] >= tree_n) throw std::invalid_argument("path vertex out of range");
            if (b.test(p[i])) throw std::invalid_argument("path repeats a vertex");
            b.set(p[i]);
            if (i > 0 && !tree.has_edge(p[i - 1], p[i]))
                throw std::invalid_argument("path steps over a non-edge of the tree");
        }
        path_bits.push_back(std::move(b));
    }
    Graph g((int)paths.size());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (path_bits[u].intersects(path_bits[v])) g.add_edge(u, v);
    return g;
}

}  // namespace idcode
