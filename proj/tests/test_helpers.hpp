#pragma once

// Brute-force oracles, written independently of the library's algorithms so
// the two can disagree. Everything here enumerates.

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "idcode/graph.hpp"
#include "idcode/interval.hpp"

namespace oracle {

using idcode::Graph;

// Traces of all vertices against candidate set C (as sorted id vectors).
inline std::vector<std::vector<int>> traces(const Graph& g, const std::vector<int>& code) {
    std::vector<std::vector<int>> out(g.n());
    for (int v = 0; v < g.n(); ++v)
        for (int c : code)
            if (c == v || g.has_edge(c, v)) out[v].push_back(c);
    return out;
}

inline bool is_valid_id_code(const Graph& g, const std::vector<int>& code) {
    auto tr = traces(g, code);
    std::set<std::vector<int>> seen;
    for (const auto& t : tr) {
        if (t.empty()) return false;
        if (!seen.insert(t).second) return false;
    }
    return true;
}

// Minimum identifying code size by subset enumeration, -1 when none exists.
inline int brute_min_id_code_size(const Graph& g) {
    int n = g.n();
    for (int size = 0; size <= n; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            if (is_valid_id_code(g, idx)) return size;
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (size == 0 && n == 0) return 0;
    }
    return -1;
}

// Girth via the edge-deletion identity: the shortest cycle through edge
// (u, v) is 1 plus the shortest u-v path avoiding that edge.
inline std::optional<int> brute_girth(const Graph& g) {
    int best = -1;
    for (auto [u, v] : g.edges()) {
        std::vector<int> dist(g.n(), -1);
        std::queue<int> q;
        dist[u] = 0;
        q.push(u);
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int b = 0; b < g.n(); ++b) {
                if (!g.has_edge(a, b) || dist[b] >= 0) continue;
                if ((a == u && b == v) || (a == v && b == u)) continue;
                dist[b] = dist[a] + 1;
                q.push(b);
            }
        }
        if (dist[v] >= 0 && (best < 0 || dist[v] + 1 < best)) best = dist[v] + 1;
    }
    if (best < 0) return std::nullopt;
    return best;
}

inline bool brute_has_c4(const Graph& g) {
    int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && g.has_edge(d, a)) return true;
                }
    return false;
}

inline bool naive_is_shattered(const Graph& g, const std::vector<int>& x) {
    std::set<std::set<int>> seen;
    for (int v = 0; v < g.n(); ++v) {
        std::set<int> t;
        for (int xi : x)
            if (xi == v || g.has_edge(xi, v)) t.insert(xi);
        seen.insert(t);
    }
    return seen.size() == (size_t{1} << x.size());
}

inline int brute_vc_dimension(const Graph& g) {
    int n = g.n(), best = 0;
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        std::vector<int> x;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) x.push_back(i);
        if ((int)x.size() > best && naive_is_shattered(g, x)) best = (int)x.size();
    }
    return best;
}

// Minimum number of stab positions for inclusive ranges, by enumeration over
// subsets of the (distinct) range endpoints.
inline int brute_min_stab(const std::vector<std::pair<int, int>>& ranges) {
    std::vector<int> candidates;
    for (auto [lo, hi] : ranges) {
        candidates.push_back(lo);
        candidates.push_back(hi);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    int m = (int)candidates.size();
    for (int size = 0; size <= m; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            bool ok = true;
            for (auto [lo, hi] : ranges) {
                bool hit = false;
                for (int i : idx) hit |= lo <= candidates[i] && candidates[i] <= hi;
                if (!hit) {
                    ok = false;
                    break;
                }
            }
            if (ok) return size;
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && idx[i] == m - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return m;
}

// Erdos-Renyi graphs filtered twin-free, bumping the seed until one appears.
inline Graph random_twin_free_graph(int n, double p, std::uint64_t seed) {
    for (std::uint64_t s = seed;; ++s) {
        Graph g = idcode::random_graph(n, p, s);
        if (idcode::is_twin_free(g)) return g;
    }
}

// Random interval models whose graph is twin-free.
inline std::pair<Graph, idcode::IntervalRep> random_twin_free_intervals(int n, int range, std::uint64_t seed) {
    for (std::uint64_t s = seed;; ++s) {
        auto [g, rep] = idcode::random_interval_graph(n, range, s);
        if (idcode::is_twin_free(g)) return {std::move(g), std::move(rep)};
    }
}

}  // namespace oracle
