#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "idcode/codes.hpp"
#include "idcode/graph.hpp"
#include "idcode/interval.hpp"

namespace idcode {

// Bipartite C4-free graph on n + n(n-1)/2 vertices whose minimum identifying
// code has n vertices. Vertices 0..n-1 form side Y; behind them one vertex
// per unordered pair {a, b}, adjacent to exactly a and b (pairs in
// lexicographic order). Y is an identifying code: a pair-vertex is traced by
// its two ends, y in Y by itself alone.
inline std::pair<Graph, Code> c4_free_bipartite_family(int n) {
    if (n < 3) throw std::invalid_argument("family needs n >= 3");
    Graph g(n + n * (n - 1) / 2);
    int next = n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            g.add_edge(next, a);
            g.add_edge(next, b);
            ++next;
        }
    std::vector<int> code(n);
    for (int i = 0; i < n; ++i) code[i] = i;
    return {std::move(g), Code{VertexSet(std::move(code), g.n())}};
}

// Bipartite graph on a stable side A of size d plus one vertex per subset of
// A of size >= 2 (n = 2^d - 1 vertices in total), each adjacent to exactly
// its subset. Subset vertices follow ascending mask order. A is an
// identifying code; the measured neighborhood shattering behaves differently
// from |A| (see tests), so callers should measure rather than assume.
inline std::pair<Graph, Code> vc_d_bipartite_family(int d) {
    if (d < 2 || d > 10) throw std::invalid_argument("family needs 2 <= d <= 10");
    int masks = 1 << d;
    Graph g(d + masks - 1 - d);  // d singles + subsets of size >= 2
    int next = d;
    for (int m = 0; m < masks; ++m) {
        if (__builtin_popcount((unsigned)m) < 2) continue;
        for (int i = 0; i < d; ++i)
            if ((m >> i) & 1) g.add_edge(next, i);
        ++next;
    }
    std::vector<int> code(d);
    for (int i = 0; i < d; ++i) code[i] = i;
    return {std::move(g), Code{VertexSet(std::move(code), g.n())}};
}

// Path on n vertices with its interval model [i, i+1] (consecutive intervals
// touch), canonicalized.
inline std::pair<Graph, IntervalRep> path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    IntervalRep rep;
    for (int v = 0; v < n; ++v) rep.intervals.push_back({Rational(v), Rational(v + 1)});
    rep = canonicalize(std::move(rep));
    return {graph_from_intervals(rep), std::move(rep)};
}

}  // namespace idcode
