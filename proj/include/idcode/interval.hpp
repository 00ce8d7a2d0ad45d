#pragma once

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "idcode/graph.hpp"
#include "idcode/rational.hpp"

namespace idcode {

// Closed interval on the line.
struct Interval {
    Rational begin, end;
};

// Interval model of a graph: vertex v is the closed interval intervals[v].
// Canonical form carries endpoint ranks 1..2n, assigned by sorting all 2n
// endpoint events by (coordinate, begins before ends, vertex id). Ranks make
// every endpoint distinct while preserving intersection, so window algebra can
// work over {1..2n} instead of raw coordinates.
struct IntervalRep {
    std::vector<Interval> intervals;
    std::vector<int> begin_rank, end_rank;  // empty until canonicalized

    int n() const { return (int)intervals.size(); }
    bool canonical() const { return (int)begin_rank.size() == n() && (int)end_rank.size() == n(); }
};

inline bool intervals_intersect(const Interval& a, const Interval& b) {
    return a.begin <= b.end && b.begin <= a.end;
}

// Assigns ranks. Ties break begins-before-ends then by vertex id; with closed
// intervals this keeps the rank test below equivalent to real intersection.
inline IntervalRep canonicalize(IntervalRep rep) {
    int n = rep.n();
    for (int v = 0; v < n; ++v)
        if (rep.intervals[v].begin > rep.intervals[v].end)
            throw std::invalid_argument("interval " + std::to_string(v) + " has begin > end");
    struct Event {
        Rational coord;
        int kind;  // 0 begin, 1 end
        int vertex;
    };
    std::vector<Event> events;
    events.reserve(2 * n);
    for (int v = 0; v < n; ++v) {
        events.push_back({rep.intervals[v].begin, 0, v});
        events.push_back({rep.intervals[v].end, 1, v});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        return std::tie(a.coord, a.kind, a.vertex) < std::tie(b.coord, b.kind, b.vertex);
    });
    rep.begin_rank.assign(n, 0);
    rep.end_rank.assign(n, 0);
    for (int r = 0; r < 2 * n; ++r) {
        if (events[r].kind == 0)
            rep.begin_rank[events[r].vertex] = r + 1;
        else
            rep.end_rank[events[r].vertex] = r + 1;
    }
    return rep;
}

// Intersection in rank space: u and v meet iff each begins before the other
// ends. All begins sort before equal-coordinate ends, so touching closed
// intervals still count as intersecting.
inline bool ranks_intersect(const IntervalRep& rep, int u, int v) {
    assert(rep.canonical());
    return rep.begin_rank[u] < rep.end_rank[v] && rep.begin_rank[v] < rep.end_rank[u];
}

inline Graph graph_from_intervals(const IntervalRep& rep) {
    IntervalRep r = rep.canonical() ? rep : canonicalize(rep);
    Graph g(r.n());
    for (int u = 0; u < r.n(); ++u)
        for (int v = u + 1; v < r.n(); ++v)
            if (ranks_intersect(r, u, v)) g.add_edge(u, v);
    return g;
}

// The supplied model must reproduce the supplied graph's adjacency exactly.
inline bool rep_matches_graph(const Graph& g, const IntervalRep& rep) {
    if (rep.n() != g.n()) return false;
    IntervalRep r = rep.canonical() ? rep : canonicalize(rep);
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v) != ranks_intersect(r, u, v)) return false;
    return true;
}

// Random model with integer endpoints in [0, coordinate_range]; returned
// canonicalized, together with its graph.
inline std::pair<Graph, IntervalRep> random_interval_graph(int n, int coordinate_range, std::uint64_t seed) {
    if (coordinate_range < 1) throw std::invalid_argument("coordinate range must be positive");
    std::mt19937_64 rng(seed);
    auto next_coord = [&] { return (long long)(rng() % (std::uint64_t)(coordinate_range + 1)); };
    IntervalRep rep;
    for (int v = 0; v < n; ++v) {
        long long a = next_coord(), b = next_coord();
        if (a > b) std::swap(a, b);
        rep.intervals.push_back({Rational(a), Rational(b)});
    }
    rep = canonicalize(std::move(rep));
    Graph g = graph_from_intervals(rep);
    return {std::move(g), std::move(rep)};
}

}  // namespace idcode
