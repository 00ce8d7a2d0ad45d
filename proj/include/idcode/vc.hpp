#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idcode/codes.hpp"
#include "idcode/errors.hpp"
#include "idcode/graph.hpp"
#include "idcode/interval.hpp"

namespace idcode {

// Trace of v on X: N[v] restricted to X, encoded as a bitmask over X's
// positions in ascending member order.
inline std::uint32_t trace_mask(const Graph& g, const VertexSet& x, int v) {
    assert(x.size() <= 25);
    Bitset nb = g.closed(v);
    std::uint32_t m = 0;
    for (int i = 0; i < x.size(); ++i)
        if (nb.test(x.members[i])) m |= std::uint32_t{1} << i;
    return m;
}

// Proof that X is shattered by closed neighborhoods: one witness vertex per
// subset of X, indexed by bitmask over X's positions.
struct ShatterCertificate {
    VertexSet shattered_set;
    std::vector<int> witness_by_mask;  // size 1 << |X|; witness_by_mask[m] has trace m
};

inline bool check_certificate(const Graph& g, const ShatterCertificate& cert) {
    const VertexSet& x = cert.shattered_set;
    if (x.universe_size != g.n() || x.size() > 25) return false;
    if (cert.witness_by_mask.size() != (size_t{1} << x.size())) return false;
    for (std::uint32_t m = 0; m < cert.witness_by_mask.size(); ++m) {
        int v = cert.witness_by_mask[m];
        if (v < 0 || v >= g.n() || trace_mask(g, x, v) != m) return false;
    }
    return true;
}

// Lowest-id witness per trace; nullopt when some subset of X has no witness.
inline std::optional<ShatterCertificate> is_shattered(const Graph& g, const VertexSet& x) {
    if (x.universe_size != g.n()) throw std::invalid_argument("vertex set universe mismatch");
    if (x.size() > 25) throw CapExceeded("is_shattered: |X| > 25");
    size_t masks = size_t{1} << x.size();
    ShatterCertificate cert{x, std::vector<int>(masks, -1)};
    for (int v = 0; v < g.n(); ++v) {
        std::uint32_t m = trace_mask(g, x, v);
        if (cert.witness_by_mask[m] < 0) cert.witness_by_mask[m] = v;
    }
    for (size_t m = 0; m < masks; ++m)
        if (cert.witness_by_mask[m] < 0) return std::nullopt;
    return cert;
}

struct VcResult {
    int dimension = 0;
    ShatterCertificate certificate;  // for a largest shattered set found
    bool reached_cap = false;        // a set of size max_d was shattered
};

// Largest shattered set, by exhaustive enumeration in lexicographic order,
// sizes ascending. Shattering is monotone under subsets, so the scan can stop
// at the first size with no shattered set. The empty set is always shattered
// (witnessed by any vertex, or vacuously when n = 0).
inline VcResult vc_dimension(const Graph& g, int max_d = 25) {
    if (max_d < 0 || max_d > 25) throw std::invalid_argument("max_d out of range");
    VcResult res;
    res.certificate = ShatterCertificate{VertexSet({}, g.n()), {g.n() > 0 ? 0 : -1}};
    if (g.n() == 0) return res;
    std::vector<int> idx;
    for (int size = 1; size <= std::min(max_d, g.n()); ++size) {
        bool found = false;
        idx.assign(size, 0);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            auto cert = is_shattered(g, VertexSet(idx, g.n()));
            if (cert) {
                res.dimension = size;
                res.certificate = std::move(*cert);
                found = true;
                break;
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == g.n() - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) return res;
    }
    res.reached_cap = res.dimension == max_d;
    return res;
}

// Smallest c >= 1 with c^d >= n - 1; every identifying code of an n-vertex
// twin-free graph with neighborhood VC-dimension <= d has at least this many
// vertices. Integer arithmetic only.
inline long long sauer_lower_bound(long long n, int d) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (d < 1) throw std::invalid_argument("d must be positive");
    auto pow_at_least = [&](long long c, long long target) {
        // c^d >= target, without overflow
        long long acc = 1;
        for (int i = 0; i < d; ++i) {
            if (acc >= (target + c - 1) / c) return true;
            acc *= c;
        }
        return acc >= target;
    };
    long long target = n - 1;
    if (target <= 1) return 1;
    long long lo = 1, hi = 2;
    while (!pow_at_least(hi, target)) hi *= 2;
    while (lo < hi) {
        long long mid = lo + (hi - lo) / 2;
        lo = pow_at_least(mid, target) ? lo : mid + 1;
        hi = pow_at_least(mid, target) ? mid : hi;
    }
    return lo;
}

struct ShatteredCodeConstruction {
    Graph graph;                    // induced on X together with chosen witnesses
    Code code;                      // identifying code of `graph`, size <= 2|X|
    std::vector<int> original_ids;  // new id -> id in the source graph
};

// From a shattered set X of size k, builds the induced subgraph on X plus one
// witness per nonempty trace and an identifying code of size at most 2k for
// it: X itself plus the witnesses of the singleton traces. Witness choice
// prefers members of X (their own trace contains them), then lowest id, which
// maximizes the overlap between X and the witness set.
inline ShatteredCodeConstruction code_from_shattered(const Graph& g, const VertexSet& x) {
    auto cert = is_shattered(g, x);
    if (!cert) throw std::invalid_argument("set is not shattered");
    int k = x.size();
    if (k < 1) throw std::invalid_argument("shattered set must be nonempty");
    size_t masks = size_t{1} << k;
    std::vector<int> witness(masks, -1);
    for (int i = 0; i < k; ++i) {
        std::uint32_t self = trace_mask(g, x, x.members[i]);
        if (witness[self] < 0) witness[self] = x.members[i];
    }
    for (std::uint32_t m = 1; m < masks; ++m)
        if (witness[m] < 0) witness[m] = cert->witness_by_mask[m];
    Bitset keep(g.n());
    for (int v : x.members) keep.set(v);
    for (std::uint32_t m = 1; m < masks; ++m) keep.set(witness[m]);
    auto [sub, orig] = induced_subgraph(g, VertexSet::from_bits(keep));
    std::vector<int> newid(g.n(), -1);
    for (int i = 0; i < (int)orig.size(); ++i) newid[orig[i]] = i;
    std::vector<int> code_members;
    for (int i = 0; i < k; ++i) {
        code_members.push_back(newid[x.members[i]]);
        code_members.push_back(newid[witness[std::uint32_t{1} << i]]);
    }
    ShatteredCodeConstruction out{std::move(sub), Code{VertexSet(std::move(code_members), (int)orig.size())},
                                  std::move(orig)};
    return out;
}

enum class GraphClass { girth_at_least_5, chordal_bipartite, interval, c4_free_bipartite };

inline bool in_graph_class(const Graph& g, GraphClass cls) {
    switch (cls) {
        case GraphClass::girth_at_least_5: {
            auto gi = girth(g);
            return !gi || *gi >= 5;
        }
        case GraphClass::chordal_bipartite:
            return is_chordal_bipartite(g);
        case GraphClass::interval:
            // Only used on graphs built from interval models.
            throw std::invalid_argument("interval membership needs a model; search generates its own");
        case GraphClass::c4_free_bipartite:
            return is_bipartite(g).has_value() && is_c4_free(g);
    }
    return false;
}

namespace detail {

inline std::optional<std::pair<Graph, ShatterCertificate>> certify_if_shattered(const Graph& g, int target_dim) {
    if (g.n() > 40) return std::nullopt;  // keep subset scans cheap
    std::vector<int> idx(target_dim);
    for (int i = 0; i < target_dim; ++i) idx[i] = i;
    if (g.n() < target_dim) return std::nullopt;
    while (true) {
        auto cert = is_shattered(g, VertexSet(idx, g.n()));
        if (cert) return std::make_pair(g, std::move(*cert));
        int i = target_dim - 1;
        while (i >= 0 && idx[i] == g.n() - target_dim + i) --i;
        if (i < 0) return std::nullopt;
        ++idx[i];
        for (int j = i + 1; j < target_dim; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Hand-built graphs known to shatter a set of the given size inside the
// class, tried before random search. The path on 6 vertices shatters {1, 3}
// and lies in all four classes.
inline std::vector<Graph> seed_graphs(GraphClass cls, int target_dim) {
    std::vector<Graph> seeds;
    if (target_dim <= 2) seeds.push_back(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}));
    if (cls == GraphClass::chordal_bipartite && target_dim == 3) {
        // Sides {0,1,6,7} and {2,3,4,5}; shatters {0, 1, 2}:
        //   {}->7  {0}->4  {1}->5  {2}->6  {01}->3  {02}->0  {12}->1  {012}->2
        seeds.push_back(Graph::from_edges(8, {{0, 2}, {1, 2}, {6, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 5}}));
    }
    return seeds;
}

}  // namespace detail

// Searches the class for a graph with a shattered set of the given size:
// seed graphs first, then up to `budget` random candidates filtered by class
// membership. Every hit is revalidated (class membership and certificate).
inline std::optional<std::pair<Graph, ShatterCertificate>> witness_search(GraphClass cls, int target_dim, int max_n,
                                                                          long budget, std::uint64_t seed = 1) {
    if (target_dim < 1 || target_dim > 6) throw std::invalid_argument("target_dim out of range");
    if (max_n < 6 || max_n > 40) throw std::invalid_argument("max_n out of range");
    // Interval membership comes from building the graph out of a model, so
    // candidates in that class are generated, never recognized.
    auto consider = [&](const Graph& g, bool in_class) -> std::optional<std::pair<Graph, ShatterCertificate>> {
        if (g.n() > max_n || !(in_class || in_graph_class(g, cls))) return std::nullopt;
        auto hit = detail::certify_if_shattered(g, target_dim);
        if (hit) assert(check_certificate(hit->first, hit->second));
        return hit;
    };
    if (cls == GraphClass::interval) {
        if (target_dim <= 2) {
            IntervalRep rep;  // path model: [0,1], [1,2], ..., touching ends
            for (int v = 0; v < 6; ++v) rep.intervals.push_back({Rational(v), Rational(v + 1)});
            if (auto hit = consider(graph_from_intervals(canonicalize(std::move(rep))), true)) return hit;
        }
    } else {
        for (const Graph& g : detail::seed_graphs(cls, target_dim))
            if (auto hit = consider(g, false)) return hit;
    }
    std::mt19937_64 rng(seed);
    for (long it = 0; it < budget; ++it) {
        int n = 4 + (int)(rng() % (std::uint64_t)(max_n - 3));
        if (cls == GraphClass::interval) {
            IntervalRep rep;
            for (int v = 0; v < n; ++v) {
                long long a = (long long)(rng() % 40), b = (long long)(rng() % 40);
                if (a > b) std::swap(a, b);
                rep.intervals.push_back({Rational(a), Rational(b)});
            }
            if (auto hit = consider(graph_from_intervals(canonicalize(std::move(rep))), true)) return hit;
            continue;
        }
        double p = 0.05 + 0.9 * (double)(rng() % 1000) / 1000.0;
        if (cls == GraphClass::girth_at_least_5) p = 0.05 + 0.25 * (double)(rng() % 1000) / 1000.0;
        Graph g = random_graph(n, p, rng());
        if (cls == GraphClass::c4_free_bipartite || cls == GraphClass::chordal_bipartite) {
            // Random bipartite instead: keep only edges across a random split.
            Graph h(n);
            std::uint64_t split = rng();
            for (auto [u, v] : g.edges())
                if (((split >> (u % 64)) & 1) != ((split >> (v % 64)) & 1)) h.add_edge(u, v);
            g = std::move(h);
        }
        if (auto hit = consider(g, false)) return hit;
    }
    return std::nullopt;
}

// Unit disk arrangement shattering three disks, as scaled integer centers
// (scale 100). The three target disks pairwise intersect; each subset of them
// has a dedicated witness disk, with the far-away disk 15 witnessing {}.
inline std::pair<Graph, ShatterCertificate> unit_disk_shattered_triple() {
    // 0,1,2: targets. 3..9: witnesses for the nonempty subsets; 10: empty.
    std::vector<std::pair<long long, long long>> centers = {
        {0, 0},      {190, 0},   {95, 165},   // targets
        {-150, -95}, {340, -95}, {95, 330},   // singles {0},{1},{2}
        {95, -120},  {-30, 170}, {220, 170},  // pairs {01},{02},{12}
        {95, 60},                             // triple
        {2000, 0},                            // empty
    };
    Graph g = unit_disk_graph(centers, 100);
    auto cert = is_shattered(g, VertexSet({0, 1, 2}, g.n()));
    assert(cert);
    return {std::move(g), std::move(*cert)};
}

// Paths in a spider tree shattering three long paths; every pairwise and
// triple overlap happens at or near the center.
inline std::pair<Graph, ShatterCertificate> tree_paths_shattered_triple() {
    // Tree: center 0 with three legs 1-2, 3-4, 5-6 and a stub 7.
    std::vector<std::pair<int, int>> tree_edges = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {0, 7}};
    std::vector<std::vector<int>> paths = {
        {2, 1, 0, 3},  // target A: leg 1 into leg 2
        {4, 3, 0, 5},  // target B: leg 2 into leg 3
        {6, 5, 0, 1},  // target C: leg 3 into leg 1
        {2},           // {A}
        {4},           // {B}
        {6},           // {C}
        {1},           // {A, C}
        {3},           // {A, B}
        {5},           // {B, C}
        {0},           // {A, B, C}
        {7},           // {} (stub vertex meets no target)
    };
    Graph g = tree_path_intersection_graph(8, tree_edges, paths);
    auto cert = is_shattered(g, VertexSet({0, 1, 2}, g.n()));
    assert(cert);
    return {std::move(g), std::move(*cert)};
}

}  // namespace idcode
