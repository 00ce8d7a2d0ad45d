#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idcode/codes.hpp"
#include "idcode/errors.hpp"
#include "idcode/graph.hpp"
#include "idcode/setcover.hpp"

namespace idcode {

// Perfect matchings partitioning the edges of K_{2m}, by the round-robin
// rotation: in round r, vertex 2m-1 pairs with r, and (r+t) pairs with
// (r-t) mod (2m-1) for t = 1..m-1. Pairs are (low, high); matchings and the
// pairs inside them come out lexicographically sorted.
inline std::vector<std::vector<std::pair<int, int>>> one_factorization(int m) {
    if (m < 1) throw std::invalid_argument("one_factorization needs m >= 1");
    int nv = 2 * m;
    std::vector<std::vector<std::pair<int, int>>> classes;
    for (int r = 0; r < nv - 1; ++r) {
        std::vector<std::pair<int, int>> matching;
        matching.push_back({std::min(nv - 1, r), std::max(nv - 1, r)});
        for (int t = 1; t < m; ++t) {
            int a = (r + t) % (nv - 1), b = ((r - t) % (nv - 1) + (nv - 1)) % (nv - 1);
            matching.push_back({std::min(a, b), std::max(a, b)});
        }
        std::sort(matching.begin(), matching.end());
        classes.push_back(std::move(matching));
    }
    return classes;
}

enum class ReducedRole { element_copy, set_copy, x1_prime, x2_prime, z };

struct RoleLabel {
    ReducedRole role;
    int copy = -1;   // which copy block, for element_copy / set_copy
    int index = -1;  // element id, set id, or z id

    std::string describe() const {
        switch (role) {
            case ReducedRole::element_copy:
                return "x[" + std::to_string(copy) + "," + std::to_string(index) + "]";
            case ReducedRole::set_copy:
                return "s[" + std::to_string(copy) + "," + std::to_string(index) + "]";
            case ReducedRole::x1_prime:
                return "x'[" + std::to_string(index) + "]";
            case ReducedRole::x2_prime:
                return "x''[" + std::to_string(index) + "]";
            default:
                return "z[" + std::to_string(index) + "]";
        }
    }
};

// The hardness gadget: ell = 2n^2 - 1 disjoint copies of the membership graph
// of (X, S), two extra element columns X'_1 and X'_2 with x'' matched to x'
// and to every copy of x, and (for identifying codes) 2n^2 tag vertices Z
// wired so each set copy sees its own pair of tags. Vertex order: copies
// first (elements then sets, per copy), then X'_1, X'_2, then Z.
struct ReducedInstance {
    Graph graph;
    SetCover1Instance sc;
    int ell = 0;
    bool has_z = false;
    std::vector<RoleLabel> labels;
    std::vector<std::vector<std::pair<int, int>>> set_pairs;  // [copy][set] -> z tag pair (has_z only)

    int n() const { return sc.ground_size; }
    int k() const { return sc.num_sets(); }
    int block() const { return n() + k(); }
    int element_vertex(int copy, int e) const { return copy * block() + e; }
    int set_vertex(int copy, int j) const { return copy * block() + n() + j; }
    int x1_vertex(int e) const { return ell * block() + e; }
    int x2_vertex(int e) const { return ell * block() + n() + e; }
    int z_vertex(int t) const { return ell * block() + 2 * n() + t; }

    // Bipartition sides of the gadget; for the discriminating instance these
    // are the (X, Y) arguments of the verifier.
    VertexSet x_side() const {
        std::vector<int> v;
        for (int i = 0; i < ell; ++i)
            for (int e = 0; e < n(); ++e) v.push_back(element_vertex(i, e));
        for (int e = 0; e < n(); ++e) v.push_back(x1_vertex(e));
        if (has_z)
            for (int t = 0; t < 2 * n() * n(); ++t) v.push_back(z_vertex(t));
        return VertexSet(std::move(v), graph.n());
    }
    VertexSet y_side() const {
        std::vector<int> v;
        for (int i = 0; i < ell; ++i)
            for (int j = 0; j < k(); ++j) v.push_back(set_vertex(i, j));
        for (int e = 0; e < n(); ++e) v.push_back(x2_vertex(e));
        return VertexSet(std::move(v), graph.n());
    }
};

namespace detail {

inline void check_reduction_input(const SetCover1Instance& sc) {
    sc.validate();
    if (sc.ground_size < 2) throw DegenerateInstance("ground set has fewer than 2 elements");
    for (int j = 0; j < sc.num_sets(); ++j)
        if ((int)sc.sets[j].size() == sc.ground_size)
            throw DegenerateInstance("set " + std::to_string(j) + " covers the whole ground set");
}

inline ReducedInstance build_reduction(const SetCover1Instance& sc, bool with_z) {
    check_reduction_input(sc);
    ReducedInstance inst;
    inst.sc = sc;
    inst.has_z = with_z;
    int n = sc.ground_size, k = sc.num_sets();
    inst.ell = 2 * n * n - 1;
    assert(k <= n * (n + 1) / 2);  // intersection-1 families cannot be larger
    int total = inst.ell * (n + k) + 2 * n + (with_z ? 2 * n * n : 0);
    inst.graph = Graph(total);
    inst.labels.resize(total);
    for (int i = 0; i < inst.ell; ++i) {
        for (int e = 0; e < n; ++e) inst.labels[inst.element_vertex(i, e)] = {ReducedRole::element_copy, i, e};
        for (int j = 0; j < k; ++j) {
            inst.labels[inst.set_vertex(i, j)] = {ReducedRole::set_copy, i, j};
            for (int e : sc.sets[j]) inst.graph.add_edge(inst.element_vertex(i, e), inst.set_vertex(i, j));
        }
    }
    for (int e = 0; e < n; ++e) {
        inst.labels[inst.x1_vertex(e)] = {ReducedRole::x1_prime, -1, e};
        inst.labels[inst.x2_vertex(e)] = {ReducedRole::x2_prime, -1, e};
        inst.graph.add_edge(inst.x2_vertex(e), inst.x1_vertex(e));
        for (int i = 0; i < inst.ell; ++i) inst.graph.add_edge(inst.x2_vertex(e), inst.element_vertex(i, e));
    }
    if (with_z) {
        for (int t = 0; t < 2 * n * n; ++t) inst.labels[inst.z_vertex(t)] = {ReducedRole::z, -1, t};
        // Tag pairs: matching class i of K_{2n^2} supplies copy i; the first
        // k pairs (lexicographic) label the sets of that copy.
        auto classes = one_factorization(n * n);
        assert((int)classes.size() == inst.ell && (int)classes[0].size() == n * n && k <= n * n);
        inst.set_pairs.assign(inst.ell, std::vector<std::pair<int, int>>(k));
        for (int i = 0; i < inst.ell; ++i)
            for (int j = 0; j < k; ++j) {
                auto [a, b] = classes[i][j];
                inst.set_pairs[i][j] = {a, b};
                inst.graph.add_edge(inst.z_vertex(a), inst.set_vertex(i, j));
                inst.graph.add_edge(inst.z_vertex(b), inst.set_vertex(i, j));
            }
    }
    return inst;
}

inline void check_is_cover(const SetCover1Instance& sc, const std::vector<int>& cover) {
    if (!sc.is_cover(cover)) throw std::invalid_argument("given sets do not cover the ground set");
}

}  // namespace detail

inline ReducedInstance build_dc_instance(const SetCover1Instance& sc) { return detail::build_reduction(sc, false); }
inline ReducedInstance build_ic_instance(const SetCover1Instance& sc) { return detail::build_reduction(sc, true); }

// Cover of size d -> discriminating code of size ell*d + n: the d sets in
// every copy, plus all of X'_2.
inline VertexSet setcover_to_dc_solution(const ReducedInstance& inst, const std::vector<int>& cover) {
    if (inst.has_z) throw std::invalid_argument("expected a discriminating-code instance");
    detail::check_is_cover(inst.sc, cover);
    std::vector<int> members;
    for (int i = 0; i < inst.ell; ++i)
        for (int j : cover) members.push_back(inst.set_vertex(i, j));
    for (int e = 0; e < inst.n(); ++e) members.push_back(inst.x2_vertex(e));
    return VertexSet(std::move(members), inst.graph.n());
}

// Cover of size d -> identifying code of size ell*d + 2n + 2n^2: the d sets
// in every copy, plus X_1 (the first element copy), X'_2 and Z.
inline Code setcover_to_ic_solution(const ReducedInstance& inst, const std::vector<int>& cover) {
    if (!inst.has_z) throw std::invalid_argument("expected an identifying-code instance");
    detail::check_is_cover(inst.sc, cover);
    std::vector<int> members;
    for (int i = 0; i < inst.ell; ++i)
        for (int j : cover) members.push_back(inst.set_vertex(i, j));
    for (int e = 0; e < inst.n(); ++e) {
        members.push_back(inst.element_vertex(0, e));
        members.push_back(inst.x2_vertex(e));
    }
    for (int t = 0; t < 2 * inst.n() * inst.n(); ++t) members.push_back(inst.z_vertex(t));
    return Code{VertexSet(std::move(members), inst.graph.n())};
}

// Valid discriminating code -> cover: every copy's code sets already cover
// (an uncovered element copy would share the trace {x''} with its X'_1
// twin), so return the smallest copy, lowest index on ties.
inline std::vector<int> dc_solution_to_setcover(const ReducedInstance& inst, const VertexSet& code) {
    if (inst.has_z) throw std::invalid_argument("expected a discriminating-code instance");
    Verdict verdict = verify_discriminating_code(inst.graph, inst.x_side(), inst.y_side(), code);
    if (!verdict) throw std::invalid_argument("not a discriminating code: " + verdict.describe());
    std::vector<int> best;
    for (int i = 0; i < inst.ell; ++i) {
        std::vector<int> d;
        for (int j = 0; j < inst.k(); ++j)
            if (code.contains(inst.set_vertex(i, j))) d.push_back(j);
        if (!inst.sc.is_cover(d)) throw std::logic_error("copy of a valid code is not a cover");
        if (best.empty() || d.size() < best.size()) best = std::move(d);
    }
    return best;
}

// Valid identifying code -> cover. Copies whose code sets miss an element are
// repaired: the uncovered element's copy (case 1) or its X'_1 twin (case 2)
// is swapped for the lowest-index set covering it; one of the two is always
// present in a valid code. The repaired code (with Z, X_1, X'_2 added back)
// is revalidated, then the smallest copy wins as for discriminating codes.
inline std::vector<int> ic_solution_to_setcover(const ReducedInstance& inst, const Code& code) {
    if (!inst.has_z) throw std::invalid_argument("expected an identifying-code instance");
    Verdict verdict = verify_identifying_code(inst.graph, code);
    if (!verdict) throw std::invalid_argument("not an identifying code: " + verdict.describe());
    Bitset current = code.vertices.bits();
    for (int i = 0; i < inst.ell; ++i) {
        for (int e = 0; e < inst.n(); ++e) {
            bool covered = false;
            int lowest_set = -1;
            for (int j = 0; j < inst.k() && !covered; ++j) {
                if (!std::binary_search(inst.sc.sets[j].begin(), inst.sc.sets[j].end(), e)) continue;
                if (lowest_set < 0) lowest_set = j;
                covered = current.test(inst.set_vertex(i, j));
            }
            if (covered) continue;
            assert(lowest_set >= 0);  // validated instances cover everything
            if (current.test(inst.element_vertex(i, e))) {
                current.reset(inst.element_vertex(i, e));
            } else if (current.test(inst.x1_vertex(e))) {
                current.reset(inst.x1_vertex(e));
            } else {
                // A valid code always contains the element copy or its twin
                // when no chosen set covers the element (they would share the
                // trace {x''} otherwise), and repairs keep that true.
                throw std::logic_error("uncovered element with neither twin in the code");
            }
            current.set(inst.set_vertex(i, lowest_set));
        }
    }
    Bitset finished = current;
    for (int e = 0; e < inst.n(); ++e) {
        finished.set(inst.element_vertex(0, e));
        finished.set(inst.x2_vertex(e));
    }
    for (int t = 0; t < 2 * inst.n() * inst.n(); ++t) finished.set(inst.z_vertex(t));
    Verdict recheck = verify_identifying_code(inst.graph, Code{VertexSet::from_bits(finished)});
    if (!recheck) throw std::logic_error("repaired code is invalid: " + recheck.describe());
    std::vector<int> best;
    for (int i = 0; i < inst.ell; ++i) {
        std::vector<int> d;
        for (int j = 0; j < inst.k(); ++j)
            if (current.test(inst.set_vertex(i, j))) d.push_back(j);
        if (!inst.sc.is_cover(d)) throw std::logic_error("repaired copy is not a cover");
        if (best.empty() || d.size() < best.size()) best = std::move(d);
    }
    return best;
}

}  // namespace idcode
