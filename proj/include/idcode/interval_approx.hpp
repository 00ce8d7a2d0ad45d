#pragma once

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idcode/codes.hpp"
#include "idcode/graph.hpp"
#include "idcode/interval.hpp"
#include "idcode/lp.hpp"

namespace idcode {

// The three covering programs behind the interval approximation, all over one
// variable per vertex with every rhs 1:
//   full:  separation rows for every pair, then domination rows
//   inter: separation rows for adjacent pairs only
//   disj:  separation rows for non-adjacent pairs, then domination rows
// Rows are in lexicographic pair order; domination rows ascending.
struct Programs {
    LinearProgram full, inter, disj;
};

inline Programs build_programs(const Graph& g, const IntervalRep& rep) {
    if (!rep_matches_graph(g, rep)) throw std::invalid_argument("interval model does not match the graph");
    detail::require_twin_free(g);
    Programs p;
    p.full.num_vars = p.inter.num_vars = p.disj.num_vars = g.n();
    for (int j = 0; j < g.n(); ++j)
        for (int k = j + 1; k < g.n(); ++k) {
            std::vector<int> support = (g.closed(j) ^ g.closed(k)).to_vector();
            p.full.add_row(support);
            (g.has_edge(j, k) ? p.inter : p.disj).add_row(std::move(support));
        }
    for (int j = 0; j < g.n(); ++j) {
        std::vector<int> support = g.closed(j).to_vector();
        p.full.add_row(support);
        p.disj.add_row(std::move(support));
    }
    return p;
}

enum class ProgramKind { full, inter, disj };

inline Rational opt_fractional(const Graph& g, const IntervalRep& rep, ProgramKind which) {
    Programs p = build_programs(g, rep);
    const LinearProgram& lp = which == ProgramKind::full ? p.full : which == ProgramKind::inter ? p.inter : p.disj;
    LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::optimal) throw Infeasible("covering program is infeasible");
    return sol.value;
}

// Rank windows of an adjacent pair j, k: with begin ranks b1 < b2 and end
// ranks e1 < e2 of the pair (all begins precede all ends since j and k
// intersect), the symmetric difference of the closed neighborhoods splits as
//   left  = vertices whose end rank lies in [b1, b2)
//   right = vertices whose begin rank lies in (e1, e2]
// which is checked exactly by callers.
struct WindowPair {
    int j, k;
    int begin_lo, begin_hi;  // b1, b2
    int end_lo, end_hi;      // e1, e2
    std::vector<int> left, right;
};

inline WindowPair windows(const IntervalRep& rep, int j, int k) {
    if (!rep.canonical()) throw std::invalid_argument("intervals not canonicalized");
    if (j == k || !ranks_intersect(rep, j, k)) throw std::invalid_argument("windows need an adjacent pair");
    WindowPair w;
    w.j = j;
    w.k = k;
    w.begin_lo = std::min(rep.begin_rank[j], rep.begin_rank[k]);
    w.begin_hi = std::max(rep.begin_rank[j], rep.begin_rank[k]);
    w.end_lo = std::min(rep.end_rank[j], rep.end_rank[k]);
    w.end_hi = std::max(rep.end_rank[j], rep.end_rank[k]);
    assert(w.begin_hi < w.end_lo);
    for (int i = 0; i < rep.n(); ++i) {
        if (rep.end_rank[i] >= w.begin_lo && rep.end_rank[i] < w.begin_hi) w.left.push_back(i);
        if (rep.begin_rank[i] > w.end_lo && rep.begin_rank[i] <= w.end_hi) w.right.push_back(i);
    }
    return w;
}

// Minimum stabbing of inclusive position ranges: repeatedly stab the smallest
// not-yet-stabbed upper end. Optimal for interval ranges (any stab of the
// earliest-ending range can be moved to its upper end without loss). Returns
// the chosen positions, ascending.
inline std::vector<int> greedy_stab(std::vector<std::pair<int, int>> ranges) {
    for (auto [lo, hi] : ranges)
        if (lo > hi) throw Infeasible("empty range");
    std::sort(ranges.begin(), ranges.end(), [](auto a, auto b) { return a.second < b.second; });
    std::vector<int> stabs;
    long long last = std::numeric_limits<long long>::min();
    for (auto [lo, hi] : ranges) {
        if (lo <= last && last <= hi) continue;
        stabs.push_back(hi);
        last = hi;
    }
    return stabs;
}

namespace detail {

// Vertices sorted by the given rank vector; ranks are a permutation of
// 1..2n restricted to begins or ends, so this is a plain permutation sort.
inline std::vector<int> order_by_rank(const std::vector<int>& rank) {
    std::vector<int> order(rank.size());
    for (int i = 0; i < (int)order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return rank[a] < rank[b]; });
    return order;
}

}  // namespace detail

// Separates adjacent pairs: solves the edge-separation program fractionally,
// routes every edge to the side of its window holding fractional weight at
// least 1/2 (at least one side does), and stabs each side's ranges greedily.
// The greedy values are checked against the exact side-program optima, which
// are integral by consecutive-ones total unimodularity.
inline VertexSet solve_inter(const Graph& g, const IntervalRep& rep) {
    if (!rep_matches_graph(g, rep)) throw std::invalid_argument("interval model does not match the graph");
    detail::require_twin_free(g);
    auto edges = g.edges();
    if (edges.empty()) return VertexSet({}, g.n());
    LinearProgram inter;
    inter.num_vars = g.n();
    for (auto [j, k] : edges) inter.add_row((g.closed(j) ^ g.closed(k)).to_vector());
    LpSolution frac = solve_lp(inter);
    if (frac.status != LpStatus::optimal) throw Infeasible("edge separation program is infeasible");

    std::vector<int> end_order = detail::order_by_rank(rep.end_rank);
    std::vector<int> begin_order = detail::order_by_rank(rep.begin_rank);
    std::vector<int> end_pos(g.n()), begin_pos(g.n());
    for (int p = 0; p < g.n(); ++p) {
        end_pos[end_order[p]] = p;
        begin_pos[begin_order[p]] = p;
    }

    std::vector<std::pair<int, int>> left_ranges, right_ranges;
    LinearProgram left_lp, right_lp;
    left_lp.num_vars = right_lp.num_vars = g.n();
    Rational half(1, 2);
    for (auto [j, k] : edges) {
        WindowPair w = windows(rep, j, k);
        Bitset symdiff = g.closed(j) ^ g.closed(k);
        Bitset seen(g.n());
        Rational left_weight = 0, right_weight = 0;
        for (int i : w.left) {
            left_weight += frac.point[i];
            seen.set(i);
        }
        for (int i : w.right) {
            right_weight += frac.point[i];
            if (seen.test(i)) throw std::logic_error("windows overlap");
            seen.set(i);
        }
        if (seen != symdiff) throw std::logic_error("windows do not split the symmetric difference");
        if (left_weight < half && right_weight < half) throw std::logic_error("edge weight below 1 in both windows");
        if (left_weight >= half) {
            int lo = g.n(), hi = -1;
            for (int i : w.left) {
                lo = std::min(lo, end_pos[i]);
                hi = std::max(hi, end_pos[i]);
            }
            if (hi - lo + 1 != (int)w.left.size()) throw std::logic_error("left window is not consecutive");
            left_ranges.push_back({lo, hi});
            left_lp.add_row(w.left);
        }
        if (right_weight >= half) {
            int lo = g.n(), hi = -1;
            for (int i : w.right) {
                lo = std::min(lo, begin_pos[i]);
                hi = std::max(hi, begin_pos[i]);
            }
            if (hi - lo + 1 != (int)w.right.size()) throw std::logic_error("right window is not consecutive");
            right_ranges.push_back({lo, hi});
            right_lp.add_row(w.right);
        }
    }

    Bitset chosen(g.n());
    std::vector<int> left_stabs = greedy_stab(left_ranges);
    for (int p : left_stabs) chosen.set(end_order[p]);
    std::vector<int> right_stabs = greedy_stab(right_ranges);
    for (int p : right_stabs) chosen.set(begin_order[p]);

    // Consecutive-ones programs have integral optima; the greedy stab must
    // match them exactly.
    if (!left_lp.rows.empty()) {
        LpSolution left_opt = solve_lp(left_lp);
        if (left_opt.status != LpStatus::optimal || left_opt.value != (int)left_stabs.size())
            throw std::logic_error("left stabbing does not match its program optimum");
    } else if (!left_stabs.empty()) {
        throw std::logic_error("stabs without ranges");
    }
    if (!right_lp.rows.empty()) {
        LpSolution right_opt = solve_lp(right_lp);
        if (right_opt.status != LpStatus::optimal || right_opt.value != (int)right_stabs.size())
            throw std::logic_error("right stabbing does not match its program optimum");
    } else if (!right_stabs.empty()) {
        throw std::logic_error("stabs without ranges");
    }

    // Every edge's symmetric difference must now hold a chosen vertex.
    for (auto [j, k] : edges)
        if (!(g.closed(j) ^ g.closed(k)).intersects(chosen)) throw std::logic_error("edge left unseparated");
    return VertexSet::from_bits(chosen);
}

// Dominates and separates non-adjacent pairs: the ends-first greedy maximal
// independent set. Every vertex gets a member of S in its closed
// neighborhood, and distinct non-adjacent vertices see distinct parts of S.
inline VertexSet solve_disj(const Graph& g, const IntervalRep& rep) {
    if (!rep_matches_graph(g, rep)) throw std::invalid_argument("interval model does not match the graph");
    std::vector<int> order = detail::order_by_rank(rep.end_rank);
    Bitset covered(g.n());
    std::vector<int> s;
    for (int v : order)
        if (!covered.test(v)) {
            s.push_back(v);
            covered |= g.closed(v);
        }
    return VertexSet(std::move(s), g.n());
}

struct ApproxReport {
    Code code;
    VertexSet inter_part, disj_part;
    Rational opt_inter, opt_disj, opt_full;

    // |code| <= 4 opt_inter + 2 opt_disj <= 6 opt_full <= 6 gamma_id; the
    // last step holds because opt_full is a relaxation of the code ILP.
    bool chain_holds() const {
        Rational size{(long)code.vertices.size()};
        Rational mid = 4 * opt_inter + 2 * opt_disj;
        return size <= mid && mid <= 6 * opt_full;
    }
};

inline ApproxReport approx_report(const Graph& g, const IntervalRep& rep_in) {
    IntervalRep rep = rep_in.canonical() ? rep_in : canonicalize(rep_in);
    if (!rep_matches_graph(g, rep)) throw std::invalid_argument("interval model does not match the graph");
    detail::require_twin_free(g);
    ApproxReport report;
    report.inter_part = solve_inter(g, rep);
    report.disj_part = solve_disj(g, rep);
    report.code = Code{VertexSet::from_bits(report.inter_part.bits() | report.disj_part.bits())};
    report.opt_inter = opt_fractional(g, rep, ProgramKind::inter);
    report.opt_disj = opt_fractional(g, rep, ProgramKind::disj);
    report.opt_full = opt_fractional(g, rep, ProgramKind::full);
    Verdict verdict = verify_identifying_code(g, report.code);
    if (!verdict) throw std::logic_error("approximation produced an invalid code: " + verdict.describe());
    if (!report.chain_holds()) throw std::logic_error("approximation bound chain failed");
    return report;
}

// Identifying code of at most 6 times the minimum size, in polynomial time.
inline Code approx_id_code_interval(const Graph& g, const IntervalRep& rep) {
    return approx_report(g, rep).code;
}

}  // namespace idcode
