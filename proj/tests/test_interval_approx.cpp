#include <catch2/catch_amalgamated.hpp>

#include "idcode/codes.hpp"
#include "idcode/constructions.hpp"
#include "idcode/interval_approx.hpp"
#include "test_helpers.hpp"

using namespace idcode;

namespace {

IntervalRep rep_of(std::vector<std::pair<long long, long long>> coords) {
    IntervalRep rep;
    for (auto [a, b] : coords) rep.intervals.push_back({Rational(a), Rational(b)});
    return canonicalize(std::move(rep));
}

}  // namespace

TEST_CASE("touching closed intervals are adjacent") {
    IntervalRep rep = rep_of({{1, 2}, {2, 3}});
    Graph g = graph_from_intervals(rep);
    CHECK(g.has_edge(0, 1));
    CHECK(ranks_intersect(rep, 0, 1));
    // Ranks: begins get 1 and 2 (begin sorts before the equal-coordinate end).
    CHECK(rep.begin_rank == std::vector<int>{1, 2});
    CHECK(rep.end_rank == std::vector<int>{3, 4});
}

TEST_CASE("windows split the symmetric difference, left example") {
    // j = [1,6], k = [3,8], i = [0,2]: i only meets j, through its end.
    IntervalRep rep = rep_of({{1, 6}, {3, 8}, {0, 2}});
    WindowPair w = windows(rep, 0, 1);
    CHECK(w.left == std::vector<int>{2});
    CHECK(w.right.empty());
    Graph g = graph_from_intervals(rep);
    CHECK(neighborhood_symmetric_difference(g, 0, 1).members == std::vector<int>{2});
}

TEST_CASE("windows split the symmetric difference, containment example") {
    // k = [3,5] inside j = [1,10]; i = [6,8] meets only j, through its begin.
    IntervalRep rep = rep_of({{1, 10}, {3, 5}, {6, 8}});
    WindowPair w = windows(rep, 0, 1);
    CHECK(w.left.empty());
    CHECK(w.right == std::vector<int>{2});
}

TEST_CASE("windows demand an adjacent canonical pair") {
    IntervalRep rep = rep_of({{0, 1}, {5, 6}});
    CHECK_THROWS_AS(windows(rep, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(windows(rep, 0, 0), std::invalid_argument);
    IntervalRep raw;
    raw.intervals.push_back({Rational(0), Rational(2)});
    raw.intervals.push_back({Rational(1), Rational(3)});
    CHECK_THROWS_AS(windows(raw, 0, 1), std::invalid_argument);
}

TEST_CASE("window partition is exact on random models") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto [g, rep] = random_interval_graph(8, 14, seed * 401);
        for (auto [j, k] : g.edges()) {
            WindowPair w = windows(rep, j, k);
            std::vector<int> both = w.left;
            both.insert(both.end(), w.right.begin(), w.right.end());
            std::sort(both.begin(), both.end());
            INFO("seed " << seed << " edge " << j << "," << k);
            CHECK(both == neighborhood_symmetric_difference(g, j, k).members);
            // Disjoint by construction: left uses end ranks strictly below
            // begin_hi, right uses begin ranks strictly above end_lo.
            std::vector<int> inter;
            std::set_intersection(w.left.begin(), w.left.end(), w.right.begin(), w.right.end(),
                                  std::back_inserter(inter));
            CHECK(inter.empty());
        }
    }
}

TEST_CASE("greedy stabbing") {
    CHECK(greedy_stab({{1, 3}, {2, 4}, {5, 5}}) == std::vector<int>{3, 5});
    CHECK(greedy_stab({{7, 7}}) == std::vector<int>{7});
    CHECK(greedy_stab({}) == std::vector<int>{});
    CHECK(greedy_stab({{1, 5}, {2, 5}, {3, 5}}) == std::vector<int>{5});
    CHECK_THROWS_AS(greedy_stab({{3, 2}}), Infeasible);
}

TEST_CASE("greedy stabbing is optimal") {
    std::mt19937_64 rng(777);
    for (int t = 0; t < 60; ++t) {
        std::vector<std::pair<int, int>> ranges;
        int m = 1 + (int)(rng() % 6);
        for (int i = 0; i < m; ++i) {
            int lo = (int)(rng() % 10);
            int hi = lo + (int)(rng() % 5);
            ranges.push_back({lo, hi});
        }
        auto stabs = greedy_stab(ranges);
        // Every range is hit.
        for (auto [lo, hi] : ranges) {
            bool hit = false;
            for (int s : stabs) hit |= lo <= s && s <= hi;
            CHECK(hit);
        }
        CHECK((int)stabs.size() == oracle::brute_min_stab(ranges));
    }
}

TEST_CASE("program shapes") {
    // Two disjoint intervals: no edge rows; one separation + two dominations.
    IntervalRep rep = rep_of({{0, 1}, {5, 6}});
    Graph g = graph_from_intervals(rep);
    Programs p = build_programs(g, rep);
    CHECK(p.inter.rows.empty());
    CHECK(p.disj.rows.size() == 3);
    CHECK(p.full.rows.size() == 3);
    // K1: a single domination row, optimum 1.
    auto [g1, rep1] = path_graph(1);
    CHECK(opt_fractional(g1, rep1, ProgramKind::full) == 1);
    CHECK(opt_fractional(g1, rep1, ProgramKind::disj) == 1);
    CHECK(opt_fractional(g1, rep1, ProgramKind::inter) == 0);
}

TEST_CASE("programs refuse twins and mismatched models") {
    IntervalRep rep = rep_of({{0, 2}, {0, 2}});  // identical intervals: twins
    Graph g = graph_from_intervals(rep);
    CHECK_THROWS_AS(build_programs(g, rep), TwinsPresent);
    auto [gp, repp] = path_graph(3);
    CHECK_THROWS_AS(build_programs(Graph(3), repp), std::invalid_argument);
}

TEST_CASE("disjoint-side greedy on knowns") {
    // Pairwise disjoint intervals force everything into the set.
    IntervalRep rep = rep_of({{0, 1}, {3, 4}, {6, 7}});
    Graph g = graph_from_intervals(rep);
    CHECK(solve_disj(g, rep).members == std::vector<int>{0, 1, 2});
    // Ends-first greedy: [2,3] ends first and covers both overlapping ones.
    IntervalRep rep2 = rep_of({{1, 4}, {2, 3}, {5, 6}});
    Graph g2 = graph_from_intervals(rep2);
    CHECK(solve_disj(g2, rep2).members == std::vector<int>{1, 2});
}

TEST_CASE("interval solver on the six-vertex path") {
    auto [g, rep] = path_graph(6);
    ApproxReport report = approx_report(g, rep);
    CHECK(verify_identifying_code(g, report.code).valid());
    CHECK(report.chain_holds());
    int exact = exact_min_id_code(g).vertices.size();
    CHECK(exact == 4);
    CHECK(report.code.vertices.size() <= 6 * exact);
    CHECK(Rational((long)report.code.vertices.size()) <= 4 * report.opt_inter + 2 * report.opt_disj);
    CHECK(4 * report.opt_inter + 2 * report.opt_disj <= 6 * report.opt_full);
    CHECK(report.opt_full <= Rational(exact));
}

TEST_CASE("approximation chain holds on random instances") {
    int checked = 0;
    for (std::uint64_t seed = 1; checked < 30; ++seed) {
        auto [g, rep] = oracle::random_twin_free_intervals(6 + (int)(seed % 4), 12, seed * 211);
        ++checked;
        ApproxReport report = approx_report(g, rep);
        REQUIRE(verify_identifying_code(g, report.code).valid());
        int exact = exact_min_id_code(g).vertices.size();
        INFO("seed " << seed);
        CHECK(report.opt_full <= Rational(exact));
        CHECK(report.code.vertices.size() <= 6 * exact);
        CHECK(report.chain_holds());
        // Side solutions respect their own fractional bounds.
        CHECK(Rational((long)report.inter_part.size()) <= 4 * report.opt_inter);
        CHECK(Rational((long)report.disj_part.size()) <= 2 * report.opt_disj);
    }
}

TEST_CASE("inter side separates every edge") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto [g, rep] = oracle::random_twin_free_intervals(7, 12, seed * 97 + 13);
        VertexSet s = solve_inter(g, rep);
        Bitset sb = s.bits();
        for (auto [j, k] : g.edges()) {
            INFO("seed " << seed << " edge " << j << "," << k);
            CHECK(((g.closed(j) ^ g.closed(k)) & sb).any());
        }
    }
}

TEST_CASE("disj side dominates and separates non-adjacent pairs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto [g, rep] = oracle::random_twin_free_intervals(7, 12, seed * 61 + 5);
        VertexSet s = solve_disj(g, rep);
        Bitset sb = s.bits();
        for (int v = 0; v < g.n(); ++v) CHECK((g.closed(v) & sb).any());
        for (int j = 0; j < g.n(); ++j)
            for (int k = j + 1; k < g.n(); ++k) {
                if (g.has_edge(j, k)) continue;
                INFO("seed " << seed << " pair " << j << "," << k);
                CHECK(((g.closed(j) ^ g.closed(k)) & sb).any());
            }
    }
}
