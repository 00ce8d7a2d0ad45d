#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "idcode/codes.hpp"
#include "test_helpers.hpp"

using namespace idcode;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Code code_of(std::vector<int> v, int n) { return Code{VertexSet(std::move(v), n)}; }

}  // namespace

TEST_CASE("verifier on the path examples") {
    Graph p4 = path(4);
    CHECK(verify_identifying_code(p4, code_of({0, 1, 2}, 4)).valid());
    Verdict v = verify_identifying_code(p4, code_of({1, 2}, 4));
    CHECK(v.kind == Verdict::Kind::not_separating);
    CHECK(v.u == 1);
    CHECK(v.v == 2);
    CHECK(v.describe() == "not separating: pair (1, 2)");
}

TEST_CASE("verifier reports domination failures first, lowest vertex first") {
    Graph p4 = path(4);
    Verdict v = verify_identifying_code(p4, code_of({}, 4));
    CHECK(v.kind == Verdict::Kind::not_dominating);
    CHECK(v.u == 0);
    // Code {0}: vertices 2, 3 undominated; 2 is reported.
    v = verify_identifying_code(p4, code_of({0}, 4));
    CHECK(v.kind == Verdict::Kind::not_dominating);
    CHECK(v.u == 2);
    CHECK(v.describe() == "not dominating: vertex 2");
}

TEST_CASE("requirement list layout") {
    Graph p4 = path(4);
    auto reqs = build_requirements(p4);
    REQUIRE(reqs.size() == 4 + 6);
    for (int u = 0; u < 4; ++u) {
        CHECK(reqs[u].kind == Requirement::Kind::domination);
        CHECK(reqs[u].u == u);
        CHECK(reqs[u].covered_by == p4.closed(u));
    }
    CHECK(reqs[4].kind == Requirement::Kind::separation);
    CHECK(reqs[4].u == 0);
    CHECK(reqs[4].v == 1);
    CHECK(reqs[4].covered_by == (p4.closed(0) ^ p4.closed(1)));
    CHECK(reqs.back().u == 2);
    CHECK(reqs.back().v == 3);
}

TEST_CASE("exact solver on small knowns") {
    CHECK(exact_min_id_code(Graph(1)).vertices.members == std::vector<int>{0});
    CHECK(exact_min_id_code(path(4)).vertices.size() == 3);
    CHECK(exact_min_id_code(path(6)).vertices.size() == 4);
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    CHECK_THROWS_AS(exact_min_id_code(k2), TwinsPresent);
    try {
        exact_min_id_code(k2);
    } catch (const TwinsPresent& e) {
        CHECK(std::string(e.what()) == "twins: 0,1");
        CHECK(e.u == 0);
        CHECK(e.v == 1);
    }
}

TEST_CASE("exact solver cap") {
    CHECK_THROWS_AS(exact_min_id_code(path(21), 20), CapExceeded);
    CHECK_NOTHROW(exact_min_id_code(path(21), 21));
}

TEST_CASE("exact matches brute force on random twin-free graphs") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        int n = 4 + (int)(seed % 5);
        Graph g = oracle::random_twin_free_graph(n, 0.35, seed * 101);
        Code c = exact_min_id_code(g);
        INFO("seed " << seed << " n " << n);
        REQUIRE(verify_identifying_code(g, c).valid());
        CHECK(c.vertices.size() == oracle::brute_min_id_code_size(g));
    }
}

TEST_CASE("exact solver result is verifier-valid and minimal on paths") {
    // gamma_id of P_n is known small; cross-check the oracle instead of a table.
    for (int n = 3; n <= 9; ++n) {
        Graph g = path(n);
        Code c = exact_min_id_code(g);
        REQUIRE(verify_identifying_code(g, c).valid());
        CHECK(c.vertices.size() == oracle::brute_min_id_code_size(g));
    }
}

TEST_CASE("greedy code is valid and log-bounded") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        int n = 5 + (int)(seed % 6);
        Graph g = oracle::random_twin_free_graph(n, 0.4, seed * 57 + 7);
        Code greedy = greedy_id_code(g);
        REQUIRE(verify_identifying_code(g, greedy).valid());
        int opt = oracle::brute_min_id_code_size(g);
        double requirements = n + n * (n - 1) / 2.0;
        CHECK((double)greedy.vertices.size() <= (std::log(requirements) + 1.0) * opt);
    }
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    CHECK_THROWS_AS(greedy_id_code(k2), TwinsPresent);
}

TEST_CASE("greedy on K1") {
    Code c = greedy_id_code(Graph(1));
    CHECK(c.vertices.members == std::vector<int>{0});
}

TEST_CASE("isolated vertices are their own traces") {
    // Two isolated vertices are not twins (distinct closed neighborhoods);
    // the only code is everything.
    Graph two_isolated(2);
    Code c = exact_min_id_code(two_isolated);
    CHECK(c.vertices.members == std::vector<int>{0, 1});
    CHECK(verify_identifying_code(two_isolated, c).valid());
}

TEST_CASE("discriminating code verification") {
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    VertexSet x({0}, 2), y({1}, 2);
    CHECK(verify_discriminating_code(k2, x, y, VertexSet({1}, 2)).valid());
    Verdict v = verify_discriminating_code(k2, x, y, VertexSet({}, 2));
    CHECK(v.kind == Verdict::Kind::not_dominating);
    CHECK(v.u == 0);
    // Bad partitions are input errors, not failed verdicts.
    CHECK_THROWS_AS(verify_discriminating_code(k2, VertexSet({0, 1}, 2), y, VertexSet({}, 2)), std::invalid_argument);
    CHECK_THROWS_AS(verify_discriminating_code(k2, x, y, VertexSet({0}, 2)), std::invalid_argument);
    Graph with_inner = Graph::from_edges(4, {{0, 1}, {2, 3}, {0, 2}});
    CHECK_THROWS_AS(
        verify_discriminating_code(with_inner, VertexSet({0, 1}, 4), VertexSet({2, 3}, 4), VertexSet({}, 4)),
        std::invalid_argument);
}

TEST_CASE("exact discriminating code on a small bipartite graph") {
    // X = {0,1,2}, Y = {3,4}; 0:{3}, 1:{4}, 2:{3,4}.
    Graph g = Graph::from_edges(5, {{0, 3}, {1, 4}, {2, 3}, {2, 4}});
    VertexSet x({0, 1, 2}, 5), y({3, 4}, 5);
    VertexSet c = exact_min_discriminating_code(g, x, y);
    CHECK(c.members == std::vector<int>{3, 4});
    CHECK(verify_discriminating_code(g, x, y, c).valid());
    // An X vertex with empty neighborhood can never be dominated.
    Graph bad = Graph::from_edges(3, {{0, 2}});
    CHECK_THROWS_AS(exact_min_discriminating_code(bad, VertexSet({0, 1}, 3), VertexSet({2}, 3)), Infeasible);
}

TEST_CASE("set cover solver") {
    SetCover1Instance forced{3, {{0, 1}, {2}}};
    CHECK(exact_min_set_cover(forced) == std::vector<int>{0, 1});
    SetCover1Instance single{2, {{0, 1}}};
    CHECK(exact_min_set_cover(single) == std::vector<int>{0});
    SetCover1Instance overlap{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}};
    auto sol = exact_min_set_cover(overlap);
    CHECK(sol.size() == 3);
    CHECK(overlap.is_cover(sol));
    SetCover1Instance big{21, {{0, 1}}};
    big.sets.clear();
    for (int e = 0; e < 21; ++e) big.sets.push_back({e});
    CHECK_THROWS_AS(exact_min_set_cover(big, 20), CapExceeded);
}

TEST_CASE("infeasible separation is reported with the pair") {
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    auto reqs = build_requirements(k2);
    Bitset all(2);
    all.set(0);
    all.set(1);
    try {
        detail::min_cover(reqs, all);
        FAIL("expected Infeasible");
    } catch (const Infeasible& e) {
        CHECK(std::string(e.what()).find("(0, 1)") != std::string::npos);
    }
}
