#include <catch2/catch_amalgamated.hpp>

#include "idcode/constructions.hpp"
#include "idcode/vc.hpp"
#include "test_helpers.hpp"

using namespace idcode;

TEST_CASE("c4-free bipartite family") {
    for (int n = 3; n <= 6; ++n) {
        auto [g, code] = c4_free_bipartite_family(n);
        INFO("n " << n);
        CHECK(g.n() == n + n * (n - 1) / 2);
        CHECK(code.vertices.size() == n);
        CHECK(is_bipartite(g).has_value());
        CHECK(is_c4_free(g));
        CHECK(is_twin_free(g));
        CHECK(verify_identifying_code(g, code).valid());
    }
    CHECK(c4_free_bipartite_family(3).first.n() == 6);
    CHECK(c4_free_bipartite_family(4).first.n() == 10);
    CHECK(c4_free_bipartite_family(5).first.n() == 15);
    CHECK_THROWS_AS(c4_free_bipartite_family(2), std::invalid_argument);
}

TEST_CASE("c4-free family pushes against the sauer bound") {
    // n(n+1)/2 vertices with a code of size n; VC-dimension 2 keeps the Sauer
    // bound near sqrt, so the family is extremal up to constants.
    auto [g, code] = c4_free_bipartite_family(5);
    CHECK(g.n() == 15);
    CHECK(vc_dimension(g).dimension == 2);
    CHECK(sauer_lower_bound(g.n(), 2) == 4);
    CHECK(code.vertices.size() == 5);
}

TEST_CASE("vc-d bipartite family") {
    auto [g2, c2] = vc_d_bipartite_family(2);
    CHECK(g2.n() == 3);
    CHECK(c2.vertices.members == std::vector<int>{0, 1});
    CHECK(verify_identifying_code(g2, c2).valid());

    auto [g3, c3] = vc_d_bipartite_family(3);
    CHECK(g3.n() == 7);
    CHECK(c3.vertices.size() == 3);
    CHECK(is_bipartite(g3).has_value());
    CHECK(is_twin_free(g3));
    CHECK(verify_identifying_code(g3, c3).valid());

    CHECK_THROWS_AS(vc_d_bipartite_family(1), std::invalid_argument);
    CHECK_THROWS_AS(vc_d_bipartite_family(11), std::invalid_argument);
}

TEST_CASE("vc-d family measured dimension is recorded, not assumed") {
    // The A side is stable, so closed neighborhoods of B vertices never
    // contain other B vertices; measured dimension can fall short of d.
    for (int d = 2; d <= 3; ++d) {
        auto [g, code] = vc_d_bipartite_family(d);
        int measured = vc_dimension(g).dimension;
        INFO("d " << d << " measured " << measured);
        CHECK(measured >= 1);
        CHECK(measured <= d);
        CHECK(measured == oracle::brute_vc_dimension(g));
    }
}

TEST_CASE("path graph with interval model") {
    auto [g, rep] = path_graph(6);
    CHECK(g.n() == 6);
    CHECK(g.num_edges() == 5);
    CHECK(rep_matches_graph(g, rep));
    CHECK(vc_dimension(g).dimension == 2);

    auto [g1, rep1] = path_graph(1);
    CHECK(g1.n() == 1);
    CHECK(g1.edges().empty());
    CHECK(rep_matches_graph(g1, rep1));
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
}
