#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <nlohmann/json.hpp>

#include "core/coloring.hpp"
#include "core/errors.hpp"
#include "core/families.hpp"
#include "core/power.hpp"
#include "test_util.hpp"

using gp::EdgeColor;
using gp::Graph;

namespace {

// Brute-force overlap count for one edge, independent of the two-pointer merge
// inside color_edges.
long long common_count(const Graph& g, int u, int v) {
    std::vector<int> nu = g.neighbors(u);
    std::vector<int> nv = g.neighbors(v);
    std::vector<int> both;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                          std::back_inserter(both));
    return static_cast<long long>(both.size());
}

}  // namespace

TEST_CASE("tight overlap paints red, sparse overlap paints blue") {
    gp::EdgeColoring k5 = gp::color_edges(testutil::complete(5));
    CHECK(k5.degree == 4);
    CHECK(k5.edges.size() == 10);
    for (EdgeColor c : k5.colors) CHECK(c == EdgeColor::red);

    gp::EdgeColoring c7 = gp::color_edges(gp::cycle(7));
    for (EdgeColor c : c7.colors) CHECK(c == EdgeColor::blue);

    gp::EdgeColoring cay = gp::color_edges(gp::cayley_undirected(13, {1, 2}));
    for (EdgeColor c : cay.colors) CHECK(c == EdgeColor::blue);

    CHECK_THROWS_AS(gp::color_edges(testutil::star(5)), gp::NotRegularError);
}

TEST_CASE("coloring agrees with a brute-force overlap oracle") {
    for (const Graph& g : {gp::regularized_h(3, 9), gp::regularized_h(4, 7),
                           testutil::petersen(), gp::cayley_undirected(11, {1, 3, 5}),
                           gp::random_regular_connected(30, 4, 11)}) {
        gp::EdgeColoring coloring = gp::color_edges(g);
        REQUIRE(coloring.edges.size() == static_cast<size_t>(g.size()));
        for (size_t i = 0; i < coloring.edges.size(); ++i) {
            auto [u, v] = coloring.edges[i];
            bool red = 3 * common_count(g, u, v) > 2LL * coloring.degree;
            CHECK(coloring.colors[i] == (red ? EdgeColor::red : EdgeColor::blue));
        }
    }
}

TEST_CASE("vertex classes on the regularized layered graph") {
    Graph g = gp::regularized_h(3, 9);
    gp::EdgeColoring coloring = gp::color_edges(g);
    gp::BrsPartition p = gp::partition_brs(g, coloring);

    CHECK(p.b == std::vector<int>{8, 9, 10, 11});  // the two middle layers
    std::vector<int> ends;
    for (int v = 0; v < 8; ++v) ends.push_back(v);
    for (int v = 12; v < 20; ++v) ends.push_back(v);
    CHECK(p.r == ends);
    CHECK(p.s.empty());
    for (int v : p.b) CHECK(p.klass[v] == 0);
    for (int v : p.r) CHECK(p.klass[v] == 1);

    // Exactly two blue edges, both bridging the middle layers front-to-back.
    std::vector<std::pair<int, int>> blue;
    for (size_t i = 0; i < coloring.edges.size(); ++i) {
        if (coloring.colors[i] == EdgeColor::blue) blue.push_back(coloring.edges[i]);
    }
    CHECK(blue == std::vector<std::pair<int, int>>{{8, 11}, {9, 10}});
}

TEST_CASE("vertex classes partition every graph") {
    for (const Graph& g : testutil::sample_pool()) {
        if (!gp::regularity(g)) continue;
        gp::EdgeColoring coloring = gp::color_edges(g);
        gp::BrsPartition p = gp::partition_brs(g, coloring);
        CHECK(p.b.size() + p.r.size() + p.s.size() == static_cast<size_t>(g.order()));
        CHECK(std::is_sorted(p.b.begin(), p.b.end()));
        CHECK(std::is_sorted(p.r.begin(), p.r.end()));
        CHECK(std::is_sorted(p.s.begin(), p.s.end()));
        // Class membership is consistent with the definitions.
        for (int x : p.r) {
            bool touches_b = false;
            for (int y : g.neighbors(x)) touches_b |= p.klass[y] == 0;
            CHECK(touches_b);
        }
        for (int x : p.s) {
            for (int y : g.neighbors(x)) CHECK(p.klass[y] != 0);
        }
    }
    gp::EdgeColoring c5 = gp::color_edges(gp::cycle(5));
    CHECK_THROWS_AS(gp::partition_brs(gp::cycle(6), c5), std::invalid_argument);
}

TEST_CASE("proximity statement") {
    Graph g = gp::regularized_h(3, 9);
    gp::EdgeColoring coloring = gp::color_edges(g);
    gp::BrsPartition p = gp::partition_brs(g, coloring);
    gp::ProximityReport prox = gp::check_b_within_two(g, p);
    CHECK(prox.applicable);
    CHECK(prox.reason.empty());
    CHECK(prox.holds);
    REQUIRE(prox.nearest_b.size() == 20);
    CHECK(prox.nearest_b[8] == 0);
    CHECK(prox.nearest_b[0] == 1);   // layer 0 touches layer 1
    CHECK(prox.nearest_b[19] == 1);  // layer 3 touches layer 2
    for (int dist : prox.nearest_b) CHECK(dist <= 2);

    // Low degree: the statement is not claimed, but the numbers still come back.
    Graph c8 = gp::cycle(8);
    gp::EdgeColoring c8col = gp::color_edges(c8);
    gp::ProximityReport low = gp::check_b_within_two(c8, gp::partition_brs(c8, c8col));
    CHECK_FALSE(low.applicable);
    CHECK(low.reason == "degree 2 is not above 6");
    CHECK(low.holds);  // every edge is blue, so b is everything

    // No blue edge at all: nearest_b reports unreachable.
    Graph k5 = testutil::complete(5);
    gp::ProximityReport none =
        gp::check_b_within_two(k5, gp::partition_brs(k5, gp::color_edges(k5)));
    CHECK_FALSE(none.applicable);
    CHECK_FALSE(none.holds);
    for (int dist : none.nearest_b) CHECK(dist == gp::kUnreachable);
}

TEST_CASE("partition counting statements") {
    Graph g = gp::regularized_h(3, 9);
    gp::EdgeColoring coloring = gp::color_edges(g);
    gp::BrsPartition p = gp::partition_brs(g, coloring);
    gp::PartitionInequalityReport rep = gp::check_partition_inequalities(g, coloring, p);
    CHECK(rep.applicable);
    CHECK(rep.r_side_bound);
    CHECK(rep.s_side_bound);
    CHECK(rep.s_at_most_r);
    CHECK(rep.br_majority);
    CHECK(rep.all_hold());

    for (int d : {7, 9, 11}) {
        Graph h = gp::regularized_h(5, d);
        gp::EdgeColoring col = gp::color_edges(h);
        gp::BrsPartition part = gp::partition_brs(h, col);
        gp::PartitionInequalityReport r = gp::check_partition_inequalities(h, col, part);
        CHECK(r.applicable);
        CHECK(r.all_hold());
    }

    gp::EdgeColoring pet_col = gp::color_edges(testutil::petersen());
    gp::PartitionInequalityReport pet = gp::check_partition_inequalities(
        testutil::petersen(), pet_col, gp::partition_brs(testutil::petersen(), pet_col));
    CHECK_FALSE(pet.applicable);
    CHECK(pet.reason == "diameter 2 is below 3; degree 3 is not above 6");
}

TEST_CASE("blue edges certify wide second neighborhoods") {
    Graph c7 = gp::cycle(7);
    gp::EdgeColoring coloring = gp::color_edges(c7);
    Graph sq = gp::graph_power(c7, 2);
    for (int u = 0; u < 7; ++u) {
        long long bound = gp::blue_neighborhood_bound(c7, coloring, u);
        CHECK(bound == 3);
        CHECK(sq.degree(u) >= bound);
    }

    Graph g = gp::regularized_h(3, 9);
    gp::EdgeColoring gcol = gp::color_edges(g);
    Graph gsq = gp::graph_power(g, 2);
    for (int u : {8, 9, 10, 11}) {
        long long bound = gp::blue_neighborhood_bound(g, gcol, u);
        CHECK(bound == 17);  // disjoint end-layer neighborhoods: 9 + 9 - 1
        CHECK(gsq.degree(u) >= bound);
    }

    Graph k5 = testutil::complete(5);
    CHECK_THROWS_AS(gp::blue_neighborhood_bound(k5, gp::color_edges(k5), 0),
                    std::domain_error);
    CHECK_THROWS_AS(gp::blue_neighborhood_bound(c7, coloring, 9), std::invalid_argument);
}

TEST_CASE("diagnostics bundle") {
    gp::CubeDiagnostics diag = gp::diagnose_cube(gp::regularized_h(3, 9));
    CHECK(diag.n == 20);
    CHECK(diag.m == 90);
    CHECK(diag.degree == 9);
    CHECK(diag.blue_edge_applicable);
    CHECK(diag.blue_edge_exists);
    CHECK(diag.proximity.applicable);
    CHECK(diag.inequalities.applicable);
    CHECK(diag.all_applicable_hold);

    nlohmann::json j = nlohmann::json::parse(gp::cube_diagnostics_json(diag));
    CHECK(j["n"] == 20);
    CHECK(j["m"] == 90);
    CHECK(j["degree"] == 9);
    CHECK(j["b"] == nlohmann::json::array({8, 9, 10, 11}));
    CHECK(j["s"].empty());
    CHECK(j["blue_edge_exists"] == true);
    CHECK(j["proposition_b_within_two"]["holds"] == true);
    CHECK(j["partition_inequalities"]["applicable"] == true);
    CHECK(j["partition_inequalities"]["s_at_most_r"] == true);
    CHECK(j["all_applicable_hold"] == true);
    CHECK(j["edges"].size() == 90);
    CHECK(j["colors"].size() == 90);

    // Diameter-3 cycle keeps the blue-edge statement applicable even at low
    // degree, where the heavier counting statements stay out of scope.
    gp::CubeDiagnostics c7 = gp::diagnose_cube(gp::cycle(7));
    CHECK(c7.blue_edge_applicable);
    CHECK(c7.blue_edge_exists);
    CHECK_FALSE(c7.inequalities.applicable);
    CHECK(c7.all_applicable_hold);

    gp::CubeDiagnostics k5 = gp::diagnose_cube(testutil::complete(5));
    CHECK_FALSE(k5.blue_edge_applicable);
    CHECK_FALSE(k5.blue_edge_exists);
    CHECK(k5.all_applicable_hold);  // nothing applicable, nothing violated

    CHECK_THROWS_AS(gp::diagnose_cube(testutil::star(5)), gp::NotRegularError);
}

TEST_CASE("coloring is deterministic across worker counts") {
    Graph g = gp::regularized_h(4, 9);
    gp::EdgeColoring a = gp::color_edges(g, 1);
    gp::EdgeColoring b = gp::color_edges(g, 4);
    CHECK(a.edges == b.edges);
    CHECK(a.colors == b.colors);
    CHECK(gp::cube_diagnostics_json(gp::diagnose_cube(g, 1)) ==
          gp::cube_diagnostics_json(gp::diagnose_cube(g, 3)));
}
