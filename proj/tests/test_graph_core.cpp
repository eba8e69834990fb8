#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "core/edgelist.hpp"
#include "core/errors.hpp"
#include "core/families.hpp"
#include "core/graph.hpp"
#include "test_util.hpp"

using gp::Digraph;
using gp::Graph;
using gp::kUnreachable;

TEST_CASE("from_edges builds sorted symmetric adjacency") {
    Graph g = Graph::from_edges(5, {{3, 1}, {0, 1}, {1, 3}, {2, 4}, {4, 2}, {0, 4}});
    CHECK(g.order() == 5);
    CHECK(g.size() == 4);  // duplicates collapsed, orientation normalized
    CHECK(g.neighbors(1) == std::vector<int>{0, 3});
    CHECK(g.neighbors(4) == std::vector<int>{0, 2});
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 4}, {1, 3}, {2, 4}});
}

TEST_CASE("from_edges names the offending pair") {
    CHECK_THROWS_WITH_AS(Graph::from_edges(4, {{0, 1}, {3, 3}}),
                         doctest::Contains("(3,3)"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::from_edges(4, {{0, 9}}), doctest::Contains("(0,9)"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::from_edges(4, {{-1, 2}}), doctest::Contains("(-1,2)"),
                         std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(0, {}), std::invalid_argument);
}

TEST_CASE("from_sorted_adjacency validates lists") {
    Graph g = Graph::from_sorted_adjacency({{1, 2}, {0}, {0}});
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    CHECK_THROWS_AS(Graph::from_sorted_adjacency({{2, 1}, {}, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_sorted_adjacency({{0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_sorted_adjacency({{3}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_sorted_adjacency({{1}, {0}, {1}}), std::invalid_argument);
}

TEST_CASE("digraph basics") {
    Digraph d = Digraph::from_arcs(4, {{0, 1}, {1, 0}, {1, 2}, {1, 2}, {2, 3}});
    CHECK(d.order() == 4);
    CHECK(d.size() == 4);  // duplicate arc collapsed, antiparallel pair kept
    CHECK(d.out_neighbors(1) == std::vector<int>{0, 2});
    CHECK(d.in_degrees() == std::vector<int>{1, 1, 1, 1});
    CHECK(d.has_arc(0, 1));
    CHECK(d.has_arc(1, 0));
    CHECK_FALSE(d.has_arc(2, 1));
    CHECK_FALSE(d.is_oriented());  // 0->1 and 1->0

    Digraph c5 = testutil::directed_cycle(5);
    CHECK(c5.is_oriented());
    CHECK(c5.out_regularity() == 1);
    CHECK(gp::is_weakly_connected(c5));
    CHECK(testutil::same_graph(c5.underlying(), gp::cycle(5)));

    CHECK_THROWS_WITH_AS(Digraph::from_arcs(3, {{1, 1}}), doctest::Contains("(1,1)"),
                         std::invalid_argument);
}

TEST_CASE("bfs distances on a 5-cycle") {
    std::vector<int> dist = gp::bfs_distances(gp::cycle(5), 0);
    CHECK(dist == std::vector<int>{0, 1, 2, 2, 1});
}

TEST_CASE("bfs marks unreachable vertices") {
    Graph g = Graph::from_edges(3, {{0, 1}});
    std::vector<int> dist = gp::bfs_distances(g, 0);
    CHECK(dist == std::vector<int>{0, 1, kUnreachable});
    CHECK(kUnreachable == -1);
    CHECK_THROWS_AS(gp::bfs_distances(g, 5), std::invalid_argument);
}

TEST_CASE("bfs depth cap stops the search") {
    std::vector<int> dist = gp::bfs_distances(gp::cycle(12), 0, 2);
    CHECK(dist[0] == 0);
    CHECK(dist[1] == 1);
    CHECK(dist[2] == 2);
    CHECK(dist[3] == kUnreachable);
    CHECK(dist[11] == 1);
    CHECK(dist[10] == 2);
    CHECK(dist[9] == kUnreachable);
}

TEST_CASE("bfs agrees with the Floyd-Warshall oracle on the pool") {
    for (const Graph& g : testutil::sample_pool()) {
        auto oracle = testutil::fw_distances(g);
        for (int v = 0; v < g.order(); ++v) {
            CHECK(gp::bfs_distances(g, v) == oracle[v]);
        }
    }
}

TEST_CASE("layers partition the reachable set by distance") {
    auto l5 = gp::layers(gp::cycle(5), 0);
    REQUIRE(l5.size() == 3);
    CHECK(l5[0] == std::vector<int>{0});
    CHECK(l5[1] == std::vector<int>{1, 4});
    CHECK(l5[2] == std::vector<int>{2, 3});

    auto l12 = gp::layers(gp::cycle(12), 0);
    REQUIRE(l12.size() == 7);
    for (size_t i = 0; i < l12.size(); ++i) {
        CHECK(l12[i].size() == ((i == 0 || i == 6) ? 1u : 2u));
    }

    // Partition property across the pool.
    for (const Graph& g : testutil::sample_pool()) {
        auto dist = gp::bfs_distances(g, 0);
        auto ls = gp::layers(g, 0);
        size_t covered = 0;
        for (size_t i = 0; i < ls.size(); ++i) {
            for (int v : ls[i]) CHECK(dist[v] == static_cast<int>(i));
            covered += ls[i].size();
        }
        size_t reachable = 0;
        for (int d : dist) {
            if (d != kUnreachable) ++reachable;
        }
        CHECK(covered == reachable);
    }
}

TEST_CASE("eccentricity and diameter") {
    for (int n = 3; n <= 40; ++n) {
        CHECK(gp::diameter(gp::cycle(n)) == n / 2);
    }
    CHECK(gp::diameter(testutil::complete(5)) == 1);
    CHECK(gp::diameter(gp::path(9)) == 8);
    CHECK(gp::diameter(gp::Graph::from_edges(1, {})) == 0);
    CHECK(gp::eccentricity(gp::path(9), 4) == 4);
    CHECK_THROWS_AS(gp::diameter(testutil::two_triangles()), gp::DisconnectedError);
    CHECK_THROWS_AS(gp::eccentricity(testutil::two_triangles(), 0), gp::DisconnectedError);

    for (int r = 3; r <= 6; ++r) {
        CHECK(gp::diameter(gp::layered_h(r, 7)) == r);
    }

    // ecc <= diam <= 2 * ecc for every vertex of a connected graph.
    for (const Graph& g : testutil::sample_pool()) {
        if (!gp::is_connected(g)) continue;
        int diam = gp::diameter(g);
        for (int v = 0; v < g.order(); ++v) {
            int ecc = gp::eccentricity(g, v);
            CHECK(ecc <= diam);
            CHECK(diam <= 2 * ecc);
        }
    }
}

TEST_CASE("regularity detection") {
    CHECK(gp::regularity(gp::cycle(7)) == 2);
    CHECK(gp::regularity(testutil::complete(5)) == 4);
    CHECK(gp::regularity(gp::regularized_h(6, 9)) == 9);
    CHECK(gp::regularity(testutil::two_triangles()) == 2);  // regular, disconnected
    CHECK_FALSE(gp::regularity(gp::path(4)).has_value());
    CHECK_FALSE(gp::regularity(testutil::star(5)).has_value());
}

TEST_CASE("connectivity") {
    CHECK(gp::is_connected(gp::cycle(5)));
    CHECK(gp::is_connected(gp::Graph::from_edges(1, {})));
    CHECK_FALSE(gp::is_connected(testutil::two_triangles()));
    CHECK_FALSE(gp::is_connected(gp::Graph::from_edges(3, {{0, 1}})));
}

TEST_CASE("reach_count counts distinct targets within radius") {
    Graph c12 = gp::cycle(12);
    // Around vertex 0, layers 3..5 are {3,9}, {4,8}, {5,7}; all six lie within
    // distance 6 of vertex 6.
    std::vector<int> targets = {3, 9, 4, 8, 5, 7};
    CHECK(gp::reach_count(c12, 6, targets, 6) == 6);
    CHECK(gp::reach_count(c12, 6, targets, 2) == 4);  // 5,7 at 1; 4,8 at 2
    CHECK(gp::reach_count(c12, 6, targets, 1) == 2);
    CHECK(gp::reach_count(c12, 6, targets, 0) == 0);  // 6 is not a target
    CHECK(gp::reach_count(c12, 4, {4, 5, 6}, 0) == 1);  // v itself counts
    CHECK(gp::reach_count(c12, 0, {1, 1, 1, 2}, 1) == 1);  // duplicates count once
    CHECK(gp::reach_count(testutil::two_triangles(), 0, {3, 4, 5}, 9) == 0);
    CHECK_THROWS_AS(gp::reach_count(c12, 0, {42}, 1), std::invalid_argument);
    CHECK_THROWS_AS(gp::reach_count(c12, 0, {1}, -1), std::invalid_argument);
}

TEST_CASE("pair distance histogram") {
    std::vector<long long> hist = gp::pair_distance_histogram(gp::cycle(12));
    CHECK(hist == std::vector<long long>{0, 12, 12, 12, 12, 12, 6});
    CHECK(gp::pair_distance_histogram(testutil::complete(5)) ==
          std::vector<long long>{0, 10});
    CHECK_THROWS_AS(gp::pair_distance_histogram(testutil::two_triangles()),
                    gp::DisconnectedError);

    // Total pairs = C(n,2) and hist[1] = m on connected pool graphs.
    for (const Graph& g : testutil::sample_pool()) {
        if (!gp::is_connected(g)) continue;
        auto h = gp::pair_distance_histogram(g);
        long long total = 0;
        for (long long c : h) total += c;
        CHECK(total == static_cast<long long>(g.order()) * (g.order() - 1) / 2);
        if (g.size() > 0) CHECK(h[1] == g.size());
    }
}

TEST_CASE("histogram is identical across worker counts") {
    Graph g = gp::cayley_undirected(13, {1, 2});
    auto h1 = gp::pair_distance_histogram(g, 1);
    auto h4 = gp::pair_distance_histogram(g, 4);
    CHECK(h1 == h4);
}

TEST_CASE("edge list canonical form") {
    Graph k2 = gp::path(2);
    CHECK(gp::format_edge_list(k2) == "U 2 1\n0 1\n");
    CHECK(gp::format_edge_list(k2, {"made by tests", ""}) ==
          "# made by tests\n#\nU 2 1\n0 1\n");
    Digraph t = testutil::directed_cycle(3);
    CHECK(gp::format_edge_list(t) == "D 3 3\n0 1\n1 2\n2 0\n");
    CHECK_THROWS_AS(gp::format_edge_list(k2, {"bad\ncomment"}), std::invalid_argument);
}

TEST_CASE("edge list text round trip") {
    for (const Graph& g : testutil::sample_pool()) {
        gp::LoadedGraph loaded = gp::parse_edge_list(gp::format_edge_list(g));
        REQUIRE(loaded.graph.has_value());
        CHECK_FALSE(loaded.directed());
        CHECK(testutil::same_graph(*loaded.graph, g));
    }
    Digraph d = gp::cayley_directed(7, {1, 2});
    gp::LoadedGraph loaded = gp::parse_edge_list(gp::format_edge_list(d));
    REQUIRE(loaded.digraph.has_value());
    CHECK(testutil::same_digraph(*loaded.digraph, d));
}

TEST_CASE("edge list file round trip") {
    std::string path = testutil::temp_path("edgelist");
    Graph g = gp::cayley_undirected(11, {1, 3, 5});
    gp::write_edge_list(path, g, {"round trip"});
    gp::LoadedGraph loaded = gp::load_edge_list(path);
    REQUIRE(loaded.graph.has_value());
    CHECK(testutil::same_graph(*loaded.graph, g));
    CHECK(testutil::slurp(path).substr(0, 13) == "# round trip\n");
    std::remove(path.c_str());

    CHECK_THROWS_AS(gp::load_edge_list("/nonexistent/nowhere.el"), gp::IoError);
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            gp::parse_edge_list(text, "t");
        } catch (const gp::ParseError& e) {
            return e.line();
        }
        return -1;
    };

    CHECK(line_of("X 3 1\n0 1\n") == 1);              // bad tag
    CHECK(line_of("U 3\n") == 1);                     // short header
    CHECK(line_of("U 0 0\n") == 1);                   // empty graph
    CHECK(line_of("U 3 one\n") == 1);                 // bad integer
    CHECK(line_of("# c\nU 3 2\n0 1\n\n") == 4);       // blank line
    CHECK(line_of("U 3 2\n0 1\n1 1\n") == 3);         // self-loop
    CHECK(line_of("U 3 2\n0 1\n2 1\n") == 3);         // u > v
    CHECK(line_of("U 3 2\n0 1\n0 1\n") == 3);         // duplicate
    CHECK(line_of("U 3 2\n0 1\n0 7\n") == 3);         // out of range
    CHECK(line_of("U 3 1\n0 1\n1 2\n") == 3);         // extra edge line
    CHECK(line_of("U 3 2\n0 1\n") == 2);              // missing edge line
    CHECK(line_of("") == 0);                          // no header at all
    CHECK(line_of("U 2 1\r\n0 1\r\n") == 1);          // CRLF rejected
    CHECK(line_of("U 2 1\n0 1 2\n") == 2);            // too many fields

    // Message format is "source:line: what".
    try {
        gp::parse_edge_list("U 3 2\n0 1\n1 1\n", "some.el");
        FAIL("expected ParseError");
    } catch (const gp::ParseError& e) {
        CHECK(std::string(e.what()).find("some.el:3:") == 0);
        CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
    }

    // Directed files accept arcs both ways but reject loops and duplicates.
    CHECK(gp::parse_edge_list("D 3 2\n1 0\n0 1\n").digraph->size() == 2);
    CHECK(line_of("D 3 2\n1 0\n1 0\n") == 3);
    CHECK(line_of("D 3 1\n2 2\n") == 2);

    // Comments are allowed anywhere and do not count toward m.
    gp::LoadedGraph ok = gp::parse_edge_list("# top\nU 3 2\n# middle\n0 1\n1 2\n# end\n");
    CHECK(ok.graph->size() == 2);
}
