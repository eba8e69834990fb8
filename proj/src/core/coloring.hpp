#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace gp {

enum class EdgeColor : unsigned char { red, blue };

// Edge coloring of a regular graph by neighborhood overlap: edge uv is red
// when u and v share more than two thirds of a degree's worth of neighbors
// (exactly: 3 * |N(u) cap N(v)| > 2d), blue otherwise.
struct EdgeColoring {
    int degree = 0;                          // the common degree d
    std::vector<std::pair<int, int>> edges;  // canonical edge order
    std::vector<EdgeColor> colors;           // parallel to edges
};

// Throws NotRegularError on irregular input.
EdgeColoring color_edges(const Graph& g, int threads = 0);

// Vertex classes induced by the coloring: b = vertices incident to a blue
// edge, r = vertices outside b with a neighbor in b, s = the rest.
struct BrsPartition {
    std::vector<int> b, r, s;         // sorted, disjoint, covering all vertices
    std::vector<unsigned char> klass; // per vertex: 0 = b, 1 = r, 2 = s
};

// The coloring must belong to g (same edges, same degree).
BrsPartition partition_brs(const Graph& g, const EdgeColoring& coloring);

// Every vertex should be within distance 2 of the blue class; meaningful for
// connected regular graphs of diameter >= 3 and degree > 6.
struct ProximityReport {
    bool applicable = false;
    std::string reason;          // why not applicable; empty otherwise
    bool holds = false;          // computed regardless of applicability
    std::vector<int> nearest_b;  // per-vertex distance to b (kUnreachable if none)
};

ProximityReport check_b_within_two(const Graph& g, const BrsPartition& p);

// The four counting facts the partition supports, under the same
// applicability conditions as above:
//   r_side_bound: every x in r has 3 * |N(x) cap s| <= d
//   s_side_bound: every x in s has 3 * |N(x) cap r| > d
//   s_at_most_r:  |s| <= |r|
//   br_majority:  2 * |b u r| >= n
struct PartitionInequalityReport {
    bool applicable = false;
    std::string reason;
    bool r_side_bound = false;
    bool s_side_bound = false;
    bool s_at_most_r = false;
    bool br_majority = false;

    bool all_hold() const {
        return r_side_bound && s_side_bound && s_at_most_r && br_majority;
    }
};

PartitionInequalityReport check_partition_inequalities(const Graph& g,
                                                       const EdgeColoring& coloring,
                                                       const BrsPartition& p);

// Largest |N(u) cup N(v)| - 1 over blue edges uv at u: a certified lower
// bound on u's degree in G^2. By the blue condition 3 * (value + 1) >= 4d;
// violating that would mean the coloring itself is broken, so it is checked
// internally. Throws std::domain_error when u has no blue edge.
long long blue_neighborhood_bound(const Graph& g, const EdgeColoring& coloring, int u);

// One-stop diagnostics bundle for the coloring machinery.
struct CubeDiagnostics {
    int n = 0;
    long long m = 0;
    int degree = 0;
    EdgeColoring coloring;
    BrsPartition partition;
    bool blue_edge_applicable = false;  // regular (guaranteed), connected, diam >= 3
    bool blue_edge_exists = false;
    ProximityReport proximity;
    PartitionInequalityReport inequalities;
    bool all_applicable_hold = false;   // every applicable statement holds
};

CubeDiagnostics diagnose_cube(const Graph& g, int threads = 0);

// JSON with per-edge colors, class membership arrays and clause verdicts.
std::string cube_diagnostics_json(const CubeDiagnostics& diag);

}  // namespace gp
