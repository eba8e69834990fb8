#pragma once

#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace gp {

// Which lower bound on power-graph edge counts a report is about.
enum class BoundId {
    cauchy_davenport,     // e(G^r) >= r * e(G), circulant graphs, r below diameter
    higher_power,         // e(G^r) >= (ceil(r/3) - 1) * e(G), regular connected
    cube_7_6,             // e(G^3) >= (7/6) * e(G), regular connected, diam >= 3
    cube_conjecture_2e,   // e(G^3) >= 2 * e(G), same hypotheses, conjectured
    oriented_square_3_2,  // e(D^2) >= (3/2) * e(D), oriented out-regular
    eulerian_square_2e,   // e(D^2) >= 2 * e(D), oriented Eulerian, conjectured
};

const char* bound_id_name(BoundId id);

// Whether a bound's statement covers the given graph. `vacuous` marks inputs
// outside the stated range where nothing is claimed (r not below the diameter
// for the circulant bound, r above it for the higher-power bound);
// `preconditions_unmet` marks structural hypotheses that fail (regularity,
// connectivity, orientation, ...).
enum class Applicability { applies, vacuous, preconditions_unmet };

const char* applicability_name(Applicability a);

struct BoundReport {
    BoundId bound_id;
    int r = 0;               // power that was checked
    long long lhs = 0;       // e(G^r), exact
    Rational rhs;            // bound value, exact
    bool satisfied = false;  // lhs >= rhs (computed even off-range, for reporting)
    Rational slack;          // lhs - rhs
    Applicability applicability = Applicability::applies;
    std::string reason;      // why not applicable; empty when applies
    bool conjecture = false; // conjectured bound rather than a proven one
};

// Single-line JSON: bound_id, r, lhs, rhs_num, rhs_den, satisfied, slack_num,
// slack_den, applicability, reason — in that order.
std::string bound_report_json(const BoundReport& report);

// e(G^r) >= r * e(G) for circulant (additive Cayley) graphs when r is below
// the diameter. The structural hypothesis is on the caller: the checker sees
// only the graph, so run it on inputs known to be circulant. Throws
// DisconnectedError (pair distances must be finite).
BoundReport check_cauchy_davenport(const Graph& g, int r, int threads = 0);

// e(G^r) >= (ceil(r/3) - 1) * e(G) for connected regular graphs, 1 <= r <=
// diam(G). Regularity/connectivity failures surface as preconditions_unmet,
// r beyond the diameter as vacuous.
BoundReport check_higher_power(const Graph& g, int r, int threads = 0);

// e(G^3) >= (7/6) * e(G) for connected regular graphs of diameter >= 3.
BoundReport check_cube(const Graph& g, int threads = 0);

// Conjectured strengthening e(G^3) >= 2 * e(G), same hypotheses.
BoundReport check_cube_conjecture(const Graph& g, int threads = 0);

// Per-vertex device behind the oriented-square bound: the second
// out-neighborhood is at least half the first, except possibly at vertices
// whose closed 2-out-neighborhood is already everything.
struct OrientedWitness {
    int vertex = 0;
    long long out1 = 0;      // |N1_out(v)|
    long long out2 = 0;      // |N2_out(v)|, distance exactly 2
    bool saturated = false;  // {v} + N1 + N2 covers all vertices
    bool holds = false;      // saturated or 2*out2 >= out1
};

struct OrientedSquareResult {
    BoundReport report;
    std::vector<OrientedWitness> witnesses;
    bool witnesses_hold = false;  // all per-vertex statements hold
};

// e(D^2) >= (3/2) * e(D) for oriented out-regular digraphs.
OrientedSquareResult check_oriented_square(const Digraph& d, int threads = 0);

// Conjectured e(D^2) >= 2 * e(D) for oriented digraphs that are weakly
// connected with in-degree equal to out-degree at every vertex.
BoundReport check_eulerian_square(const Digraph& d, int threads = 0);

// Layer-reach device for the higher-power bound: around center v, every layer
// index j with dist(u,v) - r < j <= dist(u,v), j >= 1, must give u at least d
// reachable vertices in layers j-1, j, j+1 within distance r. Requires a
// connected regular graph. Empty when u == v.
struct LayerReachEntry {
    int j = 0;
    long long count = 0;  // vertices of the three layers within distance r of u
    int required = 0;     // the degree d
    bool holds = false;
};

std::vector<LayerReachEntry> layer_reach_check(const Graph& g, int v, int u, int r);

// Growth ratios of the layered family across degrees, for fixed r: how close
// e(G^r)/e(G) comes to its ceiling limit = ceil((r+1)/3).
struct SweepRow {
    int d = 0;
    int n = 0;
    long long m = 0;
    long long power_edges = 0;  // e(G^r), complete since the family has diameter r
    Rational ratio;             // power_edges / m
    int limit = 0;
};

std::vector<SweepRow> sweep_h_ratio(int r, const std::vector<int>& d_values,
                                    bool regularize, int threads = 0);

// CSV with header "d,n,m,power_edges,ratio_num,ratio_den,limit".
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace gp
