#pragma once

#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace gp {

// r-th power of g: edge uv iff 1 <= dist(u, v) <= r. Built from depth-capped
// searches, one per source, run on `threads` workers (0 = auto); each source
// fills only its own adjacency row, so the result is identical for any worker
// count. r >= 1.
Graph graph_power(const Graph& g, int r, int threads = 0);

// r-th power of a digraph: arc u->v iff 1 <= dist(u, v) <= r along arcs.
Digraph digraph_power(const Digraph& d, int r, int threads = 0);

// Edge count of the r-th power without materializing it: number of vertex
// pairs u < v with 1 <= dist(u, v) <= r. Works on disconnected input.
long long power_edge_count(const Graph& g, int r, int threads = 0);

// Arc count of the r-th digraph power: ordered pairs (u, v), u != v, with
// directed distance <= r.
long long power_arc_count(const Digraph& d, int r, int threads = 0);

// Slow, independent reference for graph_power built from boolean
// matrix products over bitset rows. Guarded to order() <= 1000
// (SizeLimitError beyond that). Exists so the fast path can be checked
// against a different algorithm, not for production use.
Graph power_oracle(const Graph& g, int r);

// Edge growth e(G^r) for r = 1..diam(G), with exact ratios e(G^r)/e(G).
struct GrowthRow {
    int r = 0;
    long long edges = 0;
    Rational ratio;
};

struct GrowthProfile {
    int diam = 0;
    long long base_edges = 0;
    std::vector<GrowthRow> rows;
};

// Requires connected input (DisconnectedError otherwise). Computed from the
// pairwise distance histogram, so no power graph is materialized.
GrowthProfile growth_profile(const Graph& g, int threads = 0);

// CSV with header "r,edges,ratio_num,ratio_den", one row per power.
std::string growth_profile_csv(const GrowthProfile& profile);

}  // namespace gp
