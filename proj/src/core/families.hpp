#pragma once

#include <vector>

#include "graph.hpp"

namespace gp {

Graph cycle(int n);  // n >= 3
Graph path(int n);   // n >= 2

// Circulant graph on Z_p with connection set gens: edge x ~ x+a for each
// generator a. Generators must lie in [1, p). Duplicates collapse.
Graph cayley_undirected(int p, const std::vector<int>& gens);

// Directed circulant on Z_p: arc x -> y whenever x - y is a generator
// (equivalently y = x - a mod p).
Digraph cayley_directed(int p, const std::vector<int>& gens);

// Shape of the layered extremal graph: r+1 layers around a geodesic, layer
// sizes alternating d-1 / 2 / 2 so that end layers see degree d and interior
// layers degree d+2. The offset keeps the big layers aligned with both ends
// for every residue of r mod 3.
struct LayeredSpec {
    int r = 0;
    int d = 0;
    int offset = 0;                 // residue mod 3 of the big (d-1) layers
    std::vector<int> layer_sizes;   // r+1 entries
    std::vector<int> layer_start;   // first vertex id of each layer
    int total = 0;                  // vertex count
};

// r >= 3, d >= 5.
LayeredSpec layered_spec(int r, int d);

// The layered graph itself: a clique inside every layer plus a complete join
// between consecutive layers. Diameter exactly r; end layers have degree d,
// interior layers d+2.
Graph layered_h(int r, int d);

// A single cycle visiting every interior vertex (layers 1..r-1) exactly once,
// using only edges of the layered graph: a forward sweep that chains all but
// the last vertex of each interior layer, then a descent through the reserved
// last vertices. Returned as the cyclic vertex sequence.
std::vector<int> interior_cycle(const LayeredSpec& spec);

// The layered graph with the interior cycle's edges removed: every interior
// vertex loses exactly 2, which makes the whole graph d-regular while keeping
// it connected with diameter r.
Graph regularized_h(int r, int d);

// Random d-regular connected graph via random stub pairing: pairs of free
// stubs are drawn uniformly and rejected individually when they would create
// a loop or parallel edge; dead-ended pairings and disconnected results are
// thrown away and resampled. Deterministic for a given seed. Requires
// 2 <= d < n and n*d even.
Graph random_regular_connected(int n, int d, unsigned long long seed);

}  // namespace gp
