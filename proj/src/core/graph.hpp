#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace gp {

// Distance reported for vertices a traversal cannot reach. Kept negative so it
// can never collide with a real distance.
inline constexpr int kUnreachable = -1;

// Immutable simple undirected graph. Vertices are 0..n-1, adjacency lists are
// strictly sorted, no loops, no parallel edges. Build through the factories;
// instances never change after construction.
class Graph {
public:
    // Validates vertex ranges, rejects self-loops, collapses duplicate pairs.
    // Error messages name the offending pair.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    // Trusted path for algorithms that already produce sorted adjacency (the
    // power construction). Checks each list is strictly sorted, in range and
    // loop-free; symmetry is the caller's contract.
    static Graph from_sorted_adjacency(std::vector<std::vector<int>> adj);

    int order() const { return n_; }
    long long size() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    // Edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

private:
    Graph() = default;

    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Immutable simple directed graph: no loops, no parallel arcs; antiparallel
// pairs (u->v plus v->u) are allowed and are what "not oriented" means.
class Digraph {
public:
    static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);
    static Digraph from_sorted_out_adjacency(std::vector<std::vector<int>> out);

    int order() const { return n_; }
    long long size() const { return m_; }
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    std::vector<int> in_degrees() const;
    bool has_arc(int u, int v) const;

    // Arcs as (u, v), u -> v, in lexicographic order.
    std::vector<std::pair<int, int>> arcs() const;

    // True when no antiparallel arc pair exists.
    bool is_oriented() const;

    // Out-degree if every vertex has the same one.
    std::optional<int> out_regularity() const;

    // Undirected shadow: edge uv iff u->v or v->u.
    Graph underlying() const;

private:
    Digraph() = default;

    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> out_;
};

// Breadth-first distances from `source`; unreachable vertices get
// kUnreachable. With max_depth >= 0 the search stops expanding at that depth,
// so anything farther away is reported unreachable.
std::vector<int> bfs_distances(const Graph& g, int source, int max_depth = -1);
std::vector<int> bfs_distances(const Digraph& g, int source, int max_depth = -1);

// Distance layers around `source`: result[i] is the sorted list of vertices at
// distance exactly i, up to the eccentricity of `source` within its component.
// Unreachable vertices are not in any layer.
std::vector<std::vector<int>> layers(const Graph& g, int source);

// Largest finite distance from `source` (within its component).
int eccentricity(const Graph& g, int source);

// Exact diameter; throws DisconnectedError on disconnected input.
int diameter(const Graph& g);

// Common degree if the graph is regular, nullopt otherwise.
std::optional<int> regularity(const Graph& g);

bool is_connected(const Graph& g);

// Connectivity of the underlying undirected graph.
bool is_weakly_connected(const Digraph& g);

// Number of distinct vertices of `targets` within distance r of v (v itself
// included when it appears in `targets`). Duplicate entries count once.
long long reach_count(const Graph& g, int v, const std::vector<int>& targets, int r);

// histogram[k] = number of unordered vertex pairs at distance exactly k, for
// k = 1..diameter (index 0 unused). Throws DisconnectedError. Runs the
// per-source searches on `threads` workers (0 = auto); counts are integers so
// the result does not depend on the worker count.
std::vector<long long> pair_distance_histogram(const Graph& g, int threads = 0);

}  // namespace gp
