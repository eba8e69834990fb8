#include "graph.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "parallel.hpp"

namespace gp {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_vertex(int v, int n, const char* role) {
    if (v < 0 || v >= n) {
        throw std::invalid_argument(std::string(role) + " " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n) + ")");
    }
}

void check_endpoints(int u, int v, int n, const char* kind) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
        throw std::invalid_argument(std::string(kind) + " " + pair_str(u, v) +
                                    " out of range [0," + std::to_string(n) + ")");
    }
    if (u == v) {
        throw std::invalid_argument(std::string("self-loop ") + pair_str(u, v) +
                                    " not allowed");
    }
}

void check_sorted_lists(const std::vector<std::vector<int>>& adj, const char* kind) {
    int n = static_cast<int>(adj.size());
    for (int v = 0; v < n; ++v) {
        int prev = -1;
        for (int w : adj[v]) {
            if (w < 0 || w >= n) {
                throw std::invalid_argument(std::string(kind) + " list of " +
                                            std::to_string(v) + " has out-of-range entry " +
                                            std::to_string(w));
            }
            if (w == v) {
                throw std::invalid_argument(std::string("self-loop ") + pair_str(v, w) +
                                            " not allowed");
            }
            if (w <= prev) {
                throw std::invalid_argument(std::string(kind) + " list of " +
                                            std::to_string(v) + " not strictly sorted");
            }
            prev = w;
        }
    }
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    std::vector<std::pair<int, int>> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_endpoints(u, v, n, "edge");
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

    Graph g;
    g.n_ = n;
    g.m_ = static_cast<long long>(norm.size());
    g.adj_.resize(n);
    for (auto [u, v] : norm) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
}

Graph Graph::from_sorted_adjacency(std::vector<std::vector<int>> adj) {
    if (adj.empty()) throw std::invalid_argument("graph needs at least one vertex");
    check_sorted_lists(adj, "adjacency");
    long long total = 0;
    for (const auto& list : adj) total += static_cast<long long>(list.size());
    if (total % 2 != 0) throw std::invalid_argument("adjacency degree sum is odd");

    Graph g;
    g.n_ = static_cast<int>(adj.size());
    g.m_ = total / 2;
    g.adj_ = std::move(adj);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, n_, "vertex");
    check_vertex(v, n_, "vertex");
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[u]) {
            if (v > u) out.emplace_back(u, v);
        }
    }
    return out;
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    if (n < 1) throw std::invalid_argument("digraph needs at least one vertex");
    std::vector<std::pair<int, int>> norm;
    norm.reserve(arcs.size());
    for (auto [u, v] : arcs) {
        check_endpoints(u, v, n, "arc");
        norm.emplace_back(u, v);
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

    Digraph d;
    d.n_ = n;
    d.m_ = static_cast<long long>(norm.size());
    d.out_.resize(n);
    for (auto [u, v] : norm) d.out_[u].push_back(v);
    return d;
}

Digraph Digraph::from_sorted_out_adjacency(std::vector<std::vector<int>> out) {
    if (out.empty()) throw std::invalid_argument("digraph needs at least one vertex");
    check_sorted_lists(out, "out-adjacency");
    long long total = 0;
    for (const auto& list : out) total += static_cast<long long>(list.size());

    Digraph d;
    d.n_ = static_cast<int>(out.size());
    d.m_ = total;
    d.out_ = std::move(out);
    return d;
}

std::vector<int> Digraph::in_degrees() const {
    std::vector<int> in(n_, 0);
    for (int u = 0; u < n_; ++u) {
        for (int v : out_[u]) ++in[v];
    }
    return in;
}

bool Digraph::has_arc(int u, int v) const {
    check_vertex(u, n_, "vertex");
    check_vertex(v, n_, "vertex");
    const auto& list = out_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        for (int v : out_[u]) out.emplace_back(u, v);
    }
    return out;
}

bool Digraph::is_oriented() const {
    for (int u = 0; u < n_; ++u) {
        for (int v : out_[u]) {
            if (v > u && has_arc(v, u)) return false;
        }
    }
    return true;
}

std::optional<int> Digraph::out_regularity() const {
    int d = out_degree(0);
    for (int v = 1; v < n_; ++v) {
        if (out_degree(v) != d) return std::nullopt;
    }
    return d;
}

Graph Digraph::underlying() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        for (int v : out_[u]) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n_, edges);
}

namespace {

// Shared BFS over any adjacency accessor.
template <class Nbrs>
std::vector<int> bfs_impl(int n, int source, int max_depth, Nbrs&& nbrs) {
    check_vertex(source, n, "source vertex");
    std::vector<int> dist(n, kUnreachable);
    std::vector<int> queue;
    queue.reserve(n);
    dist[source] = 0;
    queue.push_back(source);
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        int dv = dist[v];
        if (max_depth >= 0 && dv >= max_depth) continue;
        for (int w : nbrs(v)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dv + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace

std::vector<int> bfs_distances(const Graph& g, int source, int max_depth) {
    return bfs_impl(g.order(), source, max_depth,
                    [&](int v) -> const std::vector<int>& { return g.neighbors(v); });
}

std::vector<int> bfs_distances(const Digraph& g, int source, int max_depth) {
    return bfs_impl(g.order(), source, max_depth,
                    [&](int v) -> const std::vector<int>& { return g.out_neighbors(v); });
}

std::vector<std::vector<int>> layers(const Graph& g, int source) {
    std::vector<int> dist = bfs_distances(g, source);
    int ecc = 0;
    for (int d : dist) ecc = std::max(ecc, d);
    std::vector<std::vector<int>> out(ecc + 1);
    for (int v = 0; v < g.order(); ++v) {
        if (dist[v] != kUnreachable) out[dist[v]].push_back(v);
    }
    return out;
}

int eccentricity(const Graph& g, int source) {
    std::vector<int> dist = bfs_distances(g, source);
    int ecc = 0;
    for (int d : dist) {
        if (d == kUnreachable) {
            throw DisconnectedError("graph is disconnected: eccentricity is infinite");
        }
        ecc = std::max(ecc, d);
    }
    return ecc;
}

int diameter(const Graph& g) {
    // One full search proves connectivity; after that every source reaches all.
    int best = eccentricity(g, 0);
    for (int v = 1; v < g.order(); ++v) {
        std::vector<int> dist = bfs_distances(g, v);
        for (int d : dist) best = std::max(best, d);
    }
    return best;
}

std::optional<int> regularity(const Graph& g) {
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v) {
        if (g.degree(v) != d) return std::nullopt;
    }
    return d;
}

bool is_connected(const Graph& g) {
    std::vector<int> dist = bfs_distances(g, 0);
    for (int d : dist) {
        if (d == kUnreachable) return false;
    }
    return true;
}

bool is_weakly_connected(const Digraph& g) {
    return is_connected(g.underlying());
}

long long reach_count(const Graph& g, int v, const std::vector<int>& targets, int r) {
    if (r < 0) throw std::invalid_argument("reach radius must be >= 0");
    check_vertex(v, g.order(), "vertex");
    std::vector<int> dist = bfs_distances(g, v, r);
    std::vector<char> seen(g.order(), 0);
    long long count = 0;
    for (int u : targets) {
        check_vertex(u, g.order(), "target vertex");
        if (seen[u]) continue;
        seen[u] = 1;
        if (dist[u] != kUnreachable && dist[u] <= r) ++count;
    }
    return count;
}

std::vector<long long> pair_distance_histogram(const Graph& g, int threads) {
    int n = g.order();
    if (!is_connected(g)) {
        throw DisconnectedError("graph is disconnected: pair distances are not all finite");
    }
    // Integer cells, so accumulation order cannot change the result.
    std::vector<std::atomic<long long>> cells(n);
    for (auto& c : cells) c.store(0, std::memory_order_relaxed);
    parallel_for(n, threads, [&](long long src) {
        std::vector<int> dist = bfs_distances(g, static_cast<int>(src));
        for (int u = static_cast<int>(src) + 1; u < n; ++u) {
            cells[dist[u]].fetch_add(1, std::memory_order_relaxed);
        }
    });
    int diam = 0;
    for (int k = 1; k < n; ++k) {
        if (cells[k].load(std::memory_order_relaxed) > 0) diam = k;
    }
    std::vector<long long> hist(diam + 1, 0);
    for (int k = 1; k <= diam; ++k) hist[k] = cells[k].load(std::memory_order_relaxed);
    return hist;
}

}  // namespace gp
