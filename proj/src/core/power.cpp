#include "power.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>

#include "errors.hpp"
#include "parallel.hpp"

namespace gp {

namespace {

void check_radius(int r) {
    if (r < 1) throw std::invalid_argument("power exponent must be >= 1");
}

}  // namespace

Graph graph_power(const Graph& g, int r, int threads) {
    check_radius(r);
    int n = g.order();
    std::vector<std::vector<int>> rows(n);
    parallel_for(n, threads, [&](long long src) {
        int v = static_cast<int>(src);
        std::vector<int> dist = bfs_distances(g, v, r);
        std::vector<int>& row = rows[v];
        for (int u = 0; u < n; ++u) {
            if (u != v && dist[u] != kUnreachable) row.push_back(u);
        }
        // Vertices come out in index order already; keep the sort as a cheap
        // guarantee for from_sorted_adjacency.
        std::sort(row.begin(), row.end());
    });
    return Graph::from_sorted_adjacency(std::move(rows));
}

Digraph digraph_power(const Digraph& d, int r, int threads) {
    check_radius(r);
    int n = d.order();
    std::vector<std::vector<int>> rows(n);
    parallel_for(n, threads, [&](long long src) {
        int v = static_cast<int>(src);
        std::vector<int> dist = bfs_distances(d, v, r);
        std::vector<int>& row = rows[v];
        for (int u = 0; u < n; ++u) {
            if (u != v && dist[u] != kUnreachable) row.push_back(u);
        }
        std::sort(row.begin(), row.end());
    });
    return Digraph::from_sorted_out_adjacency(std::move(rows));
}

namespace {

// Counts reached vertices per source on integer cells; order-independent.
template <class G>
long long count_reached(const G& g, int r, int threads) {
    int n = g.order();
    std::vector<std::atomic<long long>> per_source(n);
    for (auto& c : per_source) c.store(0, std::memory_order_relaxed);
    parallel_for(n, threads, [&](long long src) {
        int v = static_cast<int>(src);
        std::vector<int> dist = bfs_distances(g, v, r);
        long long reached = 0;
        for (int u = 0; u < n; ++u) {
            if (u != v && dist[u] != kUnreachable) ++reached;
        }
        per_source[v].store(reached, std::memory_order_relaxed);
    });
    long long total = 0;
    for (auto& c : per_source) total += c.load(std::memory_order_relaxed);
    return total;
}

}  // namespace

long long power_edge_count(const Graph& g, int r, int threads) {
    check_radius(r);
    return count_reached(g, r, threads) / 2;  // each pair seen from both ends
}

long long power_arc_count(const Digraph& d, int r, int threads) {
    check_radius(r);
    return count_reached(d, r, threads);
}

Graph power_oracle(const Graph& g, int r) {
    check_radius(r);
    constexpr int kOracleCap = 1000;
    int n = g.order();
    if (n > kOracleCap) {
        throw SizeLimitError("power oracle limited to " + std::to_string(kOracleCap) +
                             " vertices, got " + std::to_string(n));
    }

    int words = (n + 63) / 64;
    using Row = std::vector<std::uint64_t>;
    auto make_rows = [&] { return std::vector<Row>(n, Row(words, 0)); };
    auto set_bit = [&](std::vector<Row>& m, int i, int j) {
        m[i][j / 64] |= std::uint64_t{1} << (j % 64);
    };

    // closed[i] = closed neighborhood of i; its r-th boolean power has bit
    // (i, j) set iff dist(i, j) <= r.
    std::vector<Row> closed = make_rows();
    for (int v = 0; v < n; ++v) {
        set_bit(closed, v, v);
        for (int u : g.neighbors(v)) set_bit(closed, v, u);
    }

    // Distances beyond n-1 cannot occur, so cap the number of products.
    int steps = std::min(r, n - 1);
    std::vector<Row> cur = closed;
    for (int step = 2; step <= steps; ++step) {
        std::vector<Row> next = make_rows();
        for (int i = 0; i < n; ++i) {
            for (int w = 0; w < words; ++w) {
                std::uint64_t bits = cur[i][w];
                while (bits) {
                    int j = w * 64 + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    for (int k = 0; k < words; ++k) next[i][k] |= closed[j][k];
                }
            }
        }
        cur = std::move(next);
    }

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (cur[i][j / 64] >> (j % 64) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

GrowthProfile growth_profile(const Graph& g, int threads) {
    std::vector<long long> hist = pair_distance_histogram(g, threads);
    GrowthProfile profile;
    profile.diam = static_cast<int>(hist.size()) - 1;
    profile.base_edges = g.size();
    long long cumulative = 0;
    for (int r = 1; r <= profile.diam; ++r) {
        cumulative += hist[r];
        profile.rows.push_back({r, cumulative, Rational(cumulative, profile.base_edges)});
    }
    return profile;
}

std::string growth_profile_csv(const GrowthProfile& profile) {
    std::string out = "r,edges,ratio_num,ratio_den\n";
    for (const auto& row : profile.rows) {
        out += std::to_string(row.r) + "," + std::to_string(row.edges) + "," +
               std::to_string(row.ratio.num) + "," + std::to_string(row.ratio.den) + "\n";
    }
    return out;
}

}  // namespace gp
