#include "families.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace gp {

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph::from_edges(n, edges);
}

Graph path(int n) {
    if (n < 2) throw std::invalid_argument("path needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

namespace {

void check_generators(int p, const std::vector<int>& gens) {
    if (p < 2) throw std::invalid_argument("modulus must be >= 2");
    if (gens.empty()) throw std::invalid_argument("generator set must be nonempty");
    for (int a : gens) {
        if (a < 1 || a >= p) {
            throw std::invalid_argument("generator " + std::to_string(a) +
                                        " out of range [1," + std::to_string(p) + ")");
        }
    }
}

}  // namespace

Graph cayley_undirected(int p, const std::vector<int>& gens) {
    check_generators(p, gens);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(p) * gens.size());
    for (int x = 0; x < p; ++x) {
        for (int a : gens) {
            int y = (x + a) % p;
            if (x != y) edges.emplace_back(x, y);
        }
    }
    return Graph::from_edges(p, edges);
}

Digraph cayley_directed(int p, const std::vector<int>& gens) {
    check_generators(p, gens);
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<size_t>(p) * gens.size());
    for (int x = 0; x < p; ++x) {
        for (int a : gens) {
            int y = (x - a % p + p) % p;
            if (x != y) arcs.emplace_back(x, y);
        }
    }
    return Digraph::from_arcs(p, arcs);
}

LayeredSpec layered_spec(int r, int d) {
    if (r < 3) throw std::invalid_argument("layered family needs r >= 3");
    if (d < 5) throw std::invalid_argument("layered family needs d >= 5");
    LayeredSpec spec;
    spec.r = r;
    spec.d = d;
    spec.offset = (r % 3 == 2) ? 1 : 0;
    spec.layer_sizes.resize(r + 1);
    spec.layer_start.resize(r + 1);
    int at = 0;
    for (int i = 0; i <= r; ++i) {
        spec.layer_start[i] = at;
        spec.layer_sizes[i] = (i % 3 == spec.offset) ? d - 1 : 2;
        at += spec.layer_sizes[i];
    }
    spec.total = at;
    return spec;
}

namespace {

Graph build_layered(const LayeredSpec& spec) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i <= spec.r; ++i) {
        int a = spec.layer_start[i];
        int s = spec.layer_sizes[i];
        // Clique inside the layer.
        for (int x = 0; x < s; ++x) {
            for (int y = x + 1; y < s; ++y) edges.emplace_back(a + x, a + y);
        }
        // Complete join to the next layer.
        if (i < spec.r) {
            int b = spec.layer_start[i + 1];
            int t = spec.layer_sizes[i + 1];
            for (int x = 0; x < s; ++x) {
                for (int y = 0; y < t; ++y) edges.emplace_back(a + x, b + y);
            }
        }
    }
    return Graph::from_edges(spec.total, edges);
}

}  // namespace

Graph layered_h(int r, int d) {
    return build_layered(layered_spec(r, d));
}

std::vector<int> interior_cycle(const LayeredSpec& spec) {
    std::vector<int> seq;
    // Forward sweep: all but the last vertex of each interior layer.
    for (int i = 1; i < spec.r; ++i) {
        for (int x = 0; x + 1 < spec.layer_sizes[i]; ++x) {
            seq.push_back(spec.layer_start[i] + x);
        }
    }
    // Turn onto the reserved vertex of the top interior layer, then descend
    // through the reserved vertex of every layer below it.
    for (int i = spec.r - 1; i >= 1; --i) {
        seq.push_back(spec.layer_start[i] + spec.layer_sizes[i] - 1);
    }
    return seq;
}

Graph regularized_h(int r, int d) {
    LayeredSpec spec = layered_spec(r, d);
    Graph h = build_layered(spec);
    std::vector<int> cyc = interior_cycle(spec);

    std::vector<std::pair<int, int>> removed;
    removed.reserve(cyc.size());
    for (size_t k = 0; k < cyc.size(); ++k) {
        int u = cyc[k];
        int v = cyc[(k + 1) % cyc.size()];
        removed.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(removed.begin(), removed.end());
    for (const auto& e : removed) {
        if (!h.has_edge(e.first, e.second)) {
            throw std::logic_error("interior cycle uses a non-edge");  // unreachable
        }
    }
    if (std::adjacent_find(removed.begin(), removed.end()) != removed.end()) {
        throw std::logic_error("interior cycle repeats an edge");  // unreachable
    }

    std::vector<std::pair<int, int>> kept;
    kept.reserve(static_cast<size_t>(h.size()) - removed.size());
    for (const auto& e : h.edges()) {
        if (!std::binary_search(removed.begin(), removed.end(), e)) kept.push_back(e);
    }
    return Graph::from_edges(spec.total, kept);
}

namespace {

// Uniform draw from [0, bound) by rejection; std::mt19937_64 output is pinned
// by the standard, so results are identical across platforms (which
// std::uniform_int_distribution does not promise).
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

Graph random_regular_connected(int n, int d, unsigned long long seed) {
    if (d < 2 || d >= n) {
        throw std::invalid_argument("degree must satisfy 2 <= d < n");
    }
    if (static_cast<long long>(n) * d % 2 != 0) {
        throw std::invalid_argument("n*d must be even, got n=" + std::to_string(n) +
                                    " d=" + std::to_string(d));
    }

    constexpr int kMaxAttempts = 10000;
    constexpr int kRandomTriesPerEdge = 200;
    std::mt19937_64 rng(seed);

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(n) * d);
        for (int v = 0; v < n; ++v) {
            for (int k = 0; k < d; ++k) stubs.push_back(v);
        }
        std::vector<std::vector<int>> partners(n);
        std::vector<std::pair<int, int>> edges;
        edges.reserve(static_cast<size_t>(n) * d / 2);

        auto adjacent = [&](int u, int v) {
            const auto& list = partners[u];
            return std::find(list.begin(), list.end(), v) != list.end();
        };
        auto take = [&](size_t i, size_t j) {
            // Remove two stub positions by swap-pop, higher index first.
            if (i > j) std::swap(i, j);
            stubs[j] = stubs.back();
            stubs.pop_back();
            stubs[i] = stubs.back();
            stubs.pop_back();
        };

        bool stuck = false;
        while (!stubs.empty()) {
            size_t sz = stubs.size();
            bool matched = false;
            for (int t = 0; t < kRandomTriesPerEdge && !matched; ++t) {
                size_t i = bounded_draw(rng, sz);
                size_t j = bounded_draw(rng, sz - 1);
                if (j >= i) ++j;
                int u = stubs[i];
                int v = stubs[j];
                if (u == v || adjacent(u, v)) continue;  // reject this pair only
                partners[u].push_back(v);
                partners[v].push_back(u);
                edges.emplace_back(u, v);
                take(i, j);
                matched = true;
            }
            if (matched) continue;

            // Random search failed; look for any usable pair. Taking the
            // lexicographically first keeps the run deterministic.
            size_t pi = 0, pj = 0;
            for (size_t i = 0; i < sz && !matched; ++i) {
                for (size_t j = i + 1; j < sz && !matched; ++j) {
                    int u = stubs[i];
                    int v = stubs[j];
                    if (u != v && !adjacent(u, v)) {
                        pi = i;
                        pj = j;
                        matched = true;
                    }
                }
            }
            if (!matched) {
                stuck = true;  // dead end; throw the pairing away
                break;
            }
            int u = stubs[pi];
            int v = stubs[pj];
            partners[u].push_back(v);
            partners[v].push_back(u);
            edges.emplace_back(u, v);
            take(pi, pj);
        }
        if (stuck) continue;

        Graph g = Graph::from_edges(n, edges);
        if (is_connected(g)) return g;
    }
    throw SizeLimitError("random regular sampler exceeded " +
                         std::to_string(kMaxAttempts) + " attempts for n=" +
                         std::to_string(n) + " d=" + std::to_string(d));
}

}  // namespace gp
