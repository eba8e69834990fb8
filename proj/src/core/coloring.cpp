#include "coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "errors.hpp"
#include "parallel.hpp"

namespace gp {

namespace {

// |N(u) cap N(v)| by merging the two sorted lists.
long long common_neighbors(const Graph& g, int u, int v) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    size_t i = 0, j = 0;
    long long count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

// Applicability shared by the proximity and inequality reports. The degree
// threshold is part of the counting argument, not of blue-edge existence.
bool partition_statements_apply(const Graph& g, int degree, std::string& reason) {
    std::vector<std::string> failures;
    if (!is_connected(g)) {
        failures.push_back("graph is disconnected");
    } else if (int diam = diameter(g); diam < 3) {
        failures.push_back("diameter " + std::to_string(diam) + " is below 3");
    }
    if (degree <= 6) {
        failures.push_back("degree " + std::to_string(degree) + " is not above 6");
    }
    reason.clear();
    for (const auto& f : failures) {
        if (!reason.empty()) reason += "; ";
        reason += f;
    }
    return failures.empty();
}

}  // namespace

EdgeColoring color_edges(const Graph& g, int threads) {
    std::optional<int> d = regularity(g);
    if (!d) throw NotRegularError("edge coloring needs a regular graph");

    EdgeColoring c;
    c.degree = *d;
    c.edges = g.edges();
    c.colors.resize(c.edges.size());
    parallel_for(static_cast<long long>(c.edges.size()), threads, [&](long long i) {
        auto [u, v] = c.edges[i];
        long long shared = common_neighbors(g, u, v);
        c.colors[i] = (3 * shared > 2LL * c.degree) ? EdgeColor::red : EdgeColor::blue;
    });
    return c;
}

BrsPartition partition_brs(const Graph& g, const EdgeColoring& coloring) {
    if (coloring.edges.size() != static_cast<size_t>(g.size()) ||
        coloring.edges != g.edges()) {
        throw std::invalid_argument("coloring does not belong to this graph");
    }
    if (coloring.colors.size() != coloring.edges.size()) {
        throw std::invalid_argument("coloring has wrong number of colors");
    }

    int n = g.order();
    BrsPartition p;
    p.klass.assign(n, 2);
    for (size_t i = 0; i < coloring.edges.size(); ++i) {
        if (coloring.colors[i] == EdgeColor::blue) {
            p.klass[coloring.edges[i].first] = 0;
            p.klass[coloring.edges[i].second] = 0;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (p.klass[v] == 0) continue;
        for (int u : g.neighbors(v)) {
            if (p.klass[u] == 0) {
                p.klass[v] = 1;
                break;
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (p.klass[v] == 0) p.b.push_back(v);
        else if (p.klass[v] == 1) p.r.push_back(v);
        else p.s.push_back(v);
    }
    return p;
}

ProximityReport check_b_within_two(const Graph& g, const BrsPartition& p) {
    int n = g.order();
    ProximityReport report;
    int degree = g.degree(0);  // partitions only exist for regular graphs
    report.applicable = partition_statements_apply(g, degree, report.reason);

    // Multi-source search from the whole blue class.
    report.nearest_b.assign(n, kUnreachable);
    std::vector<int> queue;
    queue.reserve(n);
    for (int v : p.b) {
        report.nearest_b[v] = 0;
        queue.push_back(v);
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int u : g.neighbors(v)) {
            if (report.nearest_b[u] == kUnreachable) {
                report.nearest_b[u] = report.nearest_b[v] + 1;
                queue.push_back(u);
            }
        }
    }
    report.holds = true;
    for (int v = 0; v < n; ++v) {
        if (report.nearest_b[v] == kUnreachable || report.nearest_b[v] > 2) {
            report.holds = false;
            break;
        }
    }
    return report;
}

PartitionInequalityReport check_partition_inequalities(const Graph& g,
                                                       const EdgeColoring& coloring,
                                                       const BrsPartition& p) {
    if (p.klass.size() != static_cast<size_t>(g.order())) {
        throw std::invalid_argument("partition does not belong to this graph");
    }
    PartitionInequalityReport report;
    report.applicable = partition_statements_apply(g, coloring.degree, report.reason);

    long long d = coloring.degree;
    auto count_class = [&](int v, unsigned char k) {
        long long c = 0;
        for (int u : g.neighbors(v)) {
            if (p.klass[u] == k) ++c;
        }
        return c;
    };

    report.r_side_bound = std::all_of(p.r.begin(), p.r.end(), [&](int v) {
        return 3 * count_class(v, 2) <= d;
    });
    report.s_side_bound = std::all_of(p.s.begin(), p.s.end(), [&](int v) {
        return 3 * count_class(v, 1) > d;
    });
    report.s_at_most_r = p.s.size() <= p.r.size();
    report.br_majority =
        2 * (static_cast<long long>(p.b.size()) + static_cast<long long>(p.r.size())) >=
        g.order();
    return report;
}

long long blue_neighborhood_bound(const Graph& g, const EdgeColoring& coloring, int u) {
    if (u < 0 || u >= g.order()) {
        throw std::invalid_argument("vertex " + std::to_string(u) + " out of range [0," +
                                    std::to_string(g.order()) + ")");
    }
    long long best = -1;
    for (size_t i = 0; i < coloring.edges.size(); ++i) {
        if (coloring.colors[i] != EdgeColor::blue) continue;
        auto [a, b] = coloring.edges[i];
        if (a != u && b != u) continue;
        int v = (a == u) ? b : a;
        // |N(u) cup N(v)| = 2d - |N(u) cap N(v)|, minus u itself.
        long long unions = 2LL * coloring.degree - common_neighbors(g, u, v);
        best = std::max(best, unions - 1);
    }
    if (best < 0) {
        throw std::domain_error("vertex " + std::to_string(u) + " has no blue edge");
    }
    if (3 * (best + 1) < 4LL * coloring.degree) {
        throw std::logic_error("blue edge violates the overlap threshold");  // unreachable
    }
    return best;
}

CubeDiagnostics diagnose_cube(const Graph& g, int threads) {
    CubeDiagnostics diag;
    diag.n = g.order();
    diag.m = g.size();
    diag.coloring = color_edges(g, threads);
    diag.degree = diag.coloring.degree;
    diag.partition = partition_brs(g, diag.coloring);

    diag.blue_edge_applicable = is_connected(g) && diameter(g) >= 3;
    diag.blue_edge_exists =
        std::any_of(diag.coloring.colors.begin(), diag.coloring.colors.end(),
                    [](EdgeColor c) { return c == EdgeColor::blue; });
    diag.proximity = check_b_within_two(g, diag.partition);
    diag.inequalities = check_partition_inequalities(g, diag.coloring, diag.partition);

    diag.all_applicable_hold = true;
    if (diag.blue_edge_applicable && !diag.blue_edge_exists) {
        diag.all_applicable_hold = false;
    }
    if (diag.proximity.applicable && !diag.proximity.holds) {
        diag.all_applicable_hold = false;
    }
    if (diag.inequalities.applicable && !diag.inequalities.all_hold()) {
        diag.all_applicable_hold = false;
    }
    return diag;
}

std::string cube_diagnostics_json(const CubeDiagnostics& diag) {
    nlohmann::ordered_json j;
    j["n"] = diag.n;
    j["m"] = diag.m;
    j["degree"] = diag.degree;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [u, v] : diag.coloring.edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    nlohmann::ordered_json colors = nlohmann::ordered_json::array();
    for (EdgeColor c : diag.coloring.colors) {
        colors.push_back(c == EdgeColor::red ? "red" : "blue");
    }
    j["colors"] = std::move(colors);
    j["b"] = diag.partition.b;
    j["r"] = diag.partition.r;
    j["s"] = diag.partition.s;
    j["blue_edge_applicable"] = diag.blue_edge_applicable;
    j["blue_edge_exists"] = diag.blue_edge_exists;
    j["proposition_b_within_two"] = {
        {"applicable", diag.proximity.applicable},
        {"reason", diag.proximity.reason},
        {"holds", diag.proximity.holds},
        {"nearest_b_distance", diag.proximity.nearest_b},
    };
    j["partition_inequalities"] = {
        {"applicable", diag.inequalities.applicable},
        {"reason", diag.inequalities.reason},
        {"r_side_bound", diag.inequalities.r_side_bound},
        {"s_side_bound", diag.inequalities.s_side_bound},
        {"s_at_most_r", diag.inequalities.s_at_most_r},
        {"br_majority", diag.inequalities.br_majority},
    };
    j["all_applicable_hold"] = diag.all_applicable_hold;
    return j.dump();
}

}  // namespace gp
