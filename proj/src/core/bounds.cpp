#include "bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "errors.hpp"
#include "families.hpp"
#include "parallel.hpp"
#include "power.hpp"

namespace gp {

const char* bound_id_name(BoundId id) {
    switch (id) {
        case BoundId::cauchy_davenport: return "cauchy_davenport";
        case BoundId::higher_power: return "higher_power";
        case BoundId::cube_7_6: return "cube_7_6";
        case BoundId::cube_conjecture_2e: return "cube_conjecture_2e";
        case BoundId::oriented_square_3_2: return "oriented_square_3_2";
        case BoundId::eulerian_square_2e: return "eulerian_square_2e";
    }
    return "?";
}

const char* applicability_name(Applicability a) {
    switch (a) {
        case Applicability::applies: return "applies";
        case Applicability::vacuous: return "vacuous";
        case Applicability::preconditions_unmet: return "preconditions_unmet";
    }
    return "?";
}

std::string bound_report_json(const BoundReport& report) {
    nlohmann::ordered_json j;
    j["bound_id"] = bound_id_name(report.bound_id);
    j["r"] = report.r;
    j["lhs"] = report.lhs;
    j["rhs_num"] = report.rhs.num;
    j["rhs_den"] = report.rhs.den;
    j["satisfied"] = report.satisfied;
    j["slack_num"] = report.slack.num;
    j["slack_den"] = report.slack.den;
    j["applicability"] = applicability_name(report.applicability);
    j["reason"] = report.reason;
    return j.dump();
}

namespace {

void check_radius_at_least_one(int r) {
    if (r < 1) throw std::invalid_argument("power exponent must be >= 1");
}

void finish(BoundReport& report) {
    report.satisfied = Rational(report.lhs) >= report.rhs;
    report.slack = Rational(report.lhs) - report.rhs;
}

std::string join_reasons(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out;
}

}  // namespace

BoundReport check_cauchy_davenport(const Graph& g, int r, int threads) {
    check_radius_at_least_one(r);
    std::vector<long long> hist = pair_distance_histogram(g, threads);
    int diam = static_cast<int>(hist.size()) - 1;

    BoundReport report;
    report.bound_id = BoundId::cauchy_davenport;
    report.r = r;
    long long lhs = 0;
    for (int k = 1; k <= std::min(r, diam); ++k) lhs += hist[k];
    report.lhs = lhs;
    report.rhs = Rational(static_cast<long long>(r) * g.size());
    if (r < diam) {
        report.applicability = Applicability::applies;
    } else {
        report.applicability = Applicability::vacuous;
        report.reason = "bound stated only for r below the diameter (r=" +
                        std::to_string(r) + ", diameter=" + std::to_string(diam) + ")";
    }
    finish(report);
    return report;
}

BoundReport check_higher_power(const Graph& g, int r, int threads) {
    check_radius_at_least_one(r);

    BoundReport report;
    report.bound_id = BoundId::higher_power;
    report.r = r;
    report.lhs = power_edge_count(g, r, threads);
    long long factor = (r + 2) / 3 - 1;  // ceil(r/3) - 1
    report.rhs = Rational(factor * g.size());

    std::vector<std::string> failures;
    if (!regularity(g)) failures.push_back("graph is not regular");
    bool connected = is_connected(g);
    if (!connected) failures.push_back("graph is disconnected");
    if (!failures.empty()) {
        report.applicability = Applicability::preconditions_unmet;
        report.reason = join_reasons(failures);
    } else {
        int diam = diameter(g);
        if (r > diam) {
            report.applicability = Applicability::vacuous;
            report.reason = "bound stated only for r up to the diameter (r=" +
                            std::to_string(r) + ", diameter=" + std::to_string(diam) + ")";
        }
    }
    finish(report);
    return report;
}

namespace {

BoundReport cube_report(const Graph& g, BoundId id, long long rhs_num_factor,
                        long long rhs_den_factor, bool conjecture, int threads) {
    BoundReport report;
    report.bound_id = id;
    report.r = 3;
    report.conjecture = conjecture;
    report.lhs = power_edge_count(g, 3, threads);
    report.rhs = Rational(rhs_num_factor * g.size(), rhs_den_factor);

    std::vector<std::string> failures;
    if (!regularity(g)) failures.push_back("graph is not regular");
    bool connected = is_connected(g);
    if (!connected) {
        failures.push_back("graph is disconnected");
    } else {
        int diam = diameter(g);
        if (diam < 3) {
            failures.push_back("diameter " + std::to_string(diam) + " is below 3");
        }
    }
    if (!failures.empty()) {
        report.applicability = Applicability::preconditions_unmet;
        report.reason = join_reasons(failures);
    }
    finish(report);
    return report;
}

}  // namespace

BoundReport check_cube(const Graph& g, int threads) {
    return cube_report(g, BoundId::cube_7_6, 7, 6, false, threads);
}

BoundReport check_cube_conjecture(const Graph& g, int threads) {
    return cube_report(g, BoundId::cube_conjecture_2e, 2, 1, true, threads);
}

OrientedSquareResult check_oriented_square(const Digraph& d, int threads) {
    OrientedSquareResult result;
    BoundReport& report = result.report;
    report.bound_id = BoundId::oriented_square_3_2;
    report.r = 2;
    report.lhs = power_arc_count(d, 2, threads);
    report.rhs = Rational(3 * d.size(), 2);

    std::vector<std::string> failures;
    if (!d.is_oriented()) {
        failures.push_back("digraph is not oriented (antiparallel arc pair exists)");
    }
    if (!d.out_regularity()) failures.push_back("digraph is not out-regular");
    if (!failures.empty()) {
        report.applicability = Applicability::preconditions_unmet;
        report.reason = join_reasons(failures);
    }
    finish(report);

    int n = d.order();
    result.witnesses.resize(n);
    parallel_for(n, threads, [&](long long src) {
        int v = static_cast<int>(src);
        std::vector<int> dist = bfs_distances(d, v, 2);
        OrientedWitness& w = result.witnesses[v];
        w.vertex = v;
        w.out1 = d.out_degree(v);
        w.out2 = 0;
        for (int u = 0; u < n; ++u) {
            if (dist[u] == 2) ++w.out2;
        }
        w.saturated = (1 + w.out1 + w.out2 == n);
        w.holds = w.saturated || 2 * w.out2 >= w.out1;
    });
    result.witnesses_hold =
        std::all_of(result.witnesses.begin(), result.witnesses.end(),
                    [](const OrientedWitness& w) { return w.holds; });
    return result;
}

BoundReport check_eulerian_square(const Digraph& d, int threads) {
    BoundReport report;
    report.bound_id = BoundId::eulerian_square_2e;
    report.r = 2;
    report.conjecture = true;
    report.lhs = power_arc_count(d, 2, threads);
    report.rhs = Rational(2 * d.size());

    std::vector<std::string> failures;
    if (!d.is_oriented()) {
        failures.push_back("digraph is not oriented (antiparallel arc pair exists)");
    }
    std::vector<int> in = d.in_degrees();
    for (int v = 0; v < d.order(); ++v) {
        if (in[v] != d.out_degree(v)) {
            failures.push_back("in-degree != out-degree at vertex " + std::to_string(v) +
                               " (" + std::to_string(in[v]) + " vs " +
                               std::to_string(d.out_degree(v)) + ")");
            break;
        }
    }
    if (!is_weakly_connected(d)) failures.push_back("underlying graph is disconnected");
    if (!failures.empty()) {
        report.applicability = Applicability::preconditions_unmet;
        report.reason = join_reasons(failures);
    }
    finish(report);
    return report;
}

std::vector<LayerReachEntry> layer_reach_check(const Graph& g, int v, int u, int r) {
    check_radius_at_least_one(r);
    std::optional<int> d = regularity(g);
    if (!d) throw NotRegularError("layer reach check needs a regular graph");
    if (!is_connected(g)) {
        throw DisconnectedError("layer reach check needs a connected graph");
    }

    std::vector<std::vector<int>> around_v = layers(g, v);
    std::vector<int> dist_u = bfs_distances(g, u);
    int span = dist_u[v];

    std::vector<LayerReachEntry> entries;
    int lo = std::max(1, span - r + 1);
    for (int j = lo; j <= span; ++j) {
        long long count = 0;
        for (int layer = j - 1; layer <= j + 1; ++layer) {
            if (layer < 0 || layer >= static_cast<int>(around_v.size())) continue;
            for (int w : around_v[layer]) {
                if (dist_u[w] <= r) ++count;
            }
        }
        entries.push_back({j, count, *d, count >= *d});
    }
    return entries;
}

std::vector<SweepRow> sweep_h_ratio(int r, const std::vector<int>& d_values,
                                    bool regularize, int threads) {
    std::vector<SweepRow> rows;
    rows.reserve(d_values.size());
    for (int d : d_values) {
        Graph g = regularize ? regularized_h(r, d) : layered_h(r, d);
        SweepRow row;
        row.d = d;
        row.n = g.order();
        row.m = g.size();
        row.power_edges = power_edge_count(g, r, threads);
        row.ratio = Rational(row.power_edges, row.m);
        row.limit = (r + 3) / 3;  // ceil((r+1)/3)
        rows.push_back(row);
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "d,n,m,power_edges,ratio_num,ratio_den,limit\n";
    for (const auto& row : rows) {
        out += std::to_string(row.d) + "," + std::to_string(row.n) + "," +
               std::to_string(row.m) + "," + std::to_string(row.power_edges) + "," +
               std::to_string(row.ratio.num) + "," + std::to_string(row.ratio.den) + "," +
               std::to_string(row.limit) + "\n";
    }
    return out;
}

}  // namespace gp
