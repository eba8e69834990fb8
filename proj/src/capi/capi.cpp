#include "graphpower/graphpower.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include <json.hpp>

#include "../core/bounds.hpp"
#include "../core/coloring.hpp"
#include "../core/edgelist.hpp"
#include "../core/errors.hpp"
#include "../core/families.hpp"
#include "../core/graph.hpp"
#include "../core/power.hpp"

struct gp_graph {
    gp::Graph impl;
};

struct gp_digraph {
    gp::Digraph impl;
};

namespace {

constexpr const char* kVersion = "0.1.0";

thread_local std::string t_last_error;

gp_status fail(gp_status status, const std::string& what) {
    t_last_error = what;
    return status;
}

// Runs a callable and maps exceptions onto status codes.
template <class Fn>
gp_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const gp::ParseError& e) {
        return fail(GP_ERR_PARSE, e.what());
    } catch (const gp::IoError& e) {
        return fail(GP_ERR_IO, e.what());
    } catch (const gp::DisconnectedError& e) {
        return fail(GP_ERR_DISCONNECTED, e.what());
    } catch (const gp::NotRegularError& e) {
        return fail(GP_ERR_NOT_REGULAR, e.what());
    } catch (const gp::SizeLimitError& e) {
        return fail(GP_ERR_LIMIT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(GP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(GP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(GP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(GP_ERR_INTERNAL, e.what());
    }
}

gp_status require(bool ok, const char* what) {
    return ok ? GP_OK : fail(GP_ERR_INVALID_ARGUMENT, std::string("null argument: ") + what);
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<std::pair<int, int>> collect_pairs(const int* endpoints, long long m) {
    if (m < 0) throw std::invalid_argument("negative edge count");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        pairs.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    }
    return pairs;
}

std::vector<std::string> collect_comments(const char* const* comments, int n_comments) {
    std::vector<std::string> out;
    for (int i = 0; i < n_comments; ++i) {
        if (!comments[i]) throw std::invalid_argument("null comment string");
        out.emplace_back(comments[i]);
    }
    return out;
}

void deliver_report(const gp::BoundReport& report, char** out_json,
                    gp_applicability* out_app, int* out_satisfied) {
    if (out_json) *out_json = dup_string(gp::bound_report_json(report));
    if (out_app) *out_app = static_cast<gp_applicability>(report.applicability);
    if (out_satisfied) *out_satisfied = report.satisfied ? 1 : 0;
}

}  // namespace

extern "C" {

const char* gp_version(void) { return kVersion; }

const char* gp_last_error(void) { return t_last_error.c_str(); }

void gp_string_free(char* s) { std::free(s); }

/* ---- construction ------------------------------------------------------ */

gp_status gp_graph_build(int n, const int* endpoints, long long m, gp_graph** out) {
    if (gp_status s = require(out != nullptr, "out"); s != GP_OK) return s;
    if (gp_status s = require(endpoints != nullptr || m == 0, "endpoints"); s != GP_OK)
        return s;
    *out = nullptr;
    return guarded([&] {
        *out = new gp_graph{gp::Graph::from_edges(n, collect_pairs(endpoints, m))};
        return GP_OK;
    });
}

void gp_graph_free(gp_graph* g) { delete g; }

gp_status gp_digraph_build(int n, const int* endpoints, long long m, gp_digraph** out) {
    if (gp_status s = require(out != nullptr, "out"); s != GP_OK) return s;
    if (gp_status s = require(endpoints != nullptr || m == 0, "endpoints"); s != GP_OK)
        return s;
    *out = nullptr;
    return guarded([&] {
        *out = new gp_digraph{gp::Digraph::from_arcs(n, collect_pairs(endpoints, m))};
        return GP_OK;
    });
}

void gp_digraph_free(gp_digraph* d) { delete d; }

/* ---- basic queries ----------------------------------------------------- */

int gp_graph_order(const gp_graph* g) { return g ? g->impl.order() : 0; }

long long gp_graph_size(const gp_graph* g) { return g ? g->impl.size() : 0; }

int gp_digraph_order(const gp_digraph* d) { return d ? d->impl.order() : 0; }

long long gp_digraph_size(const gp_digraph* d) { return d ? d->impl.size() : 0; }

gp_status gp_graph_is_connected(const gp_graph* g, int* out) {
    if (gp_status s = require(g != nullptr, "g"); s != GP_OK) return s;
    if (gp_status s = require(out != nullptr, "out"); s != GP_OK) return s;
    return guarded([&] {
        *out = gp::is_connected(g->impl) ? 1 : 0;
        return GP_OK;
    });
}

gp_status gp_graph_regularity(const gp_graph* g, int* out_degree) {
    if (gp_status s = require(g != nullptr, "g"); s != GP_OK) return s;
    if (gp_status s = require(out_degree != nullptr, "out_degree"); s != GP_OK) return s;
    return guarded([&] {
        auto d = gp::regularity(g->impl);
        *out_degree = d ? *d : -1;
        return GP_OK;
    });
}

gp_status gp_graph_diameter(const gp_graph* g, int* out) {
    if (gp_status s = require(g != nullptr, "g"); s != GP_OK) return s;
    if (gp_status s = require(out != nullptr, "out"); s != GP_OK) return s;
    return guarded([&] {
        *out = gp::diameter(g->impl);
        return GP_OK;
    });
}

gp_status gp_graph_bfs_distances(const gp_graph* g, int source, int* out) {
    if (gp_status s = require(g != nullptr, "g"); s != GP_OK) return s;
    if (gp_status s = require(out != nullptr, "out"); s != GP_OK) return s;
    return guarded([&] {
        std::vector<int> dist = gp::bfs_distances(g->impl, source);
        std::memcpy(out, dist.data(), dist.size() * sizeof(int));
        return GP_OK;
    });
}

/* ---- edge-list I/O ------------------------------------------------------ */

namespace {

gp_status deliver_loaded(gp::LoadedGraph&& loaded, gp_graph** out_g, gp_digraph** out_d) {
    if (out_g) *out_g = nullptr;
    if (out_d) *out_d = nullptr;
    if (loaded.directed()) {
        if (!out_d) {
            return fail(GP_ERR_INVALID_ARGUMENT,
                        "input is a directed graph but no digraph output was provided");
        }
        *out_d = new gp_digraph{std::move(*loaded.digraph)};
    } else {
        if (!out_g) {
            return fail(GP_ERR_INVALID_ARGUMENT,
                        "input is an undirected graph but no graph output was provided");
        }
        *out_g = new gp_graph{std::move(*loaded.graph)};
    }
    return GP_OK;
}

}  // namespace

gp_status gp_load_edge_list(const char* path, gp_graph** out_g, gp_digraph** out_d) {
    if (gp_status s = require(path != nullptr, "path"); s != GP_OK) return s;
    if (gp_status s = require(out_g != nullptr || out_d != nullptr, "output"); s != GP_OK)
        return s;
    return guarded([&] { return deliver_loaded(gp::load_edge_list(path), out_g, out_d); });
}

gp_status gp_parse_edge_list(const char* text, gp_graph** out_g, gp_digraph** out_d) {
    if (gp_status s = require(text != nullptr, "text"); s != GP_OK) return s;
    if (gp_status s = require(out_g != nullptr || out_d != nullptr, "output"); s != GP_OK)
        return s;
    return guarded([&] { return deliver_loaded(gp::parse_edge_list(text), out_g, out_d); });
}

gp_status gp_graph_write_edge_list(const gp_graph* g, const char* path,
                                   const char* const* comments, int n_comments) {
    if (gp_status s = require(g != nullptr, "g"); s != GP_OK) return s;
    if (gp_status s = require(path != nullptr, "path"); s != GP_OK) return s;
    if (gp_status s = require(comments != nullptr || n_comments == 0, "comments");
        s != GP_OK)
        return s;
    return guarded([&] {
        gp::write_edge_list(path, g->impl, collect_comments(comments, n_comments));
        return GP_OK;
    });
}

gp_status gp_digraph_write_edge_list(const gp_digraph* d, const char* path,
                                     const char* const* comments, int n_comments) {
    if (gp_status s = require(d != nullptr, "d"); s != GP_OK) return s;
    if (gp_status s = require(path != nullptr, "path"); s != GP_OK) return s;
    if (gp_status s = require(comments != nullptr || n_comments == 0, "comments");
        s != GP_OK)
        return s;
    return guarded([&] {
        gp::write_edge_list(path, d->impl, collect_comments(comments, n_comments));
        return GP_OK;
    });
}

gp_status gp_graph_format_edge_list(const gp_graph* g, const char* const* comments,
                                    int n_comments, char** out_text) {
    if (gp_status s = require(g != nullptr, "g"); s != GP_OK) return s;
    if (gp_status s = require(out_text != nullptr, "out_text"); s != GP_OK) return s;
    if (gp_status s = require(comments != nullptr || n_comments == 0, "comments");
        s != GP_OK)
        return s;
    return guarded([&] {
        *out_text =
            dup_string(gp::format_edge_list(g->impl, collect_comments(comments, n_comments)));
        return GP_OK;
    });
}

gp_status gp_digraph_format_edge_list(const gp_digraph* d, const char* const* comments,
                                      int n_comments, char** out_text) {
    if (gp_status s = require(d != nullptr, "d"); s != GP_OK) return s;
    if (gp_status s = require(out_text != nullptr, "out_text"); s != GP_OK) return s;
    if (gp_status s = require(comments != nullptr || n_comments == 0, "comments");
        s != GP_OK)
        return s;
    return guarded([&] {
        *out_text =
            dup_string(gp::format_edge_list(d->impl, collect_comments(comments, n_comments)));
        return GP_OK;
    });
}

/* ---- powers ------------------------------------------------------------- */

gp_status gp_graph_power(const gp_graph* g, int r, int threads, gp_graph** out) {
    if (gp_status s = require(g != nullptr, "g"); s != GP_OK) return s;
    if (gp_status s = require(out != nullptr, "out"); s != GP_OK) return s;
    *out = nullptr;
    return guarded([&] {
        *out = new gp_graph{gp::graph_power(g->impl, r, threads)};
        return GP_OK;
    });
}

gp_status gp_digraph_power(const gp_digraph* d, int r, int threads, gp_digraph** out) {
    if (gp_status s = require(d != nullptr, "d"); s != GP_OK) return s;
    if (gp_status s = require(out != nullptr, "out"); s != GP_OK) return s;
    *out = nullptr;
    return guarded([&] {
        *out = new gp_digraph{gp::digraph_power(d->impl, r, threads)};
        return GP_OK;
    });
}

gp_status gp_growth_profile_csv(const gp_graph* g, int threads, char** out_csv) {
    if (gp_status s = require(g != nullptr, "g"); s != GP_OK) return s;
    if (gp_status s = require(out_csv != nullptr, "out_csv"); s != GP_OK) return s;
    return guarded([&] {
        *out_csv = dup_string(gp::growth_profile_csv(gp::growth_profile(g->impl, threads)));
        return GP_OK;
    });
}

/* ---- generators ---------------------------------------------------------- */

gp_status gp_gen_cycle(int n, gp_graph** out) {
    if (gp_status s = require(out != nullptr, "out"); s != GP_OK) return s;
    *out = nullptr;
    return guarded([&] {
        *out = new gp_graph{gp::cycle(n)};
        return GP_OK;
    });
}

gp_status gp_gen_path(int n, gp_graph** out) {
    if (gp_status s = require(out != nullptr, "out"); s != GP_OK) return s;
    *out = nullptr;
    return guarded([&] {
        *out = new gp_graph{gp::path(n)};
        return GP_OK;
    });
}

gp_status gp_gen_cayley(int p, const int* gens, int n_gens, gp_graph** out) {
    if (gp_status s = require(out != nullptr, "out"); s != GP_OK) return s;
    if (gp_status s = require(gens != nullptr || n_gens == 0, "gens"); s != GP_OK) return s;
    *out = nullptr;
    return guarded([&] {
        *out = new gp_graph{gp::cayley_undirected(p, std::vector<int>(gens, gens + n_gens))};
        return GP_OK;
    });
}

gp_status gp_gen_cayley_directed(int p, const int* gens, int n_gens, gp_digraph** out) {
    if (gp_status s = require(out != nullptr, "out"); s != GP_OK) return s;
    if (gp_status s = require(gens != nullptr || n_gens == 0, "gens"); s != GP_OK) return s;
    *out = nullptr;
    return guarded([&] {
        *out = new gp_digraph{gp::cayley_directed(p, std::vector<int>(gens, gens + n_gens))};
        return GP_OK;
    });
}

gp_status gp_gen_layered(int r, int d, gp_graph** out) {
    if (gp_status s = require(out != nullptr, "out"); s != GP_OK) return s;
    *out = nullptr;
    return guarded([&] {
        *out = new gp_graph{gp::layered_h(r, d)};
        return GP_OK;
    });
}

gp_status gp_gen_layered_regular(int r, int d, gp_graph** out) {
    if (gp_status s = require(out != nullptr, "out"); s != GP_OK) return s;
    *out = nullptr;
    return guarded([&] {
        *out = new gp_graph{gp::regularized_h(r, d)};
        return GP_OK;
    });
}

gp_status gp_gen_random_regular(int n, int d, unsigned long long seed, gp_graph** out) {
    if (gp_status s = require(out != nullptr, "out"); s != GP_OK) return s;
    *out = nullptr;
    return guarded([&] {
        *out = new gp_graph{gp::random_regular_connected(n, d, seed)};
        return GP_OK;
    });
}

/* ---- bound checks -------------------------------------------------------- */

gp_status gp_check_cauchy_davenport(const gp_graph* g, int r, int threads,
                                    char** out_json, gp_applicability* out_app,
                                    int* out_satisfied) {
    if (gp_status s = require(g != nullptr, "g"); s != GP_OK) return s;
    return guarded([&] {
        deliver_report(gp::check_cauchy_davenport(g->impl, r, threads), out_json, out_app,
                       out_satisfied);
        return GP_OK;
    });
}

gp_status gp_check_higher_power(const gp_graph* g, int r, int threads, char** out_json,
                                gp_applicability* out_app, int* out_satisfied) {
    if (gp_status s = require(g != nullptr, "g"); s != GP_OK) return s;
    return guarded([&] {
        deliver_report(gp::check_higher_power(g->impl, r, threads), out_json, out_app,
                       out_satisfied);
        return GP_OK;
    });
}

gp_status gp_check_cube(const gp_graph* g, int threads, char** out_json,
                        gp_applicability* out_app, int* out_satisfied) {
    if (gp_status s = require(g != nullptr, "g"); s != GP_OK) return s;
    return guarded([&] {
        deliver_report(gp::check_cube(g->impl, threads), out_json, out_app, out_satisfied);
        return GP_OK;
    });
}

gp_status gp_check_cube_conjecture(const gp_graph* g, int threads, char** out_json,
                                   gp_applicability* out_app, int* out_satisfied) {
    if (gp_status s = require(g != nullptr, "g"); s != GP_OK) return s;
    return guarded([&] {
        deliver_report(gp::check_cube_conjecture(g->impl, threads), out_json, out_app,
                       out_satisfied);
        return GP_OK;
    });
}

gp_status gp_check_oriented_square(const gp_digraph* d, int threads, char** out_json,
                                   gp_applicability* out_app, int* out_satisfied,
                                   int* out_witnesses_hold) {
    if (gp_status s = require(d != nullptr, "d"); s != GP_OK) return s;
    return guarded([&] {
        gp::OrientedSquareResult result = gp::check_oriented_square(d->impl, threads);
        deliver_report(result.report, out_json, out_app, out_satisfied);
        if (out_witnesses_hold) *out_witnesses_hold = result.witnesses_hold ? 1 : 0;
        return GP_OK;
    });
}

gp_status gp_check_eulerian_square(const gp_digraph* d, int threads, char** out_json,
                                   gp_applicability* out_app, int* out_satisfied) {
    if (gp_status s = require(d != nullptr, "d"); s != GP_OK) return s;
    return guarded([&] {
        deliver_report(gp::check_eulerian_square(d->impl, threads), out_json, out_app,
                       out_satisfied);
        return GP_OK;
    });
}

gp_status gp_layer_reach_check(const gp_graph* g, int v, int u, int r, char** out_json,
                               int* out_all_hold) {
    if (gp_status s = require(g != nullptr, "g"); s != GP_OK) return s;
    return guarded([&] {
        std::vector<gp::LayerReachEntry> entries = gp::layer_reach_check(g->impl, v, u, r);
        bool all_hold = true;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& e : entries) {
            all_hold = all_hold && e.holds;
            rows.push_back({{"j", e.j}, {"count", e.count}, {"holds", e.holds}});
        }
        if (out_json) {
            nlohmann::ordered_json j;
            j["v"] = v;
            j["u"] = u;
            j["r"] = r;
            j["required"] = entries.empty() ? *gp::regularity(g->impl) : entries[0].required;
            j["all_hold"] = all_hold;
            j["entries"] = std::move(rows);
            *out_json = dup_string(j.dump());
        }
        if (out_all_hold) *out_all_hold = all_hold ? 1 : 0;
        return GP_OK;
    });
}

gp_status gp_sweep_h_ratio_csv(int r, const int* d_values, int n_d, int regularize,
                               int threads, char** out_csv) {
    if (gp_status s = require(d_values != nullptr || n_d == 0, "d_values"); s != GP_OK)
        return s;
    if (gp_status s = require(out_csv != nullptr, "out_csv"); s != GP_OK) return s;
    return guarded([&] {
        std::vector<int> ds(d_values, d_values + n_d);
        *out_csv = dup_string(gp::sweep_csv(gp::sweep_h_ratio(r, ds, regularize != 0, threads)));
        return GP_OK;
    });
}

gp_status gp_diagnose_cube(const gp_graph* g, int threads, char** out_json,
                           int* out_all_applicable_hold) {
    if (gp_status s = require(g != nullptr, "g"); s != GP_OK) return s;
    return guarded([&] {
        gp::CubeDiagnostics diag = gp::diagnose_cube(g->impl, threads);
        if (out_json) *out_json = dup_string(gp::cube_diagnostics_json(diag));
        if (out_all_applicable_hold) *out_all_applicable_hold = diag.all_applicable_hold ? 1 : 0;
        return GP_OK;
    });
}

} /* extern "C" */
