/* graphpower: C API for graph powers, extremal families and edge-growth
 * bound checking.
 *
 * Conventions:
 *   - every fallible call returns a gp_status; GP_OK means success;
 *   - on failure, gp_last_error() returns a thread-local message describing
 *     what went wrong (valid until the next failing call on that thread);
 *   - handles from *_build / gp_gen_* / load calls are owned by the caller
 *     and released with gp_graph_free / gp_digraph_free;
 *   - strings returned through char** are library-allocated and must be
 *     released with gp_string_free;
 *   - `threads` parameters cap worker threads for the heavier operations;
 *     0 means automatic (GPL_THREADS environment variable, then hardware).
 *     Results never depend on the worker count.
 */
#ifndef GRAPHPOWER_H
#define GRAPHPOWER_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gp_graph gp_graph;     /* simple undirected graph */
typedef struct gp_digraph gp_digraph; /* simple directed graph */

typedef enum gp_status {
    GP_OK = 0,
    GP_ERR_INVALID_ARGUMENT = 1, /* bad parameter or malformed graph data */
    GP_ERR_PARSE = 2,            /* edge-list text failed to parse */
    GP_ERR_IO = 3,               /* file could not be read or written */
    GP_ERR_DISCONNECTED = 4,     /* operation requires a connected graph */
    GP_ERR_NOT_REGULAR = 5,      /* operation requires a regular graph */
    GP_ERR_LIMIT = 6,            /* size guard or attempt cap exceeded */
    GP_ERR_INTERNAL = 7
} gp_status;

typedef enum gp_applicability {
    GP_APPLIES = 0,
    GP_VACUOUS = 1,             /* input outside the stated range of the bound */
    GP_PRECONDITIONS_UNMET = 2  /* structural hypothesis fails */
} gp_applicability;

const char* gp_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* gp_last_error(void);

/* Releases any char* produced by this library. NULL is allowed. */
void gp_string_free(char* s);

/* ---- construction ------------------------------------------------------ */

/* endpoints holds 2*m ints: u0,v0,u1,v1,... Duplicate pairs collapse;
 * self-loops and out-of-range vertices are rejected. */
gp_status gp_graph_build(int n, const int* endpoints, long long m, gp_graph** out);
void gp_graph_free(gp_graph* g);

gp_status gp_digraph_build(int n, const int* endpoints, long long m, gp_digraph** out);
void gp_digraph_free(gp_digraph* d);

/* ---- basic queries ----------------------------------------------------- */

int gp_graph_order(const gp_graph* g);
long long gp_graph_size(const gp_graph* g);
int gp_digraph_order(const gp_digraph* d);
long long gp_digraph_size(const gp_digraph* d);

gp_status gp_graph_is_connected(const gp_graph* g, int* out);
/* out_degree receives the common degree, or -1 when the graph is irregular. */
gp_status gp_graph_regularity(const gp_graph* g, int* out_degree);
gp_status gp_graph_diameter(const gp_graph* g, int* out);
/* out must hold gp_graph_order(g) ints; unreachable vertices get -1. */
gp_status gp_graph_bfs_distances(const gp_graph* g, int source, int* out);

/* ---- edge-list I/O ------------------------------------------------------ */

/* Loads either kind of graph; exactly one of *out_g / *out_d receives a new
 * handle, the other is set to NULL. Either out pointer may itself be NULL if
 * that kind is unacceptable (a file of the other kind then fails with
 * GP_ERR_INVALID_ARGUMENT). */
gp_status gp_load_edge_list(const char* path, gp_graph** out_g, gp_digraph** out_d);
gp_status gp_parse_edge_list(const char* text, gp_graph** out_g, gp_digraph** out_d);

/* comments (n_comments strings, without '#') are written before the header. */
gp_status gp_graph_write_edge_list(const gp_graph* g, const char* path,
                                   const char* const* comments, int n_comments);
gp_status gp_digraph_write_edge_list(const gp_digraph* d, const char* path,
                                     const char* const* comments, int n_comments);
gp_status gp_graph_format_edge_list(const gp_graph* g, const char* const* comments,
                                    int n_comments, char** out_text);
gp_status gp_digraph_format_edge_list(const gp_digraph* d, const char* const* comments,
                                      int n_comments, char** out_text);

/* ---- powers ------------------------------------------------------------- */

/* r-th power: edge (arc) between u and v iff their distance is in [1, r]. */
gp_status gp_graph_power(const gp_graph* g, int r, int threads, gp_graph** out);
gp_status gp_digraph_power(const gp_digraph* d, int r, int threads, gp_digraph** out);

/* Edge counts e(G^r) for r = 1..diam(G) with exact growth ratios, as CSV
 * "r,edges,ratio_num,ratio_den". Requires a connected graph. */
gp_status gp_growth_profile_csv(const gp_graph* g, int threads, char** out_csv);

/* ---- generators ---------------------------------------------------------- */

gp_status gp_gen_cycle(int n, gp_graph** out);
gp_status gp_gen_path(int n, gp_graph** out);

/* Circulant graph on Z_p with the given generator set (values in [1, p)). */
gp_status gp_gen_cayley(int p, const int* gens, int n_gens, gp_graph** out);
gp_status gp_gen_cayley_directed(int p, const int* gens, int n_gens, gp_digraph** out);

/* Layered extremal family: r+1 layers alternating size d-1 / 2 / 2, cliques
 * inside layers, complete joins between consecutive layers. Diameter r.
 * The regular variant removes one cycle through the interior vertices, which
 * makes the graph exactly d-regular. r >= 3, d >= 5. */
gp_status gp_gen_layered(int r, int d, gp_graph** out);
gp_status gp_gen_layered_regular(int r, int d, gp_graph** out);

/* Random d-regular connected graph by stub pairing; deterministic per seed.
 * Requires 2 <= d < n and n*d even. */
gp_status gp_gen_random_regular(int n, int d, unsigned long long seed, gp_graph** out);

/* ---- bound checks -------------------------------------------------------- */

/* Each check fills a single-line JSON report (fields: bound_id, r, lhs,
 * rhs_num, rhs_den, satisfied, slack_num, slack_den, applicability, reason).
 * Any of the out parameters may be NULL when not wanted. */

/* e(G^r) >= r*e(G) for circulant graphs with r below the diameter. The
 * caller attests the circulant structure; connectivity is required. */
gp_status gp_check_cauchy_davenport(const gp_graph* g, int r, int threads,
                                    char** out_json, gp_applicability* out_app,
                                    int* out_satisfied);

/* e(G^r) >= (ceil(r/3)-1)*e(G) for connected regular graphs, r <= diam. */
gp_status gp_check_higher_power(const gp_graph* g, int r, int threads,
                                char** out_json, gp_applicability* out_app,
                                int* out_satisfied);

/* e(G^3) >= (7/6)*e(G) for connected regular graphs of diameter >= 3. */
gp_status gp_check_cube(const gp_graph* g, int threads, char** out_json,
                        gp_applicability* out_app, int* out_satisfied);

/* Conjectured e(G^3) >= 2*e(G), same hypotheses. */
gp_status gp_check_cube_conjecture(const gp_graph* g, int threads, char** out_json,
                                   gp_applicability* out_app, int* out_satisfied);

/* e(D^2) >= (3/2)*e(D) for oriented out-regular digraphs. out_witnesses_hold
 * reports the per-vertex statement: each second out-neighborhood is at least
 * half the first, except at vertices whose closed 2-out-neighborhood is
 * already everything. */
gp_status gp_check_oriented_square(const gp_digraph* d, int threads, char** out_json,
                                   gp_applicability* out_app, int* out_satisfied,
                                   int* out_witnesses_hold);

/* Conjectured e(D^2) >= 2*e(D) for oriented digraphs with in-degree equal to
 * out-degree everywhere and a connected underlying graph. */
gp_status gp_check_eulerian_square(const gp_digraph* d, int threads, char** out_json,
                                   gp_applicability* out_app, int* out_satisfied);

/* Layer-reach device: around center v, each layer index j with
 * dist(u,v)-r < j <= dist(u,v), j >= 1 must give u at least d reachable
 * vertices in layers j-1, j, j+1 within distance r. JSON lists one entry per
 * j. Requires a connected regular graph. */
gp_status gp_layer_reach_check(const gp_graph* g, int v, int u, int r,
                               char** out_json, int* out_all_hold);

/* Growth ratios e(G^r)/e(G) of the layered family over the given degrees,
 * as CSV "d,n,m,power_edges,ratio_num,ratio_den,limit". */
gp_status gp_sweep_h_ratio_csv(int r, const int* d_values, int n_d, int regularize,
                               int threads, char** out_csv);

/* Red/blue edge coloring diagnostics: colors, class membership and clause
 * verdicts as JSON. Requires a regular graph. */
gp_status gp_diagnose_cube(const gp_graph* g, int threads, char** out_json,
                           int* out_all_applicable_hold);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GRAPHPOWER_H */
