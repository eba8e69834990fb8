// gpower: command-line front end for the graphpower library.
//
// Subcommands: gen, power, verify, sweep, diagnose-cube. Payload goes to
// stdout (or --out); diagnostics go to stderr. Exit codes: 0 success,
// 1 I/O or runtime failure, 2 invalid parameters or parse errors,
// 3 a proven bound was violated, 4 only a conjectured bound was violated.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphpower/graphpower.h"

namespace {

struct GraphDeleter {
    void operator()(gp_graph* g) const { gp_graph_free(g); }
};
struct DigraphDeleter {
    void operator()(gp_digraph* d) const { gp_digraph_free(d); }
};
struct StringDeleter {
    void operator()(char* s) const { gp_string_free(s); }
};
using GraphPtr = std::unique_ptr<gp_graph, GraphDeleter>;
using DigraphPtr = std::unique_ptr<gp_digraph, DigraphDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_code_for(gp_status status) {
    switch (status) {
        case GP_OK:
            return 0;
        case GP_ERR_IO:
        case GP_ERR_LIMIT:
        case GP_ERR_INTERNAL:
            return 1;
        default:
            return 2;
    }
}

int fail_with(gp_status status) {
    std::fprintf(stderr, "error: %s\n", gp_last_error());
    return exit_code_for(status);
}

int usage_error(const std::string& message) {
    std::fprintf(stderr, "error: %s\n", message.c_str());
    return 2;
}

// Writes the payload to --out or stdout. Returns an exit code.
int emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        std::cout.flush();
        return std::cout ? 0 : 1;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::fprintf(stderr, "error: cannot open %s for writing\n", out_path.c_str());
        return 1;
    }
    out << payload;
    out.flush();
    if (!out) {
        std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
        return 1;
    }
    return 0;
}

bool parse_int_list(const std::string& csv, std::vector<int>& out) {
    out.clear();
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        try {
            size_t used = 0;
            int value = std::stoi(token, &used);
            if (used != token.size()) return false;
            out.push_back(value);
        } catch (const std::exception&) {
            return false;
        }
    }
    return !out.empty();
}

// "start:stop:step" or a single value.
bool parse_range(const std::string& text, std::vector<int>& out) {
    out.clear();
    std::vector<long long> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ':')) {
        try {
            size_t used = 0;
            parts.push_back(std::stoll(token, &used));
            if (used != token.size()) return false;
        } catch (const std::exception&) {
            return false;
        }
    }
    if (parts.size() == 1) {
        out.push_back(static_cast<int>(parts[0]));
        return true;
    }
    if (parts.size() != 3) return false;
    long long start = parts[0], stop = parts[1], step = parts[2];
    if (step < 1 || start > stop) return false;
    for (long long d = start; d <= stop; d += step) out.push_back(static_cast<int>(d));
    return true;
}

struct LoadedInput {
    GraphPtr graph;
    DigraphPtr digraph;
};

// Loads --in into whichever kind the file declares. Returns GP_OK or the
// failure already reported via fail_with's status.
gp_status load_input(const std::string& path, LoadedInput& input) {
    gp_graph* g = nullptr;
    gp_digraph* d = nullptr;
    gp_status status = gp_load_edge_list(path.c_str(), &g, &d);
    if (status != GP_OK) return status;
    input.graph.reset(g);
    input.digraph.reset(d);
    return GP_OK;
}

// ---- gen ------------------------------------------------------------------

struct GenOptions {
    std::string family;
    std::string set_csv;
    std::string out;
    int n = 0;
    int d = 0;
    int r = 0;
    int p = 0;
    unsigned long long seed = 1;
    bool directed = false;
    bool regularize = false;
};

int run_gen(const GenOptions& opt) {
    GraphPtr graph;
    DigraphPtr digraph;
    std::string provenance = "gpower gen family=" + opt.family;

    if (opt.family == "cycle" || opt.family == "path") {
        if (opt.n <= 0) return usage_error(opt.family + " needs --n");
        provenance += " n=" + std::to_string(opt.n);
        gp_graph* g = nullptr;
        gp_status status = (opt.family == "cycle") ? gp_gen_cycle(opt.n, &g)
                                                   : gp_gen_path(opt.n, &g);
        if (status != GP_OK) return fail_with(status);
        graph.reset(g);
    } else if (opt.family == "cayley") {
        if (opt.p <= 0) return usage_error("cayley needs --p");
        std::vector<int> gens;
        if (opt.set_csv.empty() || !parse_int_list(opt.set_csv, gens)) {
            return usage_error("cayley needs --set as a comma-separated integer list");
        }
        provenance += " p=" + std::to_string(opt.p) + " set=" + opt.set_csv;
        if (opt.directed) {
            provenance += " directed=1";
            gp_digraph* d = nullptr;
            gp_status status = gp_gen_cayley_directed(opt.p, gens.data(),
                                                      static_cast<int>(gens.size()), &d);
            if (status != GP_OK) return fail_with(status);
            digraph.reset(d);
        } else {
            gp_graph* g = nullptr;
            gp_status status =
                gp_gen_cayley(opt.p, gens.data(), static_cast<int>(gens.size()), &g);
            if (status != GP_OK) return fail_with(status);
            graph.reset(g);
        }
    } else if (opt.family == "hrd") {
        if (opt.r <= 0 || opt.d <= 0) return usage_error("hrd needs --r and --d");
        provenance += " r=" + std::to_string(opt.r) + " d=" + std::to_string(opt.d);
        if (opt.regularize) provenance += " regularize=1";
        gp_graph* g = nullptr;
        gp_status status = opt.regularize ? gp_gen_layered_regular(opt.r, opt.d, &g)
                                          : gp_gen_layered(opt.r, opt.d, &g);
        if (status != GP_OK) return fail_with(status);
        graph.reset(g);
    } else if (opt.family == "random-regular") {
        if (opt.n <= 0 || opt.d <= 0) return usage_error("random-regular needs --n and --d");
        provenance += " n=" + std::to_string(opt.n) + " d=" + std::to_string(opt.d) +
                      " seed=" + std::to_string(opt.seed);
        gp_graph* g = nullptr;
        gp_status status = gp_gen_random_regular(opt.n, opt.d, opt.seed, &g);
        if (status != GP_OK) return fail_with(status);
        graph.reset(g);
    } else {
        return usage_error("unknown family '" + opt.family +
                           "' (expected cycle, path, cayley, hrd or random-regular)");
    }

    long long n = graph ? gp_graph_order(graph.get()) : gp_digraph_order(digraph.get());
    long long m = graph ? gp_graph_size(graph.get()) : gp_digraph_size(digraph.get());
    std::string stats = "n=" + std::to_string(n) + " m=" + std::to_string(m);
    const char* comments[2] = {provenance.c_str(), stats.c_str()};

    char* text = nullptr;
    gp_status status =
        graph ? gp_graph_format_edge_list(graph.get(), comments, 2, &text)
              : gp_digraph_format_edge_list(digraph.get(), comments, 2, &text);
    if (status != GP_OK) return fail_with(status);
    StringPtr payload(text);

    std::string summary = stats;
    if (graph) {
        int degree = -1;
        int connected = 0;
        if (gp_graph_regularity(graph.get(), &degree) == GP_OK) {
            summary += (degree >= 0) ? " degree=" + std::to_string(degree)
                                     : std::string(" degree=irregular");
        }
        if (gp_graph_is_connected(graph.get(), &connected) == GP_OK) {
            summary += connected ? " connected=yes" : " connected=no";
        }
    }
    std::fprintf(stderr, "%s %s\n", provenance.c_str(), summary.c_str());
    return emit(payload.get(), opt.out);
}

// ---- power ------------------------------------------------------------------

struct PowerOptions {
    std::string in;
    std::string out;
    int r = 0;
    int threads = 0;
    bool profile = false;
};

int run_power(const PowerOptions& opt) {
    LoadedInput input;
    if (gp_status status = load_input(opt.in, input); status != GP_OK) {
        return fail_with(status);
    }

    if (opt.profile) {
        if (input.digraph) {
            return usage_error("growth profile needs an undirected graph");
        }
        char* csv = nullptr;
        gp_status status = gp_growth_profile_csv(input.graph.get(), opt.threads, &csv);
        if (status != GP_OK) return fail_with(status);
        StringPtr payload(csv);
        return emit(payload.get(), opt.out);
    }

    if (opt.r < 1) return usage_error("power needs --r >= 1 (or --profile)");
    std::string provenance =
        "gpower power in=" + opt.in + " r=" + std::to_string(opt.r);
    const char* comments[1] = {provenance.c_str()};

    char* text = nullptr;
    long long base_edges = 0;
    long long power_edges = 0;
    gp_status status;
    if (input.digraph) {
        gp_digraph* powered = nullptr;
        status = gp_digraph_power(input.digraph.get(), opt.r, opt.threads, &powered);
        if (status != GP_OK) return fail_with(status);
        DigraphPtr holder(powered);
        base_edges = gp_digraph_size(input.digraph.get());
        power_edges = gp_digraph_size(holder.get());
        status = gp_digraph_format_edge_list(holder.get(), comments, 1, &text);
        if (status != GP_OK) return fail_with(status);
    } else {
        gp_graph* powered = nullptr;
        status = gp_graph_power(input.graph.get(), opt.r, opt.threads, &powered);
        if (status != GP_OK) return fail_with(status);
        GraphPtr holder(powered);
        base_edges = gp_graph_size(input.graph.get());
        power_edges = gp_graph_size(holder.get());
        status = gp_graph_format_edge_list(holder.get(), comments, 1, &text);
        if (status != GP_OK) return fail_with(status);
    }
    StringPtr payload(text);

    std::string ratio = "n/a";
    if (base_edges > 0) {
        long long g = std::gcd(power_edges, base_edges);
        ratio = std::to_string(power_edges / g) + "/" + std::to_string(base_edges / g);
    }
    std::fprintf(stderr, "e(G)=%lld e(G^%d)=%lld ratio=%s\n", base_edges, opt.r,
                 power_edges, ratio.c_str());
    return emit(payload.get(), opt.out);
}

// ---- verify -----------------------------------------------------------------

struct VerifyOptions {
    std::string in;
    std::string bounds_csv;
    std::string out;
    int r = 0;
    int threads = 0;
    bool r_given = false;
};

const std::vector<std::string> kUndirectedBounds = {"cauchy-davenport", "higher-power",
                                                    "cube", "cube-conjecture"};
const std::vector<std::string> kDirectedBounds = {"oriented-square", "eulerian-square"};

bool is_known_bound(const std::string& name) {
    for (const auto& b : kUndirectedBounds) {
        if (b == name) return true;
    }
    for (const auto& b : kDirectedBounds) {
        if (b == name) return true;
    }
    return false;
}

bool is_directed_bound(const std::string& name) {
    for (const auto& b : kDirectedBounds) {
        if (b == name) return true;
    }
    return false;
}

bool is_conjecture_bound(const std::string& name) {
    return name == "cube-conjecture" || name == "eulerian-square";
}

int run_verify(const VerifyOptions& opt) {
    LoadedInput input;
    if (gp_status status = load_input(opt.in, input); status != GP_OK) {
        return fail_with(status);
    }
    bool directed = static_cast<bool>(input.digraph);

    std::vector<std::string> bounds;
    if (!opt.bounds_csv.empty()) {
        std::string token;
        std::istringstream in(opt.bounds_csv);
        while (std::getline(in, token, ',')) {
            if (!is_known_bound(token)) {
                return usage_error(
                    "unknown bound '" + token +
                    "' (expected cauchy-davenport, higher-power, cube, cube-conjecture, "
                    "oriented-square or eulerian-square)");
            }
            bounds.push_back(token);
        }
        if (bounds.empty()) return usage_error("--bounds must name at least one bound");
    } else if (directed) {
        bounds = kDirectedBounds;
    } else {
        // The circulant bound is opt-in: choosing it attests that the input
        // really is a circulant graph, which a graph file cannot declare.
        bounds = {"cube", "cube-conjecture"};
        if (opt.r_given) bounds.insert(bounds.begin(), "higher-power");
    }

    std::string payload;
    bool proven_violated = false;
    bool conjecture_violated = false;

    for (const auto& name : bounds) {
        if (is_directed_bound(name) != directed) {
            return usage_error("bound '" + name + "' needs " +
                               (is_directed_bound(name) ? "a directed" : "an undirected") +
                               " input graph");
        }
        char* json = nullptr;
        gp_applicability app = GP_APPLIES;
        int satisfied = 0;
        gp_status status = GP_OK;
        bool device_failed = false;

        if (name == "cauchy-davenport" || name == "higher-power") {
            if (!opt.r_given) return usage_error("bound '" + name + "' needs --r");
            status = (name == "cauchy-davenport")
                         ? gp_check_cauchy_davenport(input.graph.get(), opt.r, opt.threads,
                                                     &json, &app, &satisfied)
                         : gp_check_higher_power(input.graph.get(), opt.r, opt.threads,
                                                 &json, &app, &satisfied);
        } else if (name == "cube") {
            status = gp_check_cube(input.graph.get(), opt.threads, &json, &app, &satisfied);
        } else if (name == "cube-conjecture") {
            status = gp_check_cube_conjecture(input.graph.get(), opt.threads, &json, &app,
                                              &satisfied);
        } else if (name == "oriented-square") {
            int witnesses_hold = 1;
            status = gp_check_oriented_square(input.digraph.get(), opt.threads, &json, &app,
                                              &satisfied, &witnesses_hold);
            if (status == GP_OK && app == GP_APPLIES && !witnesses_hold) {
                std::fprintf(stderr, "oriented-square: per-vertex witnesses failed\n");
                device_failed = true;
            }
        } else {  // eulerian-square
            status = gp_check_eulerian_square(input.digraph.get(), opt.threads, &json, &app,
                                              &satisfied);
        }
        if (status != GP_OK) return fail_with(status);
        StringPtr line(json);
        payload += line.get();
        payload += "\n";

        if (app == GP_APPLIES && (!satisfied || device_failed)) {
            if (is_conjecture_bound(name)) {
                conjecture_violated = true;
            } else {
                proven_violated = true;
            }
            std::fprintf(stderr, "%s: bound violated\n", name.c_str());
        }
    }

    int rc = emit(payload, opt.out);
    if (rc != 0) return rc;
    if (proven_violated) return 3;
    if (conjecture_violated) return 4;
    return 0;
}

// ---- sweep ------------------------------------------------------------------

struct SweepOptions {
    std::string d_range;
    std::string out;
    int r = 0;
    int threads = 0;
    bool regularize = false;
};

int run_sweep(const SweepOptions& opt) {
    std::vector<int> d_values;
    if (!parse_range(opt.d_range, d_values)) {
        return usage_error("--d must be a value or start:stop:step with step >= 1");
    }
    char* csv = nullptr;
    gp_status status =
        gp_sweep_h_ratio_csv(opt.r, d_values.data(), static_cast<int>(d_values.size()),
                             opt.regularize ? 1 : 0, opt.threads, &csv);
    if (status != GP_OK) return fail_with(status);
    StringPtr payload(csv);
    return emit(payload.get(), opt.out);
}

// ---- diagnose-cube ------------------------------------------------------------

struct DiagnoseOptions {
    std::string in;
    std::string out;
    int threads = 0;
};

int run_diagnose(const DiagnoseOptions& opt) {
    LoadedInput input;
    if (gp_status status = load_input(opt.in, input); status != GP_OK) {
        return fail_with(status);
    }
    if (input.digraph) {
        return usage_error("diagnose-cube needs an undirected graph");
    }
    char* json = nullptr;
    int all_hold = 0;
    gp_status status = gp_diagnose_cube(input.graph.get(), opt.threads, &json, &all_hold);
    if (status != GP_OK) return fail_with(status);
    StringPtr payload(json);
    int rc = emit(std::string(payload.get()) + "\n", opt.out);
    if (rc != 0) return rc;
    if (!all_hold) {
        std::fprintf(stderr, "diagnose-cube: an applicable statement failed\n");
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph powers toolkit: generate graphs, compute powers, check "
                 "edge-growth bounds"};
    app.set_version_flag("--version", gp_version());
    app.require_subcommand(1);

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "generate a graph family as an edge list");
    gen->add_option("--family", gen_opt.family,
                    "cycle, path, cayley, hrd or random-regular")
        ->required();
    gen->add_option("--n", gen_opt.n, "vertex count (cycle, path, random-regular)");
    gen->add_option("--d", gen_opt.d, "degree (hrd, random-regular)");
    gen->add_option("--r", gen_opt.r, "radius parameter of the layered family");
    gen->add_option("--p", gen_opt.p, "modulus of the circulant family");
    gen->add_option("--set", gen_opt.set_csv, "circulant generators, e.g. 1,2");
    gen->add_option("--seed", gen_opt.seed, "random-regular seed (default 1)");
    gen->add_flag("--directed", gen_opt.directed, "directed circulant");
    gen->add_flag("--regularize", gen_opt.regularize,
                  "remove the interior cycle of the layered family");
    gen->add_option("--out", gen_opt.out, "output file (default stdout)");

    PowerOptions power_opt;
    CLI::App* power = app.add_subcommand("power", "compute the r-th power of a graph");
    power->add_option("--in", power_opt.in, "input edge list")->required();
    power->add_option("--r", power_opt.r, "power exponent");
    power->add_flag("--profile", power_opt.profile,
                    "emit the growth profile CSV instead of a power graph");
    power->add_option("--threads", power_opt.threads, "worker cap (0 = auto)");
    power->add_option("--out", power_opt.out, "output file (default stdout)");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "check edge-growth bounds");
    verify->add_option("--in", verify_opt.in, "input edge list")->required();
    verify->add_option("--bounds", verify_opt.bounds_csv,
                       "comma-separated bound names (default: all that fit the input)");
    CLI::Option* verify_r =
        verify->add_option("--r", verify_opt.r, "power exponent for the r-dependent bounds");
    verify->add_option("--threads", verify_opt.threads, "worker cap (0 = auto)");
    verify->add_option("--out", verify_opt.out, "output file (default stdout)");

    SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "growth ratios of the layered family across degrees");
    sweep->add_option("--r", sweep_opt.r, "radius parameter")->required();
    sweep->add_option("--d", sweep_opt.d_range, "degree value or start:stop:step")
        ->required();
    sweep->add_flag("--regularize", sweep_opt.regularize, "use the regularized family");
    sweep->add_option("--threads", sweep_opt.threads, "worker cap (0 = auto)");
    sweep->add_option("--out", sweep_opt.out, "output file (default stdout)");

    DiagnoseOptions diagnose_opt;
    CLI::App* diagnose = app.add_subcommand(
        "diagnose-cube", "red/blue coloring diagnostics for a regular graph");
    diagnose->add_option("--in", diagnose_opt.in, "input edge list")->required();
    diagnose->add_option("--threads", diagnose_opt.threads, "worker cap (0 = auto)");
    diagnose->add_option("--out", diagnose_opt.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help/version exit 0; bad arguments exit 2
    }

    verify_opt.r_given = verify_r->count() > 0;

    if (gen->parsed()) return run_gen(gen_opt);
    if (power->parsed()) return run_power(power_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    if (sweep->parsed()) return run_sweep(sweep_opt);
    if (diagnose->parsed()) return run_diagnose(diagnose_opt);
    return usage_error("no subcommand given");
}
