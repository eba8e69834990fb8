#include "edgelist.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "errors.hpp"

namespace gp {

namespace {

// Loader guards: a hostile header must not make us allocate the world.
constexpr long long kMaxVertices = 10'000'000;
constexpr long long kMaxEdges = 100'000'000;

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) fields.push_back(tok);
    return fields;
}

long long parse_int(const std::string& tok, const std::string& source, int line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(source, line_no, "bad integer '" + tok + "'");
    }
    return value;
}

std::string pair_str(long long u, long long v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

LoadedGraph parse_edge_list(const std::string& text, const std::string& source_name) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    bool have_header = false;
    bool directed = false;
    long long n = 0, m = 0;
    std::vector<std::pair<int, int>> pairs;
    std::unordered_set<long long> seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            throw ParseError(source_name, line_no,
                             "carriage return found; LF line endings required");
        }
        if (!line.empty() && line[0] == '#') continue;

        std::vector<std::string> fields = split_fields(line);
        if (fields.empty()) {
            throw ParseError(source_name, line_no, "blank line not allowed");
        }

        if (!have_header) {
            if (fields.size() != 3 || (fields[0] != "U" && fields[0] != "D")) {
                throw ParseError(source_name, line_no,
                                 "expected header 'U n m' or 'D n m'");
            }
            directed = (fields[0] == "D");
            n = parse_int(fields[1], source_name, line_no);
            m = parse_int(fields[2], source_name, line_no);
            if (n < 1) throw ParseError(source_name, line_no, "vertex count must be >= 1");
            if (m < 0) throw ParseError(source_name, line_no, "edge count must be >= 0");
            if (n > kMaxVertices) {
                throw ParseError(source_name, line_no,
                                 "vertex count " + std::to_string(n) + " exceeds loader cap");
            }
            if (m > kMaxEdges) {
                throw ParseError(source_name, line_no,
                                 "edge count " + std::to_string(m) + " exceeds loader cap");
            }
            have_header = true;
            pairs.reserve(static_cast<size_t>(m));
            continue;
        }

        if (static_cast<long long>(pairs.size()) == m) {
            throw ParseError(source_name, line_no,
                             "unexpected line after " + std::to_string(m) + " edges");
        }
        if (fields.size() != 2) {
            throw ParseError(source_name, line_no, "expected edge line 'u v'");
        }
        long long u = parse_int(fields[0], source_name, line_no);
        long long v = parse_int(fields[1], source_name, line_no);
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ParseError(source_name, line_no,
                             (directed ? "arc " : "edge ") + pair_str(u, v) +
                                 " out of range [0," + std::to_string(n) + ")");
        }
        if (u == v) {
            throw ParseError(source_name, line_no,
                             "self-loop " + pair_str(u, v) + " not allowed");
        }
        if (!directed && u > v) {
            throw ParseError(source_name, line_no,
                             "edge " + pair_str(u, v) + " must satisfy u < v");
        }
        long long key = u * n + v;
        if (!seen.insert(key).second) {
            throw ParseError(source_name, line_no,
                             (directed ? "duplicate arc " : "duplicate edge ") + pair_str(u, v));
        }
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }

    if (!have_header) {
        throw ParseError(source_name, line_no, "missing header line");
    }
    if (static_cast<long long>(pairs.size()) != m) {
        throw ParseError(source_name, line_no,
                         "unexpected end of file: expected " + std::to_string(m) +
                             " edge lines, found " + std::to_string(pairs.size()));
    }

    LoadedGraph out;
    if (directed) {
        out.digraph = Digraph::from_arcs(static_cast<int>(n), pairs);
    } else {
        out.graph = Graph::from_edges(static_cast<int>(n), pairs);
    }
    return out;
}

LoadedGraph load_edge_list(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    return parse_edge_list(buf.str(), path);
}

namespace {

void append_comments(std::string& out, const std::vector<std::string>& comments) {
    for (const auto& c : comments) {
        if (c.find('\n') != std::string::npos) {
            throw std::invalid_argument("comment must not contain newlines");
        }
        out += "#";
        if (!c.empty()) {
            out += " ";
            out += c;
        }
        out += "\n";
    }
}

template <class Pairs>
void append_pairs(std::string& out, const Pairs& pairs) {
    for (auto [u, v] : pairs) {
        out += std::to_string(u);
        out += " ";
        out += std::to_string(v);
        out += "\n";
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("cannot write " + path);
}

}  // namespace

std::string format_edge_list(const Graph& g, const std::vector<std::string>& comments) {
    std::string out;
    append_comments(out, comments);
    out += "U " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    append_pairs(out, g.edges());
    return out;
}

std::string format_edge_list(const Digraph& d, const std::vector<std::string>& comments) {
    std::string out;
    append_comments(out, comments);
    out += "D " + std::to_string(d.order()) + " " + std::to_string(d.size()) + "\n";
    append_pairs(out, d.arcs());
    return out;
}

void write_edge_list(const std::string& path, const Graph& g,
                     const std::vector<std::string>& comments) {
    write_text(path, format_edge_list(g, comments));
}

void write_edge_list(const std::string& path, const Digraph& d,
                     const std::vector<std::string>& comments) {
    write_text(path, format_edge_list(d, comments));
}

}  // namespace gp
