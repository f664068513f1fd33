#include "mmfvs/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mmfvs {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

} // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long n = 0, m = 0, seen_edges = 0;
    Graph g;
    std::set<std::pair<long long, long long>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag))
            continue; // blank line
        if (tag == "c")
            continue;
        if (tag == "p") {
            if (have_header)
                fail(lineno, "duplicate header");
            std::string fmt;
            std::string trailing;
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0 ||
                (ls >> trailing))
                fail(lineno, "malformed header");
            have_header = true;
            for (long long i = 0; i < n; ++i)
                g.add_vertex();
            continue;
        }
        if (tag == "e") {
            if (!have_header)
                fail(lineno, "edge before header");
            long long u, v;
            std::string trailing;
            if (!(ls >> u >> v) || (ls >> trailing))
                fail(lineno, "malformed edge");
            if (u < 1 || u > n || v < 1 || v > n)
                fail(lineno, "endpoint out of range");
            if (u == v)
                fail(lineno, "self-loop");
            auto key = std::minmax(u, v);
            if (!seen.insert({key.first, key.second}).second)
                fail(lineno, "duplicate edge");
            g.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
            ++seen_edges;
            continue;
        }
        fail(lineno, "unknown line type '" + tag + "'");
    }
    if (!have_header)
        fail(lineno, "missing header");
    if (seen_edges != m)
        fail(lineno, "edge count mismatch");
    return g;
}

std::string serialize_graph(const Graph& g, const std::vector<std::string>& comments) {
    // Serialization assumes the contiguous 0-based id space produced by
    // the parser and the generators.
    std::ostringstream out;
    for (const std::string& c : comments)
        out << "c " << c << "\n";
    auto es = g.edges();
    out << "p edge " << g.num_vertices() << " " << es.size() << "\n";
    for (auto [u, v] : es)
        out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

VertexSet parse_solution(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    VertexSet s;
    const long long n = static_cast<long long>(g.num_vertices());
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        long long id;
        if (!(ls >> id))
            continue;
        std::string trailing;
        if (ls >> trailing)
            fail(lineno, "malformed solution line");
        if (id < 1 || id > n)
            fail(lineno, "vertex id out of range");
        s.insert(static_cast<VertexId>(id - 1));
    }
    return s;
}

std::string serialize_solution(const VertexSet& s) {
    std::ostringstream out;
    for (VertexId x : s)
        out << x + 1 << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << content;
}

} // namespace mmfvs
