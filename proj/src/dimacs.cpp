#include "vcalp/dimacs.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "vcalp/errors.hpp"

namespace vcalp::dimacs {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

long long read_index(std::istringstream& iss, std::size_t line, const char* what) {
    long long value = 0;
    if (!(iss >> value)) fail(line, std::string("expected ") + what);
    return value;
}

}  // namespace

Graph read(std::istream& in) {
    Graph g;
    bool have_header = false;
    std::size_t n = 0;
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        std::istringstream iss(line);
        std::string tag;
        if (!(iss >> tag) || tag == "c") continue;
        if (tag == "p") {
            if (have_header) fail(line_no, "second problem line");
            std::string format;
            iss >> format;
            if (format != "edge" && format != "edges" && format != "col") {
                fail(line_no, "unsupported problem format '" + format + "'");
            }
            long long nv = read_index(iss, line_no, "vertex count");
            long long ne = read_index(iss, line_no, "edge count");
            if (nv < 0 || ne < 0) fail(line_no, "negative count in problem line");
            n = static_cast<std::size_t>(nv);
            g = Graph(n);
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) fail(line_no, "edge before problem line");
            long long a = read_index(iss, line_no, "edge endpoint");
            long long b = read_index(iss, line_no, "edge endpoint");
            if (a < 1 || b < 1 || static_cast<std::size_t>(a) > n ||
                static_cast<std::size_t>(b) > n) {
                fail(line_no, "endpoint outside 1.." + std::to_string(n));
            }
            if (a == b) fail(line_no, "self-loop on vertex " + std::to_string(a));
            g.add_edge(VertexId{static_cast<std::uint32_t>(a - 1)},
                       VertexId{static_cast<std::uint32_t>(b - 1)});
        } else {
            fail(line_no, "unknown line type '" + tag + "'");
        }
    }
    if (!have_header) throw ParseError("missing 'p edge' problem line");
    return g;
}

Graph load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return read(in);
}

void write(std::ostream& out, const Graph& g) {
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) {
        out << "e " << g.index_of(e.u) + 1 << ' ' << g.index_of(e.v) + 1 << '\n';
    }
}

void save(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string());
    write(out, g);
}

std::size_t external_label(const Graph& g, VertexId v) { return g.index_of(v) + 1; }

}  // namespace vcalp::dimacs
