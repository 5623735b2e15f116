#include "outersq/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace outersq {

namespace {

// Next line with comments stripped that still has content; false at EOF.
bool next_content_line(std::istream& in, std::string& line, int& lineno, char comment) {
    while (std::getline(in, line)) {
        ++lineno;
        if (comment == '#') {
            auto pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
        } else {
            auto first = line.find_first_not_of(" \t\r");
            if (first != std::string::npos && line[first] == comment) continue;
        }
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

[[noreturn]] void parse_fail(int lineno, const std::string& what) {
    throw InvalidInput("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "edgelist") return Format::EdgeList;
    if (name == "dimacs") return Format::Dimacs;
    throw InvalidInput("unknown format '" + name + "' (expected edgelist or dimacs)");
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno, '#')) throw InvalidInput("empty edge list");
    std::istringstream hdr(line);
    int n = -1, m = -1;
    if (!(hdr >> n >> m) || n < 0 || m < 0) parse_fail(lineno, "expected header 'n m'");
    std::vector<Edge> edges;
    while (static_cast<int>(edges.size()) < m) {
        if (!next_content_line(in, line, lineno, '#'))
            throw InvalidInput("expected " + std::to_string(m) + " edges, found " +
                               std::to_string(edges.size()));
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) parse_fail(lineno, "expected 'u v'");
        edges.emplace_back(u, v);
    }
    return from_edge_list(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (next_content_line(in, line, lineno, 'c')) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string kind;
            int m;
            if (!(ls >> kind >> n >> m) || n < 0) parse_fail(lineno, "expected 'p edge n m'");
        } else if (tag == "e") {
            int u, v;
            if (n < 0) parse_fail(lineno, "edge before problem line");
            if (!(ls >> u >> v)) parse_fail(lineno, "expected 'e u v'");
            edges.emplace_back(u - 1, v - 1);
        } else {
            parse_fail(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw InvalidInput("missing DIMACS problem line");
    return from_edge_list(n, edges);
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_graph(std::istream& in, Format f) {
    return f == Format::Dimacs ? read_dimacs(in) : read_edge_list(in);
}

Graph read_graph_file(const std::string& path, Format f) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    return read_graph(in, f);
}

void write_graph(std::ostream& out, const Graph& g, Format f) {
    if (f == Format::Dimacs)
        write_dimacs(out, g);
    else
        write_edge_list(out, g);
}

}  // namespace outersq
