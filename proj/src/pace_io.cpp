#include "prodtw/pace_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace prodtw {

Graph read_gr(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ss(line);
        if (n < 0) {
            std::string p, tw;
            if (!(ss >> p >> tw >> n >> m) || p != "p" || tw != "tw" || n < 0 || m < 0)
                throw parse_error(line_no, "expected header 'p tw <n> <m>'");
            continue;
        }
        long long u, v;
        if (!(ss >> u >> v))
            throw parse_error(line_no, "expected edge line 'u v'");
        std::string extra;
        if (ss >> extra)
            throw parse_error(line_no, "trailing tokens after edge");
        if (u < 1 || v < 1 || u > n || v > n)
            throw parse_error(line_no, "vertex id out of range [1," + std::to_string(n) + "]");
        if (u == v)
            throw parse_error(line_no, "self-loop rejected");
        int a = static_cast<int>(u) - 1, b = static_cast<int>(v) - 1;
        if (a > b)
            std::swap(a, b);
        if (!seen.insert({a, b}).second)
            throw parse_error(line_no, "parallel edge rejected");
        edges.emplace_back(a, b);
    }
    if (n < 0)
        throw parse_error(line_no, "missing 'p tw' header");
    if (static_cast<long long>(edges.size()) != m)
        throw parse_error(line_no, "edge count mismatch: header says " + std::to_string(m) +
                                       ", found " + std::to_string(edges.size()));
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph read_gr_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_gr(in);
}

void write_gr(std::ostream& out, const Graph& g, const std::string& comment) {
    if (!comment.empty())
        out << "c " << comment << "\n";
    out << "p tw " << g.vertex_count() << ' ' << g.edge_count() << "\n";
    for (auto [u, v] : g.edges())
        out << u + 1 << ' ' << v + 1 << "\n";
}

void write_gr_file(const std::string& path, const Graph& g, const std::string& comment) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    write_gr(out, g, comment);
}

} // namespace prodtw
