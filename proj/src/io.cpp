#include "liftlab/io.hpp"

#include <fstream>
#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace liftlab {

Graph read_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("expected header line \"n m\"");
    if (n < 0 || m < 0) throw ParseError("negative counts in header");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::set<std::pair<int, int>> seen;
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw ParseError("expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint out of range on edge " + std::to_string(i));
        if (u == v) throw ParseError("self-loop on edge line " + std::to_string(i));
        const int lo = static_cast<int>(std::min(u, v));
        const int hi = static_cast<int>(std::max(u, v));
        if (!seen.insert({lo, hi}).second)
            throw ParseError("duplicate edge on line " + std::to_string(i));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_edge_list(out, g);
}

std::string format_tag(const VertexTag& tag) {
    std::ostringstream os;
    for (std::size_t i = 0; i < tag.top.size(); ++i) os << (i ? "," : "") << tag.top[i];
    os << "->";
    for (std::size_t i = 0; i < tag.bottom.size(); ++i) os << (i ? "," : "") << tag.bottom[i];
    return os.str();
}

void write_tag_file(std::ostream& out, const LiftGraph& lift) {
    for (std::size_t i = 0; i < lift.tags.size(); ++i)
        out << i << ' ' << format_tag(lift.tags[i]) << '\n';
}

void write_tag_file(const std::string& path, const LiftGraph& lift) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_tag_file(out, lift);
}

}  // namespace liftlab
