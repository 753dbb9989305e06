#include <fstream>
#include <sstream>
#include <string>

#include "rgd/error.hpp"
#include "rgd/graph.hpp"

namespace rgd {

void write_graph(std::ostream& out, const RegularGraph& g, bool bipartite) {
    out << g.n() << ' ' << g.d();
    if (bipartite) out << " bipartite";
    out << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph(std::ostream& out, const BipartiteRegularGraph& g) {
    write_graph(out, g.graph(), true);
}

std::string to_text(const RegularGraph& g, bool bipartite) {
    std::ostringstream out;
    write_graph(out, g, bipartite);
    return out.str();
}

ParsedGraph read_graph(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParameterError("graph file: missing header");
    std::istringstream header(line);
    long long n = -1, d = -1;
    std::string tag;
    if (!(header >> n >> d)) throw ParameterError("graph file: malformed header");
    bool bipartite = false;
    if (header >> tag) {
        if (tag != "bipartite") throw ParameterError("graph file: unknown header tag '" + tag + "'");
        bipartite = true;
    }
    if (header >> tag) throw ParameterError("graph file: trailing header tokens");
    if (n <= 0 || d <= 0 || n > 0xFFFFFFFFLL || d > 0xFFFFFFFFLL)
        throw ParameterError("graph file: n and d must be positive 32-bit values");

    std::vector<Edge> edges;
    long long u = 0, v = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        if (!(row >> u >> v) || (row >> tag)) throw ParameterError("graph file: malformed edge line");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParameterError("graph file: vertex out of range");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    RegularGraph g(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(d), std::move(edges));
    if (bipartite) (void)BipartiteRegularGraph(g);
    return {std::move(g), bipartite};
}

ParsedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open graph file " + path);
    return read_graph(in);
}

void write_graph_file(const std::string& path, const RegularGraph& g, bool bipartite) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParameterError("cannot write graph file " + path);
    write_graph(out, g, bipartite);
}

std::string canonical_hash(const RegularGraph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_text(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

} // namespace rgd
