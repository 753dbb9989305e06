#ifndef RGD_GRAPH_HPP
#define RGD_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rgd {

using Vertex = std::uint32_t;

/// Unordered pair stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge&) const = default;

    std::uint64_t key() const { return (std::uint64_t{u} << 32) | v; }
};

/// Simple d-regular labeled graph on vertices 0..n-1.
///
/// The edge list is canonical: every edge has u < v and the list is sorted
/// lexicographically. Two graphs are equal iff their edge lists are equal.
class RegularGraph {
public:
    /// Validates and canonicalizes. Throws ParameterError on any invariant
    /// violation (loop, duplicate, wrong degree, odd d*n, d >= n).
    RegularGraph(std::uint32_t n, std::uint32_t d, std::vector<Edge> edges);

    std::uint32_t n() const { return n_; }
    std::uint32_t d() const { return d_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_edge(Vertex a, Vertex b) const;

    /// Neighbour lists, each sorted ascending.
    std::vector<std::vector<Vertex>> adjacency_lists() const;

    bool operator==(const RegularGraph&) const = default;

private:
    std::uint32_t n_;
    std::uint32_t d_;
    std::vector<Edge> edges_;
};

/// d-regular graph whose vertices split into a left class {0..n/2-1} and a
/// right class {n/2..n-1}, with every edge crossing.
class BipartiteRegularGraph {
public:
    explicit BipartiteRegularGraph(RegularGraph g);
    BipartiteRegularGraph(std::uint32_t n, std::uint32_t d, std::vector<Edge> edges)
        : BipartiteRegularGraph(RegularGraph(n, d, std::move(edges))) {}

    const RegularGraph& graph() const { return g_; }
    operator const RegularGraph&() const { return g_; }

    std::uint32_t n() const { return g_.n(); }
    std::uint32_t d() const { return g_.d(); }
    std::uint32_t half() const { return g_.n() / 2; }
    const std::vector<Edge>& edges() const { return g_.edges(); }

    bool operator==(const BipartiteRegularGraph&) const = default;

private:
    RegularGraph g_;
};

struct EdgeOverlapReport {
    std::uint64_t shared = 0;
    std::uint64_t sym_diff = 0;
    std::uint64_t only_g = 0;
    std::uint64_t only_h = 0;
    double delta = 0.0; // only_g / |E(G)|
};

/// Uniform-ish random simple d-regular graph from the pairing model.
///
/// For d <= 5 the whole pairing is redrawn on any loop or multi-edge, which
/// samples exactly uniformly. For larger d full restarts are hopeless (the
/// acceptance probability is about exp(-(d^2-1)/4)), so stubs are paired in
/// rounds, rejecting only the offending pairs and restarting only when no valid
/// pair is left. Requires 1 <= d < n and d*n even.
RegularGraph random_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed);

/// Random simple d-regular bipartite graph on the fixed classes. Requires n
/// even and 1 <= d <= n/2. Same restart policy as random_regular, with the
/// exact-restart route used for d <= 4.
BipartiteRegularGraph random_bipartite_regular(std::uint32_t n, std::uint32_t d,
                                               std::uint64_t seed);

/// Applies `swaps` accepted 2-switches (a,b),(c,d) -> (a,d),(c,b).
///
/// A switch is accepted only if both new edges are absent, so every accepted
/// switch changes the edge set by exactly four edges relative to the graph it
/// is applied to. If 10^4 consecutive proposals are rejected the valid switches
/// are enumerated and one is drawn uniformly; if none exists the graph admits
/// no switch and is returned as is.
RegularGraph perturb_edges(const RegularGraph& g, std::uint64_t swaps, std::uint64_t seed);
/// Bipartite version: switches keep every edge crossing.
BipartiteRegularGraph perturb_edges(const BipartiteRegularGraph& g, std::uint64_t swaps,
                                    std::uint64_t seed);

/// Tensor product with K2: vertex v maps to v (left) and n+v (right).
BipartiteRegularGraph bipartite_double_cover(const RegularGraph& g);

/// Throws ParameterError on mismatched n.
EdgeOverlapReport edge_overlap(const RegularGraph& g, const RegularGraph& h);

bool is_connected(const RegularGraph& g);

RegularGraph complete_graph(std::uint32_t n);
RegularGraph cycle_graph(std::uint32_t n);

// Text format: first line "n d" or "n d bipartite", then one "u v" per line in
// canonical order.
void write_graph(std::ostream& out, const RegularGraph& g, bool bipartite = false);
void write_graph(std::ostream& out, const BipartiteRegularGraph& g);
std::string to_text(const RegularGraph& g, bool bipartite = false);

struct ParsedGraph {
    RegularGraph graph;
    bool bipartite = false;
};

/// Throws ParameterError on malformed input or invariant violation. A header
/// marked bipartite is also checked against the bipartition.
ParsedGraph read_graph(std::istream& in);
ParsedGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const RegularGraph& g, bool bipartite = false);

/// FNV-1a 64 of the text form, as 16 hex digits.
std::string canonical_hash(const RegularGraph& g);

} // namespace rgd

#endif // RGD_GRAPH_HPP
