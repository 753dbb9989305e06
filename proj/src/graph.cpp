#include "rgd/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_set>

#include "rgd/error.hpp"
#include "rgd/rng.hpp"

namespace rgd {

namespace {

constexpr std::uint64_t kRestartBudget = 1'000'000;
constexpr std::uint64_t kSwitchAttempts = 10'000;

// Largest degree for which the full-restart pairing model is used.
constexpr std::uint32_t kExactPairingMaxDegree = 5;
constexpr std::uint32_t kExactBipartiteMaxDegree = 4;

Edge make_edge(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

using KeySet = std::unordered_set<std::uint64_t>;

// True when some pair of distinct leftover stub owners is not yet joined.
bool leftover_pairable(const std::vector<Vertex>& stubs, const KeySet& keys) {
    std::vector<Vertex> owners(stubs);
    std::sort(owners.begin(), owners.end());
    owners.erase(std::unique(owners.begin(), owners.end()), owners.end());
    for (std::size_t i = 0; i < owners.size(); ++i)
        for (std::size_t j = i + 1; j < owners.size(); ++j)
            if (!keys.contains(Edge{owners[i], owners[j]}.key())) return true;
    return false;
}

bool leftover_pairable(const std::vector<Vertex>& left, const std::vector<Vertex>& right,
                       const KeySet& keys) {
    std::vector<Vertex> l(left), r(right);
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    for (Vertex a : l)
        for (Vertex b : r)
            if (!keys.contains(Edge{a, b}.key())) return true;
    return false;
}

std::vector<Vertex> stub_list(Vertex first, Vertex last, std::uint32_t d) {
    std::vector<Vertex> stubs;
    stubs.reserve(static_cast<std::size_t>(last - first) * d);
    for (Vertex v = first; v < last; ++v)
        for (std::uint32_t k = 0; k < d; ++k) stubs.push_back(v);
    return stubs;
}

std::vector<Edge> exact_pairing(std::uint32_t n, std::uint32_t d, Rng& rng) {
    std::vector<Vertex> stubs = stub_list(0, n, d);
    std::vector<Edge> edges;
    KeySet keys;
    for (std::uint64_t restart = 0; restart < kRestartBudget; ++restart) {
        rng.shuffle(std::span<Vertex>(stubs));
        edges.clear();
        keys.clear();
        bool simple = true;
        for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
            if (stubs[k] == stubs[k + 1]) { simple = false; break; }
            Edge e = make_edge(stubs[k], stubs[k + 1]);
            if (!keys.insert(e.key()).second) { simple = false; break; }
            edges.push_back(e);
        }
        if (simple) return edges;
    }
    throw GenerationError("random_regular: restart budget exceeded");
}

std::vector<Edge> rejection_pairing(std::uint32_t n, std::uint32_t d, Rng& rng) {
    std::vector<Edge> edges;
    KeySet keys;
    for (std::uint64_t restart = 0; restart < kRestartBudget; ++restart) {
        edges.clear();
        keys.clear();
        std::vector<Vertex> stubs = stub_list(0, n, d);
        bool stuck = false;
        while (!stubs.empty()) {
            rng.shuffle(std::span<Vertex>(stubs));
            std::vector<Vertex> leftover;
            for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
                Vertex a = stubs[k], b = stubs[k + 1];
                if (a != b && keys.insert(make_edge(a, b).key()).second) {
                    edges.push_back(make_edge(a, b));
                } else {
                    leftover.push_back(a);
                    leftover.push_back(b);
                }
            }
            if (!leftover.empty() && !leftover_pairable(leftover, keys)) {
                stuck = true;
                break;
            }
            stubs = std::move(leftover);
        }
        if (!stuck) return edges;
    }
    throw GenerationError("random_regular: restart budget exceeded");
}

std::vector<Edge> bipartite_pairing(std::uint32_t n, std::uint32_t d, Rng& rng) {
    const Vertex half = n / 2;
    const bool exact = d <= kExactBipartiteMaxDegree;
    std::vector<Edge> edges;
    KeySet keys;
    for (std::uint64_t restart = 0; restart < kRestartBudget; ++restart) {
        edges.clear();
        keys.clear();
        std::vector<Vertex> left = stub_list(0, half, d);
        std::vector<Vertex> right = stub_list(half, n, d);
        bool failed = false;
        while (!left.empty()) {
            rng.shuffle(std::span<Vertex>(right));
            std::vector<Vertex> left_over, right_over;
            for (std::size_t k = 0; k < left.size(); ++k) {
                Edge e{left[k], right[k]};
                if (keys.insert(e.key()).second) {
                    edges.push_back(e);
                } else {
                    left_over.push_back(left[k]);
                    right_over.push_back(right[k]);
                }
            }
            if (!left_over.empty() && (exact || !leftover_pairable(left_over, right_over, keys))) {
                failed = true;
                break;
            }
            left = std::move(left_over);
            right = std::move(right_over);
        }
        if (!failed) return edges;
    }
    throw GenerationError("random_bipartite_regular: restart budget exceeded");
}

template <bool Bipartite>
std::vector<Edge> apply_switches(const RegularGraph& g, std::uint64_t swaps, std::uint64_t seed) {
    std::vector<Edge> edges = g.edges();
    const std::size_t m = edges.size();
    KeySet keys;
    for (const Edge& e : edges) keys.insert(e.key());
    Rng rng(seed);

    // Replaces edges[i] = (a,b) and edges[j] = (c,dd) with (a,dd), (c,b).
    auto valid = [&](std::size_t i, std::size_t j, bool flip, Edge& n1, Edge& n2) {
        if (i == j) return false;
        Vertex a = edges[i].u, b = edges[i].v, c = edges[j].u, dd = edges[j].v;
        if (flip) std::swap(c, dd);
        if (a == dd || c == b) return false;
        n1 = make_edge(a, dd);
        n2 = make_edge(c, b);
        if (n1 == n2) return false;
        return !keys.contains(n1.key()) && !keys.contains(n2.key());
    };
    auto commit = [&](std::size_t i, std::size_t j, Edge n1, Edge n2) {
        keys.erase(edges[i].key());
        keys.erase(edges[j].key());
        keys.insert(n1.key());
        keys.insert(n2.key());
        edges[i] = n1;
        edges[j] = n2;
    };

    for (std::uint64_t s = 0; s < swaps; ++s) {
        bool done = false;
        for (std::uint64_t attempt = 0; attempt < kSwitchAttempts && m >= 2; ++attempt) {
            std::size_t i = rng.uniform_below(m);
            std::size_t j = rng.uniform_below(m);
            bool flip = Bipartite ? false : rng.uniform_below(2) == 1;
            Edge n1, n2;
            if (valid(i, j, flip, n1, n2)) {
                commit(i, j, n1, n2);
                done = true;
                break;
            }
        }
        if (done) continue;

        struct Candidate { std::size_t i, j; bool flip; };
        std::vector<Candidate> candidates;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                for (int f = 0; f < (Bipartite ? 1 : 2); ++f) {
                    Edge n1, n2;
                    if (valid(i, j, f == 1, n1, n2)) candidates.push_back({i, j, f == 1});
                }
        if (candidates.empty()) break;
        const Candidate& pick = candidates[rng.uniform_below(candidates.size())];
        Edge n1, n2;
        valid(pick.i, pick.j, pick.flip, n1, n2);
        commit(pick.i, pick.j, n1, n2);
    }
    return edges;
}

} // namespace

RegularGraph::RegularGraph(std::uint32_t n, std::uint32_t d, std::vector<Edge> edges)
    : n_(n), d_(d), edges_(std::move(edges)) {
    if (n == 0 || d == 0) throw ParameterError("regular graph needs n >= 1 and d >= 1");
    if (d >= n) throw ParameterError("regular graph needs d < n");
    if ((std::uint64_t{n} * d) % 2 != 0) throw ParameterError("regular graph needs d*n even");
    for (Edge& e : edges_) {
        if (e.u >= n || e.v >= n) throw ParameterError("edge endpoint out of range");
        if (e.u == e.v) throw ParameterError("self-loop in edge list");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw ParameterError("duplicate edge in edge list");
    if (edges_.size() != std::uint64_t{n} * d / 2)
        throw ParameterError("edge count is not d*n/2");
    std::vector<std::uint32_t> degree(n, 0);
    for (const Edge& e : edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    for (std::uint32_t deg : degree)
        if (deg != d) throw ParameterError("vertex degree differs from d");
}

bool RegularGraph::has_edge(Vertex a, Vertex b) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

std::vector<std::vector<Vertex>> RegularGraph::adjacency_lists() const {
    std::vector<std::vector<Vertex>> adj(n_);
    for (auto& list : adj) list.reserve(d_);
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

BipartiteRegularGraph::BipartiteRegularGraph(RegularGraph g) : g_(std::move(g)) {
    if (g_.n() % 2 != 0) throw ParameterError("bipartite graph needs n even");
    const Vertex half = g_.n() / 2;
    for (const Edge& e : g_.edges())
        if (!(e.u < half && e.v >= half))
            throw ParameterError("edge does not cross the bipartition");
}

RegularGraph random_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
    if (d == 0 || d >= n) throw ParameterError("random_regular needs 1 <= d < n");
    if ((std::uint64_t{n} * d) % 2 != 0) throw ParameterError("random_regular needs d*n even");
    Rng rng(seed);
    std::vector<Edge> edges = d <= kExactPairingMaxDegree ? exact_pairing(n, d, rng)
                                                          : rejection_pairing(n, d, rng);
    return RegularGraph(n, d, std::move(edges));
}

BipartiteRegularGraph random_bipartite_regular(std::uint32_t n, std::uint32_t d,
                                               std::uint64_t seed) {
    if (n == 0 || n % 2 != 0) throw ParameterError("random_bipartite_regular needs n even");
    if (d == 0 || d > n / 2) throw ParameterError("random_bipartite_regular needs 1 <= d <= n/2");
    Rng rng(seed);
    return BipartiteRegularGraph(n, d, bipartite_pairing(n, d, rng));
}

RegularGraph perturb_edges(const RegularGraph& g, std::uint64_t swaps, std::uint64_t seed) {
    if (swaps == 0) return g;
    return RegularGraph(g.n(), g.d(), apply_switches<false>(g, swaps, seed));
}

BipartiteRegularGraph perturb_edges(const BipartiteRegularGraph& g, std::uint64_t swaps,
                                    std::uint64_t seed) {
    if (swaps == 0) return g;
    return BipartiteRegularGraph(g.n(), g.d(), apply_switches<true>(g.graph(), swaps, seed));
}

BipartiteRegularGraph bipartite_double_cover(const RegularGraph& g) {
    const Vertex n = g.n();
    std::vector<Edge> edges;
    edges.reserve(2 * g.edge_count());
    for (const Edge& e : g.edges()) {
        edges.push_back({e.u, n + e.v});
        edges.push_back({e.v, n + e.u});
    }
    return BipartiteRegularGraph(2 * n, g.d(), std::move(edges));
}

EdgeOverlapReport edge_overlap(const RegularGraph& g, const RegularGraph& h) {
    if (g.n() != h.n()) throw ParameterError("edge_overlap: graphs have different n");
    const auto& a = g.edges();
    const auto& b = h.edges();
    EdgeOverlapReport r;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++r.shared;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    r.only_g = a.size() - r.shared;
    r.only_h = b.size() - r.shared;
    r.sym_diff = r.only_g + r.only_h;
    r.delta = a.empty() ? 0.0 : static_cast<double>(r.only_g) / static_cast<double>(a.size());
    return r;
}

bool is_connected(const RegularGraph& g) {
    const auto adj = g.adjacency_lists();
    std::vector<char> seen(g.n(), 0);
    std::queue<Vertex> frontier;
    frontier.push(0);
    seen[0] = 1;
    std::uint32_t reached = 1;
    while (!frontier.empty()) {
        Vertex v = frontier.front();
        frontier.pop();
        for (Vertex w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                frontier.push(w);
            }
        }
    }
    return reached == g.n();
}

RegularGraph complete_graph(std::uint32_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    return RegularGraph(n, n - 1, std::move(edges));
}

RegularGraph cycle_graph(std::uint32_t n) {
    if (n < 3) throw ParameterError("cycle_graph needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
    return RegularGraph(n, 2, std::move(edges));
}

} // namespace rgd
