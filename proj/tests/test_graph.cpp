#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"

#include "rgd/error.hpp"
#include "rgd/graph.hpp"

using namespace rgd;

namespace {

// All labeled simple graphs on n vertices with every degree d, by brute force
// over edge subsets.
std::vector<std::vector<Edge>> brute_force_regular(std::uint32_t n, std::uint32_t d, bool bipartite) {
    std::vector<Edge> all;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!bipartite || (u < n / 2 && v >= n / 2)) all.push_back({u, v});
    std::vector<std::vector<Edge>> out;
    for (std::uint64_t mask = 0; mask < (1ULL << all.size()); ++mask) {
        std::vector<std::uint32_t> deg(n, 0);
        std::vector<Edge> chosen;
        for (std::size_t k = 0; k < all.size(); ++k)
            if (mask >> k & 1) {
                chosen.push_back(all[k]);
                ++deg[all[k].u];
                ++deg[all[k].v];
            }
        if (std::all_of(deg.begin(), deg.end(), [&](std::uint32_t x) { return x == d; })) out.push_back(chosen);
    }
    return out;
}

void check_invariants(const RegularGraph& g) {
    std::vector<std::uint32_t> deg(g.n(), 0);
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
        const Edge& e = g.edges()[k];
        REQUIRE(e.u < e.v);
        REQUIRE(e.v < g.n());
        if (k > 0) REQUIRE(g.edges()[k - 1] < e);
        ++deg[e.u];
        ++deg[e.v];
    }
    for (auto x : deg) REQUIRE(x == g.d());
    REQUIRE(g.edge_count() == std::size_t{g.n()} * g.d() / 2);
}

} // namespace

TEST_CASE("RegularGraph rejects invalid edge lists") {
    CHECK_THROWS_AS(RegularGraph(4, 1, {{0, 0}, {2, 3}}), ParameterError);
    CHECK_THROWS_AS(RegularGraph(4, 1, {{0, 1}, {1, 0}}), ParameterError);
    CHECK_THROWS_AS(RegularGraph(4, 1, {{0, 1}, {1, 2}}), ParameterError);
    CHECK_THROWS_AS(RegularGraph(3, 1, {{0, 1}}), ParameterError);
    CHECK_THROWS_AS(RegularGraph(3, 3, {}), ParameterError);
    CHECK_THROWS_AS(BipartiteRegularGraph(4, 1, {{0, 1}, {2, 3}}), ParameterError);
    RegularGraph g(4, 1, {{3, 2}, {1, 0}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
}

TEST_CASE("random_regular small cases") {
    SUBCASE("K4 is the only 3-regular graph on 4 vertices") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(random_regular(4, 3, seed) == complete_graph(4));
    }
    SUBCASE("2-regular graphs on 4 vertices are the three labeled 4-cycles") {
        const auto oracle = brute_force_regular(4, 2, false);
        REQUIRE(oracle.size() == 3);
        std::set<std::vector<Edge>> seen;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const RegularGraph g = random_regular(4, 2, seed);
            CHECK(std::find(oracle.begin(), oracle.end(), g.edges()) != oracle.end());
            seen.insert(g.edges());
        }
        CHECK(seen.size() == 3);
    }
    SUBCASE("determinism") {
        CHECK(random_regular(100, 3, 7) == random_regular(100, 3, 7));
        CHECK(random_regular(300, 10, 7) == random_regular(300, 10, 7));
        CHECK(!(random_regular(100, 3, 7) == random_regular(100, 3, 8)));
    }
    SUBCASE("parameter errors") {
        CHECK_THROWS_AS(random_regular(5, 3, 1), ParameterError);
        CHECK_THROWS_AS(random_regular(4, 4, 1), ParameterError);
        CHECK_THROWS_AS(random_regular(4, 0, 1), ParameterError);
    }
}

TEST_CASE("generator outputs satisfy the type invariants") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        check_invariants(random_regular(50, 3, seed));
        check_invariants(random_regular(51, 4, seed));
        check_invariants(random_regular(300, 10, seed));
        check_invariants(random_regular(200, 32, seed));
        const auto b = random_bipartite_regular(200, 8, seed);
        check_invariants(b);
        for (const Edge& e : b.edges()) CHECK((e.u < 100 && e.v >= 100));
    }
}

TEST_CASE("random_bipartite_regular small cases") {
    CHECK(random_bipartite_regular(2, 1, 5).edges() == std::vector<Edge>{{0, 1}});
    const auto oracle = brute_force_regular(4, 2, true);
    REQUIRE(oracle.size() == 1);
    CHECK(oracle[0] == std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(random_bipartite_regular(4, 2, seed).edges() == oracle[0]);
    CHECK(random_bipartite_regular(40, 20, 3) == random_bipartite_regular(40, 20, 3));
    CHECK_THROWS_AS(random_bipartite_regular(5, 1, 1), ParameterError);
    CHECK_THROWS_AS(random_bipartite_regular(6, 4, 1), ParameterError);
}

TEST_CASE("perturb_edges") {
    const RegularGraph g = random_regular(60, 4, 11);
    CHECK(perturb_edges(g, 0, 3) == g);
    for (std::uint64_t seed = 0; seed < 30; ++seed) CHECK(edge_overlap(g, perturb_edges(g, 1, seed)).sym_diff == 4);
    for (std::uint64_t s : {2, 5, 17, 80}) {
        const RegularGraph h = perturb_edges(g, s, 99);
        check_invariants(h);
        CHECK(edge_overlap(g, h).sym_diff <= 4 * s);
    }
    CHECK(perturb_edges(g, 25, 4) == perturb_edges(g, 25, 4));

    SUBCASE("K4 admits no switch") { CHECK(perturb_edges(complete_graph(4), 5, 1) == complete_graph(4)); }

    SUBCASE("bipartite switches keep the bipartition") {
        const auto b = random_bipartite_regular(40, 5, 2);
        for (std::uint64_t s : {1, 3, 40}) {
            const BipartiteRegularGraph h = perturb_edges(b, s, 8);
            check_invariants(h);
            if (s == 1) CHECK(edge_overlap(b, h).sym_diff == 4);
            CHECK(edge_overlap(b, h).sym_diff <= 4 * s);
        }
        const auto full = random_bipartite_regular(8, 4, 1);
        CHECK(perturb_edges(full, 3, 1) == full);
    }
}

TEST_CASE("bipartite_double_cover") {
    const RegularGraph edge(2, 1, {{0, 1}});
    CHECK(bipartite_double_cover(edge).edges() == std::vector<Edge>{{0, 3}, {1, 2}});

    const auto c6 = bipartite_double_cover(cycle_graph(3));
    CHECK(c6.n() == 6);
    CHECK(c6.d() == 2);
    CHECK(is_connected(c6));

    std::set<std::vector<Edge>> covers;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const RegularGraph g = random_regular(10, 3, seed);
        const auto cover = bipartite_double_cover(g);
        CHECK(cover.edges().size() == 2 * g.edges().size());
        check_invariants(cover);
        covers.insert(cover.edges());
    }
    std::set<std::vector<Edge>> bases;
    for (std::uint64_t seed = 0; seed < 40; ++seed) bases.insert(random_regular(10, 3, seed).edges());
    CHECK(covers.size() == bases.size());
    // K4 is connected and not bipartite: its cover is connected.
    CHECK(is_connected(bipartite_double_cover(complete_graph(4))));
}

TEST_CASE("edge_overlap") {
    const RegularGraph g = random_regular(30, 3, 1);
    const auto self = edge_overlap(g, g);
    CHECK(self.shared == 45);
    CHECK(self.sym_diff == 0);
    CHECK(self.delta == 0.0);

    const RegularGraph a(4, 1, {{0, 1}, {2, 3}});
    const RegularGraph b(4, 1, {{0, 2}, {1, 3}});
    const auto r = edge_overlap(a, b);
    CHECK(r.shared == 0);
    CHECK(r.sym_diff == 4);
    CHECK(r.delta == 1.0);

    const RegularGraph h = perturb_edges(g, 6, 2);
    const auto gh = edge_overlap(g, h), hg = edge_overlap(h, g);
    CHECK(gh.shared == hg.shared);
    CHECK(gh.sym_diff == hg.sym_diff);
    CHECK(gh.only_g == hg.only_h);
    CHECK(gh.shared + gh.only_g == 45);
    CHECK(gh.shared + gh.only_h == 45);
    CHECK_THROWS_AS(edge_overlap(g, complete_graph(4)), ParameterError);
}

TEST_CASE("graph text format") {
    const RegularGraph g = random_regular(20, 3, 4);
    const std::string text = to_text(g);
    std::istringstream in(text);
    const ParsedGraph parsed = read_graph(in);
    CHECK(parsed.graph == g);
    CHECK(!parsed.bipartite);
    CHECK(to_text(parsed.graph) == text);

    const auto b = random_bipartite_regular(12, 3, 4);
    std::ostringstream out;
    write_graph(out, b);
    CHECK(out.str().rfind("12 3 bipartite\n", 0) == 0);
    std::istringstream bin(out.str());
    const ParsedGraph pb = read_graph(bin);
    CHECK(pb.bipartite);
    CHECK(pb.graph == b.graph());

    std::istringstream bad_tag("4 3 weird\n");
    CHECK_THROWS_AS(read_graph(bad_tag), ParameterError);
    std::istringstream bad_degree("4 1\n0 1\n0 2\n");
    CHECK_THROWS_AS(read_graph(bad_degree), ParameterError);
    std::istringstream not_bipartite("4 1 bipartite\n0 1\n2 3\n");
    CHECK_THROWS_AS(read_graph(not_bipartite), ParameterError);

    CHECK(canonical_hash(g) == canonical_hash(random_regular(20, 3, 4)));
    CHECK(canonical_hash(g).size() == 16);
}
