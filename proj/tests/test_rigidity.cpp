#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"

#include "rgd/approx.hpp"
#include "rgd/error.hpp"
#include "rgd/linalg.hpp"
#include "rgd/rigidity.hpp"

using namespace rgd;

namespace {

const BipartiteRegularGraph kMatchingG(4, 1, {{0, 2}, {1, 3}});
const BipartiteRegularGraph kMatchingH(4, 1, {{0, 3}, {1, 2}});

// Columns of I + (A_H - A_G)/sqrt(d), densely.
Eigen::MatrixXd dense_z(const RegularGraph& g, const RegularGraph& h) {
    const Eigen::MatrixXd m = adjacency(h).dense() - adjacency(g).dense();
    return Eigen::MatrixXd::Identity(g.n(), g.n()) + m / std::sqrt(static_cast<double>(g.d()));
}

std::int64_t best_gap_exhaustive(const RegularGraph& g, const RegularGraph& h) {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (std::uint64_t mask = 0; mask < (1ULL << g.n()); ++mask) {
        std::vector<int> x(g.n());
        for (Vertex v = 0; v < g.n(); ++v) x[v] = (mask >> v & 1) ? -1 : 1;
        best = std::max(best, cut_gap(g, h, x));
    }
    return best;
}

} // namespace

TEST_CASE("overlap bound formulas") {
    CHECK(spectral_overlap_bound(100, 10, 0.0) == 500.0);
    CHECK(spectral_overlap_bound(100, 10, std::sqrt(2.0 / 10)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(spectral_overlap_bound(100, 10, 0.1) == doctest::Approx(475.0));
    CHECK(spectral_overlap_bound(100, 10, 1.0) < 0.0);
    CHECK(cut_overlap_bound(100, 16, 0.0) == 800.0);
    CHECK(cut_overlap_bound(100, 16, 1.0 / 12.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cut_overlap_bound(400, 16, 0.02) == doctest::Approx(2432.0));
}

TEST_CASE("check_spectral_rigidity") {
    const RegularGraph g = random_regular(300, 10, 5);
    REQUIRE(is_connected(g));
    const RigidityReport self = check_spectral_rigidity(g, g);
    CHECK(self.satisfied);
    CHECK(self.overlap_observed == 1500);
    CHECK(self.epsilon_used == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(self.kind == RigidityKind::Spectral);

    for (std::uint64_t s : {1, 10, 100, 1000}) {
        const RegularGraph h = perturb_edges(g, s, s);
        if (!is_connected(h)) continue;
        const RigidityReport r = check_spectral_rigidity(g, h);
        CHECK(r.satisfied);
        CHECK(r.overlap_observed == edge_overlap(g, h).shared);
        if (r.epsilon_used >= std::sqrt(2.0 / 10)) CHECK(r.overlap_bound <= 0.0);
    }
}

TEST_CASE("check_cut_rigidity_exact") {
    const auto g = random_bipartite_regular(16, 3, 2);
    REQUIRE(is_connected(g));
    const RigidityReport self = check_cut_rigidity_exact(g, g);
    CHECK(self.satisfied);
    CHECK(self.epsilon_used == 0.0);
    CHECK(self.kind == RigidityKind::Cut);

    int checked = 0;
    for (std::uint64_t seed = 0; checked < 20; ++seed) {
        const auto h = perturb_edges(g, 1 + seed % 6, seed);
        if (!is_connected(h)) continue;
        const RigidityReport r = check_cut_rigidity_exact(g, h);
        CHECK(r.satisfied);
        // Contrapositive: an overlap below the bound at eps forces eps_hat > eps.
        for (double eps : {0.01, 0.05, 0.1}) {
            if (static_cast<double>(r.overlap_observed) < cut_overlap_bound(16, 3, eps)) CHECK(r.epsilon_used > eps);
        }
        ++checked;
    }
    CHECK_THROWS_AS(check_cut_rigidity_exact(random_bipartite_regular(26, 3, 1), random_bipartite_regular(26, 3, 2)),
                    ScaleError);
}

TEST_CASE("gram_vectors") {
    SUBCASE("identical graphs give the standard basis") {
        const auto g = random_bipartite_regular(20, 3, 1);
        const GramVectors gv = gram_vectors(g, g);
        CHECK(gv.diff_edges.empty());
        for (Vertex i = 0; i < 20; ++i) {
            REQUIRE(gv.y[i].size() == 1);
            CHECK(gv.y[i][0].first == i);
            CHECK(gv.y[i][0].second == 1.0);
        }
    }
    SUBCASE("swapped matchings have |z_i|^2 = 3") {
        const GramVectors gv = gram_vectors(kMatchingG, kMatchingH);
        for (double z : gv.z_norm_sq) CHECK(z == doctest::Approx(3.0));
        const Eigen::MatrixXd z = dense_z(kMatchingG, kMatchingH);
        for (Vertex i = 0; i < 4; ++i) CHECK(z.col(i).squaredNorm() == doctest::Approx(3.0));
    }
    SUBCASE("sign structure against a dense oracle") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const std::uint32_t d = 2 + seed % 4;
            const auto g = random_bipartite_regular(24, d, seed);
            const auto h = perturb_edges(g, 2 + 3 * seed, seed + 50);
            const Eigen::MatrixXd m = adjacency(h).dense() - adjacency(g).dense();
            const Eigen::MatrixXd z = dense_z(g, h);
            const GramVectors gv = gram_vectors(g, h);
            double total = 0.0;
            for (Vertex i = 0; i < 24; ++i) {
                CHECK(gv.z_norm_sq[i] == doctest::Approx(z.col(i).squaredNorm()).epsilon(1e-12));
                CHECK(z.col(i).squaredNorm() >= 1.0 - 1e-12);
                CHECK(z.col(i).squaredNorm() <= 3.0 + 1e-12);
                for (Vertex j = 0; j < 24; ++j) {
                    const double value = m(i, j) * z.col(i).dot(z.col(j));
                    const double expect = m(i, j) == 0.0 ? 0.0 : 2.0 / std::sqrt(static_cast<double>(d));
                    REQUIRE(value == doctest::Approx(expect).epsilon(1e-12));
                    total += value;
                    const double ydot = z.col(i).dot(z.col(j)) / (z.col(i).norm() * z.col(j).norm());
                    REQUIRE(gv.inner(i, j) == doctest::Approx(ydot).epsilon(1e-12));
                }
            }
            const double sym_diff = static_cast<double>(edge_overlap(g, h).sym_diff);
            CHECK(total == doctest::Approx(4.0 / std::sqrt(static_cast<double>(d)) * sym_diff));
        }
    }
}

TEST_CASE("gram_lower_bound") {
    const auto g = random_bipartite_regular(30, 4, 7);
    CHECK(gram_lower_bound(g, g) == 0.0);
    // Eight ordered difference pairs, each contributing (2/sqrt(1)) / 3.
    CHECK(gram_lower_bound(kMatchingG, kMatchingH) == doctest::Approx(16.0 / 3.0));
    CHECK(gram_bound_formula(4, 1, 1.0) == doctest::Approx(16.0 / 3.0));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::uint32_t d = 1 + seed % 8;
        const auto a = random_bipartite_regular(40, d, seed);
        const auto b = perturb_edges(a, 1 + seed, seed * 3 + 1);
        const double delta = edge_overlap(a, b).delta;
        const double value = gram_lower_bound(a, b);
        CHECK(value >= 4.0 * delta * std::sqrt(static_cast<double>(d)) * 40 / 3.0 - 1e-9);
    }
}

TEST_CASE("rounding_expectation") {
    const auto g = random_bipartite_regular(30, 4, 7);
    CHECK(rounding_expectation(g, g) == 0.0);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto a = random_bipartite_regular(32, 4, seed);
        const auto b = perturb_edges(a, 5 + seed, seed);
        const GramVectors gv = gram_vectors(a, b);
        CHECK(rounding_expectation(gv) >= 2.0 / std::numbers::pi * gram_value(gv));
    }
    const auto a = random_bipartite_regular(32, 4, 3);
    const GramVectors gv = gram_vectors(a, perturb_edges(a, 20, 1));
    const RoundingStats stats = monte_carlo_rounding(gv, 20000, 9);
    CHECK(std::abs(stats.mean - rounding_expectation(gv)) <= 4.0 * stats.std_error());
}

TEST_CASE("witness_cut") {
    SUBCASE("identical graphs give no witness") {
        const auto g = random_bipartite_regular(20, 3, 2);
        const WitnessCut w = witness_cut(g, g, 0.1, 50, 1);
        CHECK(w.gap == 0);
        CHECK(!w.success);
        CHECK(!w.first_success_trial);
        CHECK(w.trials_used == 50);
    }
    SUBCASE("swapped matchings") {
        CHECK(best_gap_exhaustive(kMatchingG, kMatchingH) == 8);
        const WitnessCut w = witness_cut(kMatchingG, kMatchingH, 0.1, 100, 3);
        CHECK(w.success);
        CHECK(w.gap == 8);
        CHECK(w.lhs_form == 8);
        REQUIRE(w.first_success_trial);
        CHECK(*w.first_success_trial < 100);
    }
    SUBCASE("gap bookkeeping") {
        const auto g = random_bipartite_regular(60, 5, 4);
        const auto h = perturb_edges(g, 40, 4);
        const WitnessCut w = witness_cut(g, h, 0.05, 200, 8);
        const WitnessCut again = witness_cut(g, h, 0.05, 200, 8);
        CHECK(w.x == again.x);
        CHECK(w.best_trial == again.best_trial);
        std::vector<double> xd(w.x.begin(), w.x.end());
        const double dense = quadratic_form(laplacian(g) - laplacian(h), xd);
        CHECK(static_cast<double>(w.gap) == dense);
        CHECK(static_cast<double>(w.lhs_form) == quadratic_form(laplacian(g), xd));
        std::vector<int> flipped(w.x);
        for (int& v : flipped) v = -v;
        CHECK(cut_gap(g, h, flipped) == w.gap);
        CHECK(w.success == (static_cast<double>(w.gap) > 0.05 * static_cast<double>(w.lhs_form)));
    }
    CHECK_THROWS_AS(witness_cut(kMatchingG, kMatchingH, 0.1, 0, 1), ParameterError);
}
