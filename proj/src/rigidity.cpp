#include "rgd/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rgd/approx.hpp"
#include "rgd/error.hpp"
#include "rgd/rng.hpp"

namespace rgd {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kArcsinClamp = 1e-12;

void require_same_shape(const RegularGraph& g, const RegularGraph& h, const char* what) {
    if (g.n() != h.n() || g.d() != h.d())
        throw ParameterError(std::string(what) + ": graphs must share n and d");
}

// Signs of one hyperplane rounding of the y_i.
void round_once(const GramVectors& gv, Rng& rng, std::vector<double>& w, std::vector<int>& x) {
    double norm_sq = 0.0;
    for (double& wi : w) {
        wi = rng.gaussian();
        norm_sq += wi * wi;
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (Vertex i = 0; i < gv.n; ++i) {
        double proj = 0.0;
        for (const auto& [k, value] : gv.y[i]) proj += value * w[k] * inv;
        x[i] = proj >= 0.0 ? 1 : -1;
    }
}

// x'Mx from the difference edges alone.
std::int64_t difference_form(const GramVectors& gv, const std::vector<int>& x) {
    std::int64_t total = 0;
    for (const DiffEdge& e : gv.diff_edges) total += e.sign * x[e.u] * x[e.v];
    return 2 * total;
}

std::int64_t laplacian_form(const RegularGraph& g, const std::vector<int>& x) {
    std::int64_t total = 0;
    for (const Edge& e : g.edges()) {
        const std::int64_t diff = x[e.u] - x[e.v];
        total += diff * diff;
    }
    return total;
}

} // namespace

std::string_view to_string(RigidityKind k) {
    return k == RigidityKind::Spectral ? "spectral" : "cut";
}

double spectral_overlap_bound(std::uint32_t n, std::uint32_t d, double epsilon) {
    const double edges = 0.5 * static_cast<double>(d) * static_cast<double>(n);
    return edges * (1.0 - epsilon * epsilon * static_cast<double>(d) / 2.0);
}

double cut_overlap_bound(std::uint32_t n, std::uint32_t d, double epsilon) {
    const double edges = 0.5 * static_cast<double>(d) * static_cast<double>(n);
    return edges * (1.0 - 3.0 * std::sqrt(static_cast<double>(d)) * epsilon);
}

RigidityReport check_spectral_rigidity(const RegularGraph& g, const RegularGraph& h) {
    require_same_shape(g, h, "check_spectral_rigidity");
    const SymmetricMatrix lg = laplacian(g);
    const SymmetricMatrix lh = laplacian(h);
    RigidityReport r;
    r.kind = RigidityKind::Spectral;
    r.epsilon_used = std::max(spectral_approx_factor(lg, lh).epsilon, spectral_approx_factor(lh, lg).epsilon);
    r.overlap_observed = edge_overlap(g, h).shared;
    r.overlap_bound = spectral_overlap_bound(g.n(), g.d(), r.epsilon_used);
    r.satisfied = static_cast<double>(r.overlap_observed) >= r.overlap_bound - kRigiditySlack;
    return r;
}

RigidityReport check_cut_rigidity_exact(const BipartiteRegularGraph& g, const BipartiteRegularGraph& h) {
    require_same_shape(g, h, "check_cut_rigidity_exact");
    RigidityReport r;
    r.kind = RigidityKind::Cut;
    r.epsilon_used = std::max(cut_approx_factor_exact(g, h).epsilon, cut_approx_factor_exact(h, g).epsilon);
    r.overlap_observed = edge_overlap(g, h).shared;
    r.overlap_bound = cut_overlap_bound(g.n(), g.d(), r.epsilon_used);
    r.satisfied = static_cast<double>(r.overlap_observed) >= r.overlap_bound - kRigiditySlack;
    return r;
}

double GramVectors::inner(Vertex i, Vertex j) const {
    const auto& a = y[i];
    const auto& b = y[j];
    double total = 0.0;
    std::size_t p = 0, q = 0;
    while (p < a.size() && q < b.size()) {
        if (a[p].first == b[q].first) {
            total += a[p].second * b[q].second;
            ++p;
            ++q;
        } else if (a[p].first < b[q].first) {
            ++p;
        } else {
            ++q;
        }
    }
    return total;
}

GramVectors gram_vectors(const BipartiteRegularGraph& g, const BipartiteRegularGraph& h) {
    require_same_shape(g, h, "gram_vectors");
    GramVectors gv;
    gv.n = g.n();
    gv.d = g.d();

    const auto& a = g.edges();
    const auto& b = h.edges();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            gv.diff_edges.push_back({a[i].u, a[i].v, -1});
            ++i;
        } else if (i == a.size() || b[j] < a[i]) {
            gv.diff_edges.push_back({b[j].u, b[j].v, +1});
            ++j;
        } else {
            ++i;
            ++j;
        }
    }

    const double scale = 1.0 / std::sqrt(static_cast<double>(gv.d));
    std::vector<std::vector<std::pair<Vertex, double>>> z(gv.n);
    for (Vertex v = 0; v < gv.n; ++v) z[v].push_back({v, 1.0});
    for (const DiffEdge& e : gv.diff_edges) {
        z[e.u].push_back({e.v, e.sign * scale});
        z[e.v].push_back({e.u, e.sign * scale});
    }

    gv.z_norm_sq.resize(gv.n);
    gv.y.resize(gv.n);
    for (Vertex v = 0; v < gv.n; ++v) {
        auto& col = z[v];
        std::sort(col.begin(), col.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        double norm_sq = 0.0;
        for (const auto& entry : col) norm_sq += entry.second * entry.second;
        if (norm_sq < 1.0 - kNormTol || norm_sq > 3.0 + kNormTol)
            throw InternalError("gram_vectors: |z_i|^2 outside [1, 3]");
        gv.z_norm_sq[v] = norm_sq;
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (auto& entry : col) entry.second *= inv;
        gv.y[v] = std::move(col);
    }
    return gv;
}

double gram_value(const GramVectors& gv) {
    double total = 0.0;
    for (const DiffEdge& e : gv.diff_edges) total += e.sign * gv.inner(e.u, e.v);
    return 2.0 * total;
}

double gram_bound_formula(std::uint32_t n, std::uint32_t d, double delta) {
    const double dn = static_cast<double>(d) * static_cast<double>(n);
    return 2.0 * delta * dn * 2.0 / (3.0 * std::sqrt(static_cast<double>(d)));
}

double gram_lower_bound(const BipartiteRegularGraph& g, const BipartiteRegularGraph& h) {
    const GramVectors gv = gram_vectors(g, h);
    const double value = gram_value(gv);
    const double bound = gram_bound_formula(g.n(), g.d(), edge_overlap(g, h).delta);
    if (value < bound - 1e-9 * std::max(1.0, bound))
        throw InternalError("gram_lower_bound: Gram sum below its lower bound");
    return value;
}

double rounding_expectation(const GramVectors& gv) {
    double total = 0.0;
    for (const DiffEdge& e : gv.diff_edges) {
        double c = gv.inner(e.u, e.v);
        if (std::abs(c) > 1.0 + kArcsinClamp) throw NumericError("rounding_expectation: |<y_i, y_j>| > 1");
        c = std::clamp(c, -1.0, 1.0);
        total += e.sign * std::asin(c);
    }
    return 2.0 / std::numbers::pi * 2.0 * total;
}

double rounding_expectation(const BipartiteRegularGraph& g, const BipartiteRegularGraph& h) {
    return rounding_expectation(gram_vectors(g, h));
}

std::int64_t cut_gap(const RegularGraph& g, const RegularGraph& h, const std::vector<int>& x) {
    if (x.size() != g.n() || h.n() != g.n()) throw ParameterError("cut_gap: dimension mismatch");
    return laplacian_form(g, x) - laplacian_form(h, x);
}

WitnessCut witness_cut(const BipartiteRegularGraph& g, const BipartiteRegularGraph& h,
                       double epsilon_target, std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) throw ParameterError("witness_cut: trials must be positive");
    const GramVectors gv = gram_vectors(g, h);

    WitnessCut best;
    best.trials_used = trials;
    best.gram_value = gram_value(gv);
    best.arcsin_value = rounding_expectation(gv);

    std::vector<double> w(gv.n);
    std::vector<int> x(gv.n);
    bool have_best = false;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(substream_seed(seed, t));
        round_once(gv, rng, w, x);
        const std::int64_t gap = difference_form(gv, x);
        if (!best.first_success_trial &&
            static_cast<double>(gap) > epsilon_target * static_cast<double>(laplacian_form(g, x)))
            best.first_success_trial = t;
        if (!have_best || gap > best.gap) {
            have_best = true;
            best.gap = gap;
            best.x = x;
            best.best_trial = t;
        }
    }

    if (cut_gap(g, h, best.x) != best.gap) throw InternalError("witness_cut: gap re-verification failed");
    best.lhs_form = laplacian_form(g, best.x);
    best.success = static_cast<double>(best.gap) > epsilon_target * static_cast<double>(best.lhs_form);
    return best;
}

double RoundingStats::std_error() const {
    return samples == 0 ? 0.0 : stddev / std::sqrt(static_cast<double>(samples));
}

RoundingStats monte_carlo_rounding(const GramVectors& gv, std::uint64_t samples, std::uint64_t seed) {
    RoundingStats stats;
    stats.samples = samples;
    if (samples == 0) return stats;
    std::vector<double> w(gv.n);
    std::vector<int> x(gv.n);
    // Welford running mean and variance.
    double mean = 0.0, m2 = 0.0;
    for (std::uint64_t t = 0; t < samples; ++t) {
        Rng rng(substream_seed(seed, t));
        round_once(gv, rng, w, x);
        const double value = static_cast<double>(difference_form(gv, x));
        const double delta = value - mean;
        mean += delta / static_cast<double>(t + 1);
        m2 += delta * (value - mean);
    }
    stats.mean = mean;
    stats.stddev = samples > 1 ? std::sqrt(m2 / static_cast<double>(samples - 1)) : 0.0;
    return stats;
}

} // namespace rgd
