#include "rgd/counting.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "rgd/error.hpp"

namespace rgd {

namespace {

// ceil that ignores representation noise such as 1/(25 * 0.01^2) = 399.99...
std::uint32_t stable_ceil(double x) {
    const double r = std::round(x);
    if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) return static_cast<std::uint32_t>(r);
    return static_cast<std::uint32_t>(std::ceil(x));
}

void require_epsilon(double epsilon, const char* what) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParameterError(std::string(what) + ": epsilon must lie in (0, 1)");
}

class RegularCounter {
public:
    RegularCounter(std::uint32_t n, std::uint32_t d) : n_(n), d_(d), degree_(n, 0) {}

    std::uint64_t count() { return from_vertex(0); }

private:
    // Vertices below v are saturated; pick the missing neighbours of v among
    // larger vertices, which cannot be joined to v yet.
    std::uint64_t from_vertex(std::uint32_t v) {
        if (v == n_) return 1;
        const std::uint32_t need = d_ - degree_[v];
        if (need == 0) return from_vertex(v + 1);
        std::vector<std::uint32_t> candidates;
        for (std::uint32_t w = v + 1; w < n_; ++w)
            if (degree_[w] < d_) candidates.push_back(w);
        if (candidates.size() < need) return 0;
        degree_[v] = d_;
        const std::uint64_t total = choose(v, candidates, 0, need);
        degree_[v] = d_ - need;
        return total;
    }

    std::uint64_t choose(std::uint32_t v, const std::vector<std::uint32_t>& candidates, std::size_t start,
                         std::uint32_t remaining) {
        if (remaining == 0) return from_vertex(v + 1);
        std::uint64_t total = 0;
        for (std::size_t k = start; k + remaining <= candidates.size(); ++k) {
            ++degree_[candidates[k]];
            total += choose(v, candidates, k + 1, remaining - 1);
            --degree_[candidates[k]];
        }
        return total;
    }

    std::uint32_t n_;
    std::uint32_t d_;
    std::vector<std::uint32_t> degree_;
};

} // namespace

CountEstimate count_regular_log2(std::uint32_t n, std::uint32_t d) {
    if (n == 0 || d == 0 || d >= n || (std::uint64_t{n} * d) % 2 != 0)
        throw ParameterError("count_regular_log2: needs 1 <= d < n and d*n even");
    const double nn = n, dd = d, dn = dd * nn;
    const double ln_count = std::lgamma(dn + 1.0) - std::lgamma(dn / 2.0 + 1.0) - (dn / 2.0) * std::numbers::ln2 -
                            nn * std::lgamma(dd + 1.0) + (1.0 - dd * dd) / 4.0 - dd * dd * dd / (12.0 * nn);
    CountEstimate c;
    c.log2_count = ln_count / std::numbers::ln2;
    c.n = n;
    c.d = d;
    c.in_formula_regime = std::uint64_t{d} * d <= n;
    return c;
}

std::uint64_t enumerate_regular_exact(std::uint32_t n, std::uint32_t d) {
    const bool supported = (n <= 10 && d <= 3) || (n <= 12 && d == 2);
    if (!supported) throw ScaleError("enumerate_regular_exact: supports n <= 10, d <= 3 or n <= 12, d = 2");
    if (n == 0 || d == 0) throw ParameterError("enumerate_regular_exact: n and d must be positive");
    if (d >= n || (std::uint64_t{n} * d) % 2 != 0) return 0;
    return RegularCounter(n, d).count();
}

double capacity_bound_log2(std::uint32_t n, std::uint32_t d, double epsilon) {
    if (!(epsilon >= 0.0 && epsilon < 0.5)) throw ParameterError("capacity_bound_log2: epsilon must lie in [0, 1/2)");
    const double nn = n, dd = d;
    return dd * nn / 2.0 + 4.5 * epsilon * epsilon * dd * dd * nn * std::log2(nn);
}

double cut_capacity_bound_log2(std::uint32_t n, std::uint32_t d, double epsilon) {
    if (!(epsilon >= 0.0)) throw ParameterError("cut_capacity_bound_log2: epsilon must be nonnegative");
    const double nn = n, dd = d;
    return dd * nn / 2.0 + 9.0 * std::pow(dd, 1.5) * nn * epsilon * std::log2(nn);
}

double mutual_approx_bound(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon < 1.0)) throw ParameterError("mutual_approx_bound: epsilon must lie in [0, 1)");
    return 2.0 * epsilon / (1.0 - epsilon);
}

double lower_bound_bits_spectral(double n, double epsilon) {
    require_epsilon(epsilon, "lower_bound_bits_spectral");
    return n * std::log2(n) / (500.0 * epsilon * epsilon);
}

double lower_bound_bits_cut(double n, double epsilon) {
    require_epsilon(epsilon, "lower_bound_bits_cut");
    return n * std::log2(n) / (2304.0 * epsilon * epsilon);
}

std::uint32_t spectral_degree_for(double epsilon) {
    require_epsilon(epsilon, "spectral_degree_for");
    return stable_ceil(1.0 / (25.0 * epsilon * epsilon));
}

std::uint32_t cut_degree_for(double epsilon) {
    require_epsilon(epsilon, "cut_degree_for");
    return stable_ceil(1.0 / (144.0 * epsilon * epsilon));
}

CountingGap counting_gap_demo(std::uint32_t n, double epsilon, RigidityKind kind) {
    require_epsilon(epsilon, "counting_gap_demo");
    CountingGap g;
    g.kind = kind;
    g.n = n;
    g.epsilon = epsilon;
    const double nn = n;
    if (kind == RigidityKind::Spectral) {
        if (!(epsilon < 0.5)) throw ParameterError("counting_gap_demo: spectral case needs epsilon < 1/2");
        g.d = spectral_degree_for(epsilon);
        if (std::uint64_t{g.d} * g.d > n)
            throw ParameterError("counting_gap_demo: outside regime, d = " + std::to_string(g.d) +
                                 " has d^2 > n; increase n or epsilon");
        const double dd = g.d;
        g.count_log2 = dd * nn * std::log2(nn / dd) / 2.0;
        g.capacity_log2 = capacity_bound_log2(n, g.d, epsilon);
        g.lower_bound_bits = lower_bound_bits_spectral(nn, epsilon);
    } else {
        if (n % 4 != 0) throw ParameterError("counting_gap_demo: cut case needs n divisible by 4");
        g.d = cut_degree_for(epsilon);
        const std::uint32_t half = n / 2;
        if (std::uint64_t{g.d} * g.d > half)
            throw ParameterError("counting_gap_demo: outside regime, d = " + std::to_string(g.d) +
                                 " has d^2 > n/2; increase n or epsilon");
        const double dd = g.d, hh = half;
        g.count_log2 = dd * hh * std::log2(hh / dd) / 2.0;
        g.capacity_log2 = cut_capacity_bound_log2(n, g.d, epsilon);
        g.lower_bound_bits = lower_bound_bits_cut(nn, epsilon);
    }
    g.gap = g.count_log2 - g.capacity_log2;
    g.gap_positive = g.gap > 0.0;
    return g;
}

} // namespace rgd
