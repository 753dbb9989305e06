#ifndef RGD_RIGIDITY_HPP
#define RGD_RIGIDITY_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rgd/graph.hpp"

namespace rgd {

enum class RigidityKind { Spectral, Cut };

std::string_view to_string(RigidityKind k);

struct RigidityReport {
    double epsilon_used = 0.0;
    std::uint64_t overlap_observed = 0;
    double overlap_bound = 0.0;
    bool satisfied = false;
    RigidityKind kind = RigidityKind::Spectral;
};

constexpr double kRigiditySlack = 1e-9;

/// (dn/2)(1 - eps^2 d / 2). Non-positive once eps >= sqrt(2/d).
double spectral_overlap_bound(std::uint32_t n, std::uint32_t d, double epsilon);
/// (dn/2)(1 - 3 sqrt(d) eps).
double cut_overlap_bound(std::uint32_t n, std::uint32_t d, double epsilon);

/// Overlap against the spectral bound at the two-sided factor
/// max(eps(g,h), eps(h,g)). A report with satisfied == false is a bug.
RigidityReport check_spectral_rigidity(const RegularGraph& g, const RegularGraph& h);

/// Same with the exhaustive cut factor. n <= 24.
RigidityReport check_cut_rigidity_exact(const BipartiteRegularGraph& g,
                                        const BipartiteRegularGraph& h);

/// An edge of E(G) xor E(H) together with M_uv, where M = A_H - A_G.
struct DiffEdge {
    Vertex u;
    Vertex v;
    int sign; // +1 for an H-only edge, -1 for a G-only edge
};

/// The unit vectors y_i = z_i / |z_i| where z_i is column i of I + M/sqrt(d).
/// Each y_i is stored sparsely: it is supported on i and the endpoints of the
/// difference edges at i, so at most 2d+1 entries.
struct GramVectors {
    std::uint32_t n = 0;
    std::uint32_t d = 0;
    std::vector<DiffEdge> diff_edges;
    std::vector<double> z_norm_sq;
    std::vector<std::vector<std::pair<Vertex, double>>> y; // sorted by index

    double inner(Vertex i, Vertex j) const;
};

/// Throws ParameterError for mismatched inputs and InternalError if some
/// |z_i|^2 leaves [1, 3] by more than 1e-12.
GramVectors gram_vectors(const BipartiteRegularGraph& g, const BipartiteRegularGraph& h);

/// Sum over ordered pairs of M_ij <y_i, y_j>.
double gram_value(const GramVectors& gv);

/// (2 delta d n) * 2 / (3 sqrt(d)) with delta = |E(G) \ E(H)| / (dn/2).
double gram_bound_formula(std::uint32_t n, std::uint32_t d, double delta);

/// gram_value of the pair, after checking it is at least gram_bound_formula
/// (InternalError otherwise).
double gram_lower_bound(const BipartiteRegularGraph& g, const BipartiteRegularGraph& h);

/// (2/pi) sum_ij M_ij arcsin <y_i, y_j>: the expected value of x'Mx under
/// hyperplane rounding of the y_i.
double rounding_expectation(const GramVectors& gv);
double rounding_expectation(const BipartiteRegularGraph& g, const BipartiteRegularGraph& h);

struct WitnessCut {
    std::vector<int> x;
    std::int64_t gap = 0;       // x'(L_G - L_H)x
    std::int64_t lhs_form = 0;  // x'L_G x
    std::uint64_t trials_used = 0;
    std::uint64_t best_trial = 0;
    std::optional<std::uint64_t> first_success_trial;
    bool success = false; // gap > epsilon_target * lhs_form
    double gram_value = 0.0;
    double arcsin_value = 0.0;
};

constexpr std::uint64_t kDefaultWitnessTrials = 1000;

/// Best-of-`trials` hyperplane rounding of the y_i. Trial t draws its normal
/// from Rng(substream_seed(seed, t)); sign(0) = +1; ties keep the earliest
/// trial. A failed search does not certify that g and h approximate each other.
WitnessCut witness_cut(const BipartiteRegularGraph& g, const BipartiteRegularGraph& h,
                       double epsilon_target, std::uint64_t trials, std::uint64_t seed);

/// x'(L_G - L_H)x evaluated over the full edge lists.
std::int64_t cut_gap(const RegularGraph& g, const RegularGraph& h, const std::vector<int>& x);

struct RoundingStats {
    std::uint64_t samples = 0;
    double mean = 0.0;
    double stddev = 0.0; // sample standard deviation
    double std_error() const;
};

/// Independent single roundings, sample t seeded with substream_seed(seed, t).
RoundingStats monte_carlo_rounding(const GramVectors& gv, std::uint64_t samples, std::uint64_t seed);

} // namespace rgd

#endif // RGD_RIGIDITY_HPP
