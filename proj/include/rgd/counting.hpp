#ifndef RGD_COUNTING_HPP
#define RGD_COUNTING_HPP

#include <cstdint>
#include <optional>

#include "rgd/rigidity.hpp"

namespace rgd {

// Counting and lower-bound arithmetic. Every closed form here keeps only the
// leading term: o(1) and O(d^2/n) corrections are dropped.

struct CountEstimate {
    double log2_count = 0.0;
    std::uint32_t n = 0;
    std::uint32_t d = 0;
    std::optional<std::uint64_t> exact;
    bool in_formula_regime = false; // d^2 <= n
};

/// lg of (dn)! / ((dn/2)! 2^(dn/2) (d!)^n) * exp((1-d^2)/4 - d^3/(12n)),
/// the asymptotic number of labeled d-regular graphs on n vertices.
CountEstimate count_regular_log2(std::uint32_t n, std::uint32_t d);

/// Exact number of labeled simple d-regular graphs, by backtracking. Supports
/// n <= 10 with d <= 3 and n <= 12 with d == 2; ScaleError otherwise.
std::uint64_t enumerate_regular_exact(std::uint32_t n, std::uint32_t d);

/// dn/2 + 4.5 eps^2 d^2 n lg n: lg of the number of d-regular graphs that one
/// eps-spectral sketch can approximate. (The rounded statement uses 5 instead
/// of 4.5.) Requires 0 <= eps < 1/2.
double capacity_bound_log2(std::uint32_t n, std::uint32_t d, double epsilon);

/// dn/2 + 9 d^(3/2) n eps lg n, the cut-sketch counterpart.
double cut_capacity_bound_log2(std::uint32_t n, std::uint32_t d, double epsilon);

/// If two graphs are each eps-approximated by one function, each approximates
/// the other within 2 eps / (1 - eps), which is at most 3 eps for eps <= 1/3.
/// Requires 0 <= eps < 1.
double mutual_approx_bound(double epsilon);

/// n lg n / (500 eps^2).
double lower_bound_bits_spectral(double n, double epsilon);
/// n lg n / (2304 eps^2).
double lower_bound_bits_cut(double n, double epsilon);

/// ceil(1 / (25 eps^2)).
std::uint32_t spectral_degree_for(double epsilon);
/// ceil(1 / (144 eps^2)).
std::uint32_t cut_degree_for(double epsilon);

struct CountingGap {
    RigidityKind kind = RigidityKind::Spectral;
    std::uint32_t n = 0;
    double epsilon = 0.0;
    std::uint32_t d = 0;
    double count_log2 = 0.0;    // leading term of lg of the graph family size
    double capacity_log2 = 0.0; // lg of graphs sharing one sketch
    double gap = 0.0;           // count_log2 - capacity_log2
    bool gap_positive = false;
    double lower_bound_bits = 0.0;
};

/// Counting skeleton of the sketch-size lower bound.
///
/// Spectral: d = ceil(1/(25 eps^2)), family G_{n,d} with lg size
/// dn lg(n/d)/2, capacity from capacity_bound_log2.
/// Cut: d = ceil(1/(144 eps^2)); bipartite family on n vertices bounded below
/// through double covers of G_{n/2,d}, lg size d(n/2) lg(n/(2d))/2, capacity
/// from cut_capacity_bound_log2. Requires n divisible by 4.
/// Regime gate: d^2 <= family vertex count (n, or n/2 for cut), else
/// ParameterError.
CountingGap counting_gap_demo(std::uint32_t n, double epsilon, RigidityKind kind);

} // namespace rgd

#endif // RGD_COUNTING_HPP
