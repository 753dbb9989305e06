#ifndef RGD_APPROX_HPP
#define RGD_APPROX_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rgd/graph.hpp"
#include "rgd/linalg.hpp"

namespace rgd {

enum class ApproxMethod { SpectralEigen, CutExhaustive };

std::string_view to_string(ApproxMethod m);

/// Smallest eps with (1-eps) x'L_G x <= x'L_H x <= (1+eps) x'L_G x over the
/// method's query set. G is the base graph; the factor is not symmetric.
struct ApproxReport {
    double epsilon = 0.0;
    ApproxMethod method = ApproxMethod::SpectralEigen;
    std::optional<std::vector<double>> argmax_vector;
};

double quadratic_form(const SymmetricMatrix& m, std::span<const double> x);

/// Edges with exactly one endpoint in `subset`.
std::uint64_t cut_value(const RegularGraph& g, std::span<const Vertex> subset);

/// Largest |lambda| of L_G^{+1/2} (L_H - L_G) L_G^{+1/2}. The argmax vector x
/// satisfies x'L_G x = 1. Throws NoFiniteEpsilonError when ker(L_G) is not
/// contained in ker(L_H).
ApproxReport spectral_approx_factor(const SymmetricMatrix& base_laplacian,
                                    const SymmetricMatrix& other_laplacian,
                                    double kernel_tol = kDefaultKernelTol);
ApproxReport spectral_approx_factor(const RegularGraph& g, const RegularGraph& h);

constexpr std::uint32_t kMaxExhaustiveVertices = 24;

/// Exhaustive maximum of |cut_H(S) - cut_G(S)| / cut_G(S) over the 2^(n-1)-1
/// nonconstant sign patterns with vertex 0 fixed to +1, visited in Gray-code
/// order. Ties keep the first pattern reached. Throws ScaleError for
/// n > 24 and NoFiniteEpsilonError when g is disconnected.
ApproxReport cut_approx_factor_exact(const RegularGraph& g, const RegularGraph& h);

} // namespace rgd

#endif // RGD_APPROX_HPP
