#include "rgd/approx.hpp"

#include <bit>
#include <cmath>

#include "rgd/error.hpp"

namespace rgd {

std::string_view to_string(ApproxMethod m) {
    return m == ApproxMethod::SpectralEigen ? "spectral-eigen" : "cut-exhaustive";
}

double quadratic_form(const SymmetricMatrix& m, std::span<const double> x) {
    if (x.size() != m.n()) throw ParameterError("quadratic_form: dimension mismatch");
    Eigen::Map<const Eigen::VectorXd> v(x.data(), static_cast<Eigen::Index>(x.size()));
    return v.dot(m.dense() * v);
}

std::uint64_t cut_value(const RegularGraph& g, std::span<const Vertex> subset) {
    std::vector<char> inside(g.n(), 0);
    for (Vertex v : subset) {
        if (v >= g.n()) throw ParameterError("cut_value: vertex out of range");
        inside[v] = 1;
    }
    std::uint64_t crossing = 0;
    for (const Edge& e : g.edges())
        if (inside[e.u] != inside[e.v]) ++crossing;
    return crossing;
}

ApproxReport spectral_approx_factor(const SymmetricMatrix& base_laplacian,
                                    const SymmetricMatrix& other_laplacian, double kernel_tol) {
    const std::size_t n = base_laplacian.n();
    if (other_laplacian.n() != n) throw ParameterError("spectral_approx_factor: dimension mismatch");

    Spectrum base = sym_eigen(base_laplacian, true);
    const Eigen::MatrixXd& v = *base.vectors;
    const double lambda_max = std::max(std::abs(base.eigenvalues.front()), std::abs(base.eigenvalues.back()));
    const double cutoff = kernel_tol * lambda_max;
    const double leak_tol = std::sqrt(kernel_tol) * std::max(1.0, other_laplacian.dense().norm());

    Eigen::VectorXd scale(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = base.eigenvalues[k];
        if (lambda < -cutoff) throw NumericError("spectral_approx_factor: base Laplacian is not PSD");
        if (lambda > cutoff) {
            scale(k) = 1.0 / std::sqrt(lambda);
        } else {
            scale(k) = 0.0;
            if ((other_laplacian.dense() * v.col(k)).norm() > leak_tol)
                throw NoFiniteEpsilonError("spectral_approx_factor: kernel of base is not in kernel of other");
        }
    }
    SymmetricMatrix p = SymmetricMatrix::from_dense(v * scale.asDiagonal() * v.transpose());
    SymmetricMatrix k = congruence(p, other_laplacian - base_laplacian);
    Spectrum ks = sym_eigen(k, true);

    const double lo = ks.eigenvalues.front();
    const double hi = ks.eigenvalues.back();
    const Eigen::Index col = std::abs(lo) > std::abs(hi) ? 0 : static_cast<Eigen::Index>(n - 1);
    Eigen::VectorXd x = p.dense() * ks.vectors->col(col);

    ApproxReport r;
    r.epsilon = std::max(std::abs(lo), std::abs(hi));
    r.method = ApproxMethod::SpectralEigen;
    r.argmax_vector = std::vector<double>(x.data(), x.data() + x.size());
    return r;
}

ApproxReport spectral_approx_factor(const RegularGraph& g, const RegularGraph& h) {
    if (g.n() != h.n()) throw ParameterError("spectral_approx_factor: graphs have different n");
    return spectral_approx_factor(laplacian(g), laplacian(h));
}

ApproxReport cut_approx_factor_exact(const RegularGraph& g, const RegularGraph& h) {
    if (g.n() != h.n()) throw ParameterError("cut_approx_factor_exact: graphs have different n");
    const std::uint32_t n = g.n();
    if (n > kMaxExhaustiveVertices) throw ScaleError("cut_approx_factor_exact: n > 24");
    if (!is_connected(g))
        throw NoFiniteEpsilonError("cut_approx_factor_exact: base graph is disconnected");

    const auto adj_g = g.adjacency_lists();
    const auto adj_h = h.adjacency_lists();
    std::vector<char> side(n, 0);
    std::vector<char> best_side(n, 0);
    std::int64_t cut_g = 0, cut_h = 0;
    std::int64_t best_num = 0, best_den = 1;

    const std::uint64_t patterns = std::uint64_t{1} << (n - 1);
    for (std::uint64_t step = 1; step < patterns; ++step) {
        const Vertex v = static_cast<Vertex>(std::countr_zero(step)) + 1;
        for (Vertex w : adj_g[v]) cut_g += side[w] == side[v] ? 1 : -1;
        for (Vertex w : adj_h[v]) cut_h += side[w] == side[v] ? 1 : -1;
        side[v] ^= 1;
        const std::int64_t num = cut_h > cut_g ? cut_h - cut_g : cut_g - cut_h;
        if (num * best_den > best_num * cut_g) {
            best_num = num;
            best_den = cut_g;
            best_side = side;
        }
    }

    ApproxReport r;
    r.epsilon = static_cast<double>(best_num) / static_cast<double>(best_den);
    r.method = ApproxMethod::CutExhaustive;
    std::vector<double> x(n);
    for (Vertex i = 0; i < n; ++i) x[i] = best_side[i] ? -1.0 : 1.0;
    r.argmax_vector = std::move(x);
    return r;
}

} // namespace rgd
