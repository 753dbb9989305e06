#include "rgd/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "rgd/error.hpp"

namespace rgd {

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
    SymmetricMatrix out(n);
    out.m_.setIdentity();
    return out;
}

SymmetricMatrix SymmetricMatrix::from_dense(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols()) throw NumericError("from_dense: matrix is not square");
    if (!a.allFinite()) throw NumericError("from_dense: non-finite entry");
    SymmetricMatrix out(static_cast<std::size_t>(a.rows()));
    out.m_ = 0.5 * (a + a.transpose());
    return out;
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
    if (!std::isfinite(value)) throw NumericError("SymmetricMatrix: non-finite entry");
    m_(i, j) = value;
    m_(j, i) = value;
}

void SymmetricMatrix::add(std::size_t i, std::size_t j, double value) {
    set(i, j, m_(i, j) + value);
}

SymmetricMatrix SymmetricMatrix::operator+(const SymmetricMatrix& o) const {
    SymmetricMatrix out(n());
    out.m_ = m_ + o.m_;
    return out;
}

SymmetricMatrix SymmetricMatrix::operator-(const SymmetricMatrix& o) const {
    SymmetricMatrix out(n());
    out.m_ = m_ - o.m_;
    return out;
}

SymmetricMatrix SymmetricMatrix::operator*(double s) const {
    SymmetricMatrix out(n());
    out.m_ = m_ * s;
    return out;
}

SymmetricMatrix congruence(const SymmetricMatrix& c, const SymmetricMatrix& a) {
    Eigen::MatrixXd prod = c.dense() * a.dense() * c.dense();
    return SymmetricMatrix::from_dense(prod);
}

SymmetricMatrix laplacian(const RegularGraph& g) {
    SymmetricMatrix l(g.n());
    for (Vertex v = 0; v < g.n(); ++v) l.set(v, v, g.d());
    for (const Edge& e : g.edges()) l.set(e.u, e.v, -1.0);
    return l;
}

SymmetricMatrix adjacency(const RegularGraph& g) {
    SymmetricMatrix a(g.n());
    for (const Edge& e : g.edges()) a.set(e.u, e.v, 1.0);
    return a;
}

Spectrum sym_eigen(const SymmetricMatrix& m, bool want_vectors) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        m.dense(), want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("sym_eigen: eigensolver did not converge");
    Spectrum s;
    const Eigen::VectorXd& values = solver.eigenvalues();
    s.eigenvalues.assign(values.data(), values.data() + values.size());
    if (want_vectors) s.vectors = solver.eigenvectors();
    return s;
}

double operator_norm(const SymmetricMatrix& m) {
    if (m.n() == 0) return 0.0;
    Spectrum s = sym_eigen(m, false);
    return std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
}

double frobenius_norm(const SymmetricMatrix& m) {
    return m.dense().norm();
}

std::uint64_t adjacency_difference_frobenius_sq(const RegularGraph& g, const RegularGraph& h) {
    if (g.n() != h.n()) throw ParameterError("adjacency difference: graphs have different n");
    const std::size_t n = g.n();
    std::vector<std::int8_t> diff(n * n, 0);
    for (const Edge& e : g.edges()) {
        diff[e.u * n + e.v] += 1;
        diff[e.v * n + e.u] += 1;
    }
    for (const Edge& e : h.edges()) {
        diff[e.u * n + e.v] -= 1;
        diff[e.v * n + e.u] -= 1;
    }
    std::uint64_t total = 0;
    for (std::int8_t x : diff) total += static_cast<std::uint64_t>(x * x);
    return total;
}

SymmetricMatrix pinv_sqrt(const SymmetricMatrix& l, double kernel_tol) {
    Spectrum s = sym_eigen(l, true);
    const std::size_t n = l.n();
    if (n == 0) return SymmetricMatrix(0);
    const double lambda_max = std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
    const double cutoff = kernel_tol * lambda_max;
    Eigen::VectorXd scale(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = s.eigenvalues[k];
        if (lambda < -cutoff) throw NumericError("pinv_sqrt: matrix is not positive semidefinite");
        scale(k) = lambda > cutoff ? 1.0 / std::sqrt(lambda) : 0.0;
    }
    const Eigen::MatrixXd& v = *s.vectors;
    return SymmetricMatrix::from_dense(v * scale.asDiagonal() * v.transpose());
}

} // namespace rgd
