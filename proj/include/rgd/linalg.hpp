#ifndef RGD_LINALG_HPP
#define RGD_LINALG_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rgd/graph.hpp"

namespace rgd {

/// Dense real symmetric matrix. Writes go through set(), which mirrors the
/// entry, so the stored matrix is exactly symmetric.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(std::size_t n) : m_(Eigen::MatrixXd::Zero(n, n)) {}

    static SymmetricMatrix identity(std::size_t n);
    /// Symmetrizes (A + A^T)/2; throws NumericError on non-finite entries.
    static SymmetricMatrix from_dense(const Eigen::MatrixXd& a);

    std::size_t n() const { return static_cast<std::size_t>(m_.rows()); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    void set(std::size_t i, std::size_t j, double value);
    void add(std::size_t i, std::size_t j, double value);

    const Eigen::MatrixXd& dense() const { return m_; }

    SymmetricMatrix operator+(const SymmetricMatrix& o) const;
    SymmetricMatrix operator-(const SymmetricMatrix& o) const;
    SymmetricMatrix operator*(double s) const;

    double trace() const { return m_.trace(); }

private:
    Eigen::MatrixXd m_;
};

/// Returns C * A * C, symmetrized. C must be symmetric.
SymmetricMatrix congruence(const SymmetricMatrix& c, const SymmetricMatrix& a);

struct Spectrum {
    std::vector<double> eigenvalues;        // ascending
    std::optional<Eigen::MatrixXd> vectors; // column k pairs with eigenvalues[k]
};

SymmetricMatrix laplacian(const RegularGraph& g);
SymmetricMatrix adjacency(const RegularGraph& g);

/// Full symmetric eigendecomposition (Householder tridiagonalization followed by
/// implicit-shift QR on the tridiagonal). Throws NumericError on non-convergence.
Spectrum sym_eigen(const SymmetricMatrix& m, bool want_vectors);

double operator_norm(const SymmetricMatrix& m);
double frobenius_norm(const SymmetricMatrix& m);

/// Sum of squared entries of A_G - A_H in integer arithmetic, computed from a
/// dense difference of the two edge sets.
std::uint64_t adjacency_difference_frobenius_sq(const RegularGraph& g, const RegularGraph& h);

constexpr double kDefaultKernelTol = 1e-8;

/// Pseudo-inverse square root of a PSD matrix. Eigenvalues at most
/// kernel_tol * lambda_max are treated as kernel and mapped to 0. Throws
/// NumericError for an eigenvalue below -kernel_tol * lambda_max.
SymmetricMatrix pinv_sqrt(const SymmetricMatrix& l, double kernel_tol = kDefaultKernelTol);

} // namespace rgd

#endif // RGD_LINALG_HPP
