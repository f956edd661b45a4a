#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace jamming {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

struct NotSquare : std::invalid_argument {
    NotSquare() : std::invalid_argument("matrix is not square") {}
};
struct NotHermitian : std::invalid_argument {
    NotHermitian() : std::invalid_argument("matrix is not Hermitian") {}
};
struct NegativeEigenvalue : std::domain_error {
    NegativeEigenvalue()
        : std::domain_error("matrix has a significantly negative eigenvalue") {}
};

struct EigDecomposition {
    RealVector eigenvalues;    // ascending
    ComplexMatrix eigenvectors;  // columns, orthonormal
};

inline constexpr double kDefaultRankTol = 1e-10;

/// Eigendecomposition of a Hermitian matrix. The input must be square and
/// Hermitian within 1e-12 relative to its Frobenius norm.
EigDecomposition hermitian_eig(const ComplexMatrix& h);

struct InvSqrtResult {
    ComplexMatrix matrix;  // (H^+)^{1/2}
    int rank = 0;          // eigenvalues above rank_tol * lambda_max
};

/// Inverse square root of a Hermitian PSD matrix via the Moore-Penrose
/// pseudoinverse: eigenvalues at or below rank_tol * lambda_max map to zero,
/// the rest to lambda^{-1/2}. Eigenvalues below -1e-9 * lambda_max raise
/// NegativeEigenvalue; small negative roundoff is clamped to zero.
InvSqrtResult inv_sqrt(const ComplexMatrix& h, double rank_tol = kDefaultRankTol);

}  // namespace jamming
