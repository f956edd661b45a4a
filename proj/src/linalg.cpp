#include "jamming/linalg.hpp"

#include <cmath>

namespace jamming {

EigDecomposition hermitian_eig(const ComplexMatrix& h) {
    if (h.rows() != h.cols()) throw NotSquare();
    const double scale = std::max(1.0, h.norm());
    if ((h - h.adjoint()).norm() > 1e-12 * scale) throw NotHermitian();

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian eigendecomposition failed");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

InvSqrtResult inv_sqrt(const ComplexMatrix& h, double rank_tol) {
    EigDecomposition eig = hermitian_eig(h);
    const Eigen::Index m = eig.eigenvalues.size();
    const double lambda_max = m > 0 ? std::max(0.0, eig.eigenvalues(m - 1)) : 0.0;
    if (m > 0 && eig.eigenvalues(0) < -1e-9 * std::max(lambda_max, 1.0)) {
        throw NegativeEigenvalue();
    }

    RealVector inv(m);
    int rank = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
        double lambda = std::max(eig.eigenvalues(i), 0.0);
        if (lambda <= rank_tol * lambda_max || lambda == 0.0) {
            inv(i) = 0.0;
        } else {
            inv(i) = 1.0 / std::sqrt(lambda);
            ++rank;
        }
    }
    InvSqrtResult out;
    out.matrix = eig.eigenvectors * inv.asDiagonal() * eig.eigenvectors.adjoint();
    // Symmetrize away roundoff so downstream Hermitian checks hold exactly.
    out.matrix = (out.matrix + out.matrix.adjoint().eval()) / 2.0;
    out.rank = rank;
    return out;
}

}  // namespace jamming
