#include "jamming/measurement.hpp"

#include <algorithm>
#include <stdexcept>

namespace jamming {

ComplexVector MeasurementBasis::vector_for(int channel) const {
    auto it = std::lower_bound(safe_set.begin(), safe_set.end(), channel);
    if (it == safe_set.end() || *it != channel) {
        throw std::invalid_argument("channel " + std::to_string(channel) +
                                    " is not in the safe set");
    }
    return vectors.col(it - safe_set.begin());
}

ComplexMatrix gram_matrix(const Frame& frame, const SafeSet& x) {
    const int m = static_cast<int>(x.size());
    ComplexMatrix sub(frame.d, m);
    for (int i = 0; i < m; ++i) {
        if (x[i] < 0 || x[i] >= frame.n) {
            throw std::invalid_argument("safe set channel out of range");
        }
        sub.col(i) = frame.vectors.col(x[i]);
    }
    ComplexMatrix g = sub.adjoint() * sub;
    return (g + g.adjoint().eval()) / 2.0;
}

MeasurementBasis lowdin_basis(const Frame& frame, const SafeSet& x,
                              double rank_tol) {
    const int m = static_cast<int>(x.size());
    ComplexMatrix sub(frame.d, m);
    for (int i = 0; i < m; ++i) sub.col(i) = frame.vectors.col(x[i]);

    InvSqrtResult g_inv_sqrt = inv_sqrt(gram_matrix(frame, x), rank_tol);
    MeasurementBasis basis;
    basis.safe_set = x;
    basis.vectors = sub * g_inv_sqrt.matrix;
    basis.projective = (g_inv_sqrt.rank == m);
    basis.completion_rank = m - g_inv_sqrt.rank;
    return basis;
}

std::map<SafeSet, MeasurementBasis> all_bases(const Frame& frame,
                                              const GameParams& params,
                                              double rank_tol) {
    if (frame.n != params.n || frame.d != params.d) {
        throw std::invalid_argument("frame does not match game parameters");
    }
    std::map<SafeSet, MeasurementBasis> out;
    for (const SafeSet& x : enumerate_safe_sets(params)) {
        out.emplace(x, lowdin_basis(frame, x, rank_tol));
    }
    return out;
}

MeasurementBasis gram_schmidt_basis(const Frame& frame, const SafeSet& x) {
    const int m = static_cast<int>(x.size());
    MeasurementBasis basis;
    basis.safe_set = x;
    basis.vectors.resize(frame.d, m);
    int rank = 0;
    for (int i = 0; i < m; ++i) {
        ComplexVector v = frame.vectors.col(x[i]);
        for (int j = 0; j < i; ++j) {
            v -= basis.vectors.col(j).dot(v) * basis.vectors.col(j);
        }
        double norm = v.norm();
        if (norm > 1e-12) {
            basis.vectors.col(i) = v / norm;
            ++rank;
        } else {
            basis.vectors.col(i).setZero();
        }
    }
    basis.projective = (rank == m);
    basis.completion_rank = m - rank;
    return basis;
}

}  // namespace jamming
