#pragma once

#include <map>
#include <vector>

#include "jamming/combinatorics.hpp"
#include "jamming/frames.hpp"
#include "jamming/linalg.hpp"

namespace jamming {

/// Measurement basis for one safe set: one vector per channel in the set,
/// labeled by ascending channel order. When the Gram matrix is singular the
/// basis is the PGM (pseudoinverse path); the missing completion_rank
/// dimensions form an inconclusive outcome that never wins.
struct MeasurementBasis {
    SafeSet safe_set;
    ComplexMatrix vectors;  // d x |safe_set|; column i belongs to safe_set[i]
    bool projective = true;
    int completion_rank = 0;  // rank of I - Pi_X, zero when projective

    ComplexVector vector_for(int channel) const;
};

/// [G_X]_{c,c'} = <phi_c|phi_c'> over the channels of x, ascending order.
ComplexMatrix gram_matrix(const Frame& frame, const SafeSet& x);

/// Lowdin / PGM orthonormalization of the seed vectors of x:
/// |v_x^c> = sum_{c'} [(G_X^+)^{1/2}]_{c',c} |phi_c'>.
MeasurementBasis lowdin_basis(const Frame& frame, const SafeSet& x,
                              double rank_tol = kDefaultRankTol);

/// One Lowdin basis per safe set, in the canonical enumeration order.
std::map<SafeSet, MeasurementBasis> all_bases(const Frame& frame,
                                              const GameParams& params,
                                              double rank_tol = kDefaultRankTol);

/// Gram-Schmidt basis of the same seeds (ascending channel order), used as a
/// comparison point for the Lowdin least-squares optimality property.
MeasurementBasis gram_schmidt_basis(const Frame& frame, const SafeSet& x);

}  // namespace jamming
