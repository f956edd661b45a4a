#pragma once

#include <map>
#include <string>
#include <vector>

#include "jamming/combinatorics.hpp"
#include "jamming/frames.hpp"
#include "jamming/measurement.hpp"

namespace jamming {

struct GameValue {
    double omega = 0.0;
    GameParams params;
    std::string method;  // "trace" or "direct"
    std::string frame_label;
};

struct DecompositionRow {
    int j = 0;            // intersection size
    double weight = 0.0;  // hypergeometric p(j)
    double mean_sq_overlap = 0.0;
    std::uint64_t pair_count = 0;  // (c, X, Y) triples with c in X cap Y, |X cap Y| = j
};

struct DecompositionReport {
    std::vector<DecompositionRow> per_j;
    double reconstructed_omega = 0.0;
};

/// omega_q via per-channel accumulators A_c = sum_{x ni c} |v_x^c><v_x^c|:
/// omega_q = (1 / (d |S|^2)) sum_c tr[A_c^2].
GameValue quantum_value(const Frame& frame, const GameParams& params,
                        double rank_tol = kDefaultRankTol);

/// Same value from already-built bases (shared with the optimizer).
double quantum_value_from_bases(const std::map<SafeSet, MeasurementBasis>& bases,
                                const GameParams& params);

/// Independent oracle: direct double sum of P(c,c|x,y) over all safe-set
/// pairs. Agrees with quantum_value to machine precision.
GameValue quantum_value_direct(const Frame& frame, const GameParams& params,
                               double rank_tol = kDefaultRankTol);

/// P(a,b|x,y) = |<v_x^a|v_y^b>|^2 / d. Bob's conjugated vectors are absorbed
/// by the identity <Psi_d| A (x) B |Psi_d> = tr(A B^T)/d.
double joint_probability(const std::map<SafeSet, MeasurementBasis>& bases,
                         const SafeSet& x, const SafeSet& y, int a, int b);

/// Split the winning probability by intersection size j = |X cap Y|.
DecompositionReport decompose_by_intersection(const Frame& frame,
                                              const GameParams& params,
                                              double rank_tol = kDefaultRankTol);

/// quantum_value / classical_value.
double advantage_ratio(const Frame& frame, const GameParams& params,
                       double rank_tol = kDefaultRankTol);

}  // namespace jamming
