#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jamming/combinatorics.hpp"
#include "jamming/frames.hpp"

namespace jamming {

struct NonFiniteObjective : std::runtime_error {
    NonFiniteObjective() : std::runtime_error("objective became non-finite") {}
};

struct OptimizationResult {
    double best_value = 0.0;
    Frame best_frame;  // for rank-1 optimization, a basis-equivalent record is
                       // kept in best_bases instead
    std::optional<std::vector<ComplexMatrix>> best_bases;  // one unitary per safe set
    int restarts = 0;
    int converged_restarts = 0;
    std::vector<double> per_restart_values;
    double tolerance = 0.0;
    std::uint64_t seed = 0;
};

struct OptimizeOptions {
    int restarts = 10;
    double tol = 1e-10;
    int max_iterations = 1000;
    std::uint64_t budget = 10'000'000;
};

/// Maximize omega_q over seed frames: n unit vectors in C^d, parametrized by
/// 2nd reals with normalization inside the objective. Quasi-Newton (L-BFGS)
/// with central finite-difference gradients; best over random restarts.
OptimizationResult optimize_seed(const GameParams& params,
                                 const OptimizeOptions& opts, std::uint64_t seed);

/// Maximize omega_q over unconstrained per-safe-set projective rank-1
/// measurements: each safe set's basis is the column set of exp(iH) for a
/// Hermitian parameter H.
OptimizationResult optimize_rank1(const GameParams& params,
                                  const OptimizeOptions& opts, std::uint64_t seed);

struct ScanRow {
    int n = 0;
    double omega_q = 0.0;
    double omega_c = 0.0;
    double ratio = 0.0;
    bool skipped = false;
    std::string reason;
};

/// Evaluate one frame family over a range of n at fixed d. Families:
/// harmonic | simplex | sic | mub | alltop. Unconstructible rows are marked
/// skipped with a reason.
std::vector<ScanRow> scan(const std::string& family, int d, int n_min, int n_max);

}  // namespace jamming
