#pragma once

#include <cstdint>
#include <string>

#include "jamming/combinatorics.hpp"

namespace jamming {

struct EstimateResult {
    double mean = 0.0;
    double stderr_ = 0.0;  // sample standard deviation / sqrt(samples)
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string quantity;        // "alpha" | "alpha_pgm" | "Lj" | "Ewq"
    std::uint64_t resamples = 0;  // degenerate draws redrawn (should be ~0)
};

/// Alignment parameter alpha_d = E[<0|S_X^{-1/2}|0>^2]: phi_0 = e_0 fixed,
/// d-1 further Haar vectors drawn per sample.
EstimateResult estimate_alpha(int d, std::uint64_t samples, std::uint64_t seed);

/// Same quantity via the PGM success probability for d Haar-random states:
/// P = (1/d) sum_a <phi_a|S^{-1/2}|phi_a>^2.
EstimateResult estimate_alpha_via_pgm(int d, std::uint64_t samples,
                                      std::uint64_t seed);

/// Expected squared Lowdin overlap L_j for safe sets intersecting in j
/// channels. Samples one canonical pair per j (the overlap law depends only
/// on j); j = d returns exactly 1.
EstimateResult estimate_Lj(const GameParams& params, int j,
                           std::uint64_t samples, std::uint64_t seed);

enum class EwqMethod { Direct, Decomposed };

/// E[omega_q] over Haar-random seed frames: direct averages quantum_value
/// per sampled frame; decomposed assembles (d/n) sum_j p(j) L_j from
/// per-j estimates.
EstimateResult estimate_Ewq(const GameParams& params, std::uint64_t samples,
                            std::uint64_t seed,
                            EwqMethod method = EwqMethod::Direct);

}  // namespace jamming
