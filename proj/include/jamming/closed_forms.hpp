#pragma once

#include <string>

namespace jamming {

/// Constants that appear in the asymptotic analysis.
struct AsymptoticConstants {
    double montanaro_bound;    // 64 / (9 pi^2), liminf of alpha_d
    double harmonic_limit;     // 3/4 + 3/pi^2, limit of the d=2 harmonic ratio
    double large_d_ratio_bound;  // 2 (8/(3 pi))^4
    double alpha_2;            // 5/6

    static AsymptoticConstants values();
};

enum class TnMethod { Sum, Closed };

/// T_n = sum_{D=1}^{n-2} (n-1-D) cos(pi D / n)
///     = 1 / (2 sin^2(pi/(2n))) - n/2. Requires n >= 3.
double t_n(int n, TnMethod method = TnMethod::Closed);

/// Quantum value of the d=2 harmonic strategy:
/// 1/(n-1) + 2 T_n / (n (n-1)^2). Requires n >= 3.
double harmonic_d2_value(int n);

/// Squared overlap of same-channel Lowdin vectors for d=2 harmonic safe sets
/// {0, m1}, {0, m2}: cos^2(pi |m2 - m1| / (2n)). Requires 1 <= m1, m2 <= n-1.
double cross_overlap_d2(int n, int m1, int m2);

struct SimplexValue {
    double mu = 0.0;     // cross-context overlap
    double omega = 0.0;  // quantum value of the (d+1, 1) simplex strategy
};

/// mu = (d^3 - 3d - 2 + 2 (d+1)^{3/2}) / (d^2 (d+1));
/// omega = (1 + (d-1) mu^2) / (d+1). Requires d >= 2.
SimplexValue simplex_value(int d);

/// Root of (d+1) mu(d)^2 - d in (5, 6), by bisection to 1e-6. The simplex
/// strategy beats the classical value exactly for d below this crossover.
double simplex_crossover();

struct RandomFrameFormulas {
    double L1 = 0.0;     // alpha^2 + (1 - alpha)^2 / (d - 1)
    double ratio = 0.0;  // fixed-d asymptotic advantage ratio (2d-1) L1 / d
};

/// Alignment formula for Haar-random seed frames. Requires d >= 2 and
/// alpha in (0, 1].
RandomFrameFormulas random_frame_formulas(int d, double alpha);

/// 3/4 + 3/pi^2, the n -> infinity advantage ratio of the d=2 harmonic
/// strategy.
double harmonic_asymptotic_ratio();

}  // namespace jamming
