#include "jamming/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jamming {

namespace {
constexpr double kPi = std::numbers::pi;
}

AsymptoticConstants AsymptoticConstants::values() {
    AsymptoticConstants c;
    c.montanaro_bound = 64.0 / (9.0 * kPi * kPi);
    c.harmonic_limit = 0.75 + 3.0 / (kPi * kPi);
    double base = 8.0 / (3.0 * kPi);
    c.large_d_ratio_bound = 2.0 * base * base * base * base;
    c.alpha_2 = 5.0 / 6.0;
    return c;
}

double t_n(int n, TnMethod method) {
    if (n < 3) throw std::invalid_argument("t_n requires n >= 3");
    if (method == TnMethod::Sum) {
        double total = 0.0;
        for (int delta = 1; delta <= n - 2; ++delta) {
            total += (n - 1 - delta) * std::cos(kPi * delta / n);
        }
        return total;
    }
    double s = std::sin(kPi / (2.0 * n));
    return 1.0 / (2.0 * s * s) - n / 2.0;
}

double harmonic_d2_value(int n) {
    if (n < 3) throw std::invalid_argument("harmonic_d2_value requires n >= 3");
    double nm1 = n - 1.0;
    return 1.0 / nm1 + 2.0 * t_n(n) / (n * nm1 * nm1);
}

double cross_overlap_d2(int n, int m1, int m2) {
    if (m1 < 1 || m1 > n - 1 || m2 < 1 || m2 > n - 1) {
        throw std::invalid_argument("cross_overlap_d2 requires 1 <= m1, m2 <= n-1");
    }
    double c = std::cos(kPi * std::abs(m2 - m1) / (2.0 * n));
    return c * c;
}

SimplexValue simplex_value(int d) {
    if (d < 2) throw std::invalid_argument("simplex_value requires d >= 2");
    double dd = d;
    double mu = (dd * dd * dd - 3.0 * dd - 2.0 + 2.0 * std::pow(dd + 1.0, 1.5)) /
                (dd * dd * (dd + 1.0));
    double omega = (1.0 + (dd - 1.0) * mu * mu) / (dd + 1.0);
    return {mu, omega};
}

double simplex_crossover() {
    // Sign change of (d+1) mu(d)^2 - d is bracketed by the integer crossover:
    // positive at d = 5, negative at d = 6.
    auto f = [](double d) {
        double mu = (d * d * d - 3.0 * d - 2.0 + 2.0 * std::pow(d + 1.0, 1.5)) /
                    (d * d * (d + 1.0));
        return (d + 1.0) * mu * mu - d;
    };
    double lo = 5.0, hi = 6.0;
    while (hi - lo > 1e-6) {
        double mid = (lo + hi) / 2.0;
        if (f(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2.0;
}

RandomFrameFormulas random_frame_formulas(int d, double alpha) {
    if (d < 2) throw std::invalid_argument("random_frame_formulas requires d >= 2");
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1]");
    }
    RandomFrameFormulas out;
    out.L1 = alpha * alpha + (1.0 - alpha) * (1.0 - alpha) / (d - 1.0);
    out.ratio = (2.0 * d - 1.0) * out.L1 / d;
    return out;
}

double harmonic_asymptotic_ratio() { return 0.75 + 3.0 / (kPi * kPi); }

}  // namespace jamming
