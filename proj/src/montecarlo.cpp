#include "jamming/montecarlo.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "jamming/game.hpp"
#include "jamming/linalg.hpp"
#include "jamming/rng.hpp"

namespace jamming {

namespace {

ComplexVector haar_vector(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    ComplexVector v(d);
    for (int j = 0; j < d; ++j) {
        double re = gauss(rng);
        double im = gauss(rng);
        v(j) = Complex(re, im);
    }
    return v / v.norm();
}

bool near_singular(const ComplexMatrix& gram) {
    EigDecomposition eig = hermitian_eig(gram);
    double lambda_max = eig.eigenvalues(eig.eigenvalues.size() - 1);
    return eig.eigenvalues(0) <= kDefaultRankTol * std::max(lambda_max, 1.0);
}

/// Welford-free accumulation: plain sums suffice at <= 1e7 samples.
EstimateResult finalize(double sum, double sum_sq, std::uint64_t samples,
                        std::uint64_t seed, const std::string& quantity,
                        std::uint64_t resamples) {
    EstimateResult out;
    out.mean = sum / samples;
    double var = samples > 1
                     ? (sum_sq - sum * sum / samples) / (samples - 1.0)
                     : 0.0;
    out.stderr_ = std::sqrt(std::max(var, 0.0) / samples);
    out.samples = samples;
    out.seed = seed;
    out.quantity = quantity;
    out.resamples = resamples;
    return out;
}

}  // namespace

EstimateResult estimate_alpha(int d, std::uint64_t samples, std::uint64_t seed) {
    if (d < 2 || samples < 1) {
        throw std::invalid_argument("estimate_alpha requires d >= 2, samples >= 1");
    }
    double sum = 0.0, sum_sq = 0.0;
    std::uint64_t resamples = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        auto rng = stream_rng(seed, i);
        double value;
        for (;;) {
            ComplexMatrix phi(d, d);
            phi.col(0) = ComplexVector::Unit(d, 0);
            for (int c = 1; c < d; ++c) phi.col(c) = haar_vector(d, rng);
            ComplexMatrix s = phi * phi.adjoint();
            s = (s + s.adjoint().eval()) / 2.0;
            if (near_singular(s)) {
                ++resamples;
                continue;
            }
            Complex diag = inv_sqrt(s).matrix(0, 0);
            value = diag.real() * diag.real();
            break;
        }
        sum += value;
        sum_sq += value * value;
    }
    return finalize(sum, sum_sq, samples, seed, "alpha", resamples);
}

EstimateResult estimate_alpha_via_pgm(int d, std::uint64_t samples,
                                      std::uint64_t seed) {
    if (d < 2 || samples < 1) {
        throw std::invalid_argument(
            "estimate_alpha_via_pgm requires d >= 2, samples >= 1");
    }
    double sum = 0.0, sum_sq = 0.0;
    std::uint64_t resamples = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        auto rng = stream_rng(seed, i);
        double value;
        for (;;) {
            ComplexMatrix phi(d, d);
            for (int c = 0; c < d; ++c) phi.col(c) = haar_vector(d, rng);
            ComplexMatrix s = phi * phi.adjoint();
            s = (s + s.adjoint().eval()) / 2.0;
            if (near_singular(s)) {
                ++resamples;
                continue;
            }
            ComplexMatrix root = inv_sqrt(s).matrix;
            double p = 0.0;
            for (int a = 0; a < d; ++a) {
                double overlap = (phi.col(a).adjoint() * root * phi.col(a))(0).real();
                p += overlap * overlap;
            }
            value = p / d;
            break;
        }
        sum += value;
        sum_sq += value * value;
    }
    return finalize(sum, sum_sq, samples, seed, "alpha_pgm", resamples);
}

EstimateResult estimate_Lj(const GameParams& params, int j,
                           std::uint64_t samples, std::uint64_t seed) {
    const int d = params.d;
    const int j_min = std::max(1, 2 * d - params.n);
    if (j < j_min || j > d) throw std::invalid_argument("j out of range");
    if (samples < 1) throw std::invalid_argument("samples >= 1 required");

    if (j == d) {
        // X = Y: the same basis vector, overlap exactly 1.
        EstimateResult out;
        out.mean = 1.0;
        out.stderr_ = 0.0;
        out.samples = samples;
        out.seed = seed;
        out.quantity = "Lj";
        return out;
    }

    // Canonical pair: X = {0..d-1}, Y = {0..j-1} u {d..2d-j-1}; channel 0 is
    // shared. The union has 2d - j <= n channels.
    const int m = 2 * d - j;
    double sum = 0.0, sum_sq = 0.0;
    std::uint64_t resamples = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        auto rng = stream_rng(seed, i);
        double value;
        for (;;) {
            ComplexMatrix phi(d, m);
            for (int c = 0; c < m; ++c) phi.col(c) = haar_vector(d, rng);
            ComplexMatrix phi_x = phi.leftCols(d);
            ComplexMatrix phi_y(d, d);
            phi_y.leftCols(j) = phi.leftCols(j);
            phi_y.rightCols(d - j) = phi.rightCols(d - j);

            ComplexMatrix gx = phi_x.adjoint() * phi_x;
            ComplexMatrix gy = phi_y.adjoint() * phi_y;
            gx = (gx + gx.adjoint().eval()) / 2.0;
            gy = (gy + gy.adjoint().eval()) / 2.0;
            if (near_singular(gx) || near_singular(gy)) {
                ++resamples;
                continue;
            }
            ComplexVector vx = phi_x * inv_sqrt(gx).matrix.col(0);
            ComplexVector vy = phi_y * inv_sqrt(gy).matrix.col(0);
            value = std::norm(vx.dot(vy));
            break;
        }
        sum += value;
        sum_sq += value * value;
    }
    return finalize(sum, sum_sq, samples, seed, "Lj", resamples);
}

EstimateResult estimate_Ewq(const GameParams& params, std::uint64_t samples,
                            std::uint64_t seed, EwqMethod method) {
    if (samples < 1) throw std::invalid_argument("samples >= 1 required");
    const int d = params.d;

    if (method == EwqMethod::Decomposed) {
        const int j_min = std::max(1, 2 * d - params.n);
        double mean = 0.0, var = 0.0;
        std::uint64_t resamples = 0;
        for (int j = j_min; j <= d; ++j) {
            double p = static_cast<double>(hypergeom_pj(params, j));
            // Independent per-j streams derived from the master seed.
            EstimateResult lj =
                estimate_Lj(params, j, samples, mix64(seed) ^ static_cast<std::uint64_t>(j));
            mean += p * lj.mean;
            var += p * p * lj.stderr_ * lj.stderr_;
            resamples += lj.resamples;
        }
        EstimateResult out;
        out.mean = static_cast<double>(d) / params.n * mean;
        out.stderr_ = static_cast<double>(d) / params.n * std::sqrt(var);
        out.samples = samples;
        out.seed = seed;
        out.quantity = "Ewq";
        out.resamples = resamples;
        return out;
    }

    if (binomial(params.n, d) > 500) {
        throw BudgetExceeded(static_cast<std::uint64_t>(binomial_u64(params.n, d)));
    }
    double sum = 0.0, sum_sq = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        auto rng = stream_rng(seed, i);
        Frame frame{params.n, d, ComplexMatrix(d, params.n), "random"};
        for (int c = 0; c < params.n; ++c) frame.vectors.col(c) = haar_vector(d, rng);
        double value = quantum_value(frame, params).omega;
        sum += value;
        sum_sq += value * value;
    }
    return finalize(sum, sum_sq, samples, seed, "Ewq", 0);
}

}  // namespace jamming
