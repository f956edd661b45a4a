#include "jamming/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace jamming {

namespace {

std::vector<int> intersection(const SafeSet& x, const SafeSet& y) {
    std::vector<int> out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                          std::back_inserter(out));
    return out;
}

}  // namespace

GameValue quantum_value(const Frame& frame, const GameParams& params,
                        double rank_tol) {
    auto bases = all_bases(frame, params, rank_tol);
    GameValue out{quantum_value_from_bases(bases, params), params, "trace",
                  frame.label};
    return out;
}

double quantum_value_from_bases(const std::map<SafeSet, MeasurementBasis>& bases,
                                const GameParams& params) {
    const int d = params.d;
    const double num_sets = static_cast<double>(bases.size());

    double total = 0.0;
    for (int c = 0; c < params.n; ++c) {
        ComplexMatrix a_c = ComplexMatrix::Zero(d, d);
        for (const auto& [x, basis] : bases) {
            if (!std::binary_search(x.begin(), x.end(), c)) continue;
            ComplexVector v = basis.vector_for(c);
            a_c += v * v.adjoint();
        }
        total += a_c.squaredNorm();  // tr[A_c^2] for Hermitian A_c
    }
    return total / (d * num_sets * num_sets);
}

GameValue quantum_value_direct(const Frame& frame, const GameParams& params,
                               double rank_tol) {
    auto bases = all_bases(frame, params, rank_tol);
    const int d = params.d;
    const double num_sets = static_cast<double>(bases.size());

    double total = 0.0;
    for (const auto& [x, bx] : bases) {
        for (const auto& [y, by] : bases) {
            for (int c : intersection(x, y)) {
                total += std::norm(bx.vector_for(c).dot(by.vector_for(c)));
            }
        }
    }
    return {total / (d * num_sets * num_sets), params, "direct", frame.label};
}

double joint_probability(const std::map<SafeSet, MeasurementBasis>& bases,
                         const SafeSet& x, const SafeSet& y, int a, int b) {
    auto ix = bases.find(x);
    auto iy = bases.find(y);
    if (ix == bases.end() || iy == bases.end()) {
        throw std::invalid_argument("safe set not present in basis collection");
    }
    const int d = static_cast<int>(ix->second.vectors.rows());
    return std::norm(ix->second.vector_for(a).dot(iy->second.vector_for(b))) / d;
}

DecompositionReport decompose_by_intersection(const Frame& frame,
                                              const GameParams& params,
                                              double rank_tol) {
    auto bases = all_bases(frame, params, rank_tol);
    const int d = params.d;
    const int j_min = std::max(1, 2 * d - params.n);

    std::map<int, double> sums;
    std::map<int, std::uint64_t> counts;
    for (const auto& [x, bx] : bases) {
        for (const auto& [y, by] : bases) {
            auto common = intersection(x, y);
            const int j = static_cast<int>(common.size());
            if (j == 0) continue;
            for (int c : common) {
                sums[j] += std::norm(bx.vector_for(c).dot(by.vector_for(c)));
                counts[j] += 1;
            }
        }
    }

    DecompositionReport report;
    double recon = 0.0;
    for (int j = j_min; j <= d; ++j) {
        DecompositionRow row;
        row.j = j;
        row.weight = static_cast<double>(hypergeom_pj(params, j));
        row.pair_count = counts.count(j) ? counts[j] : 0;
        row.mean_sq_overlap = row.pair_count > 0 ? sums[j] / row.pair_count : 0.0;
        recon += row.weight * row.mean_sq_overlap;
        report.per_j.push_back(row);
    }
    report.reconstructed_omega = static_cast<double>(d) / params.n * recon;
    return report;
}

double advantage_ratio(const Frame& frame, const GameParams& params,
                       double rank_tol) {
    return quantum_value(frame, params, rank_tol).omega /
           classical_value(params).value;
}

}  // namespace jamming
