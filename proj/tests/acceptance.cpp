// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the full published-table and statistical budgets, so it is
// slower than the unit suite.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "jamming/closed_forms.hpp"
#include "jamming/game.hpp"
#include "jamming/montecarlo.hpp"
#include "jamming/optimize.hpp"
#include "jamming/rng.hpp"

using namespace jamming;
using json = nlohmann::json;

#ifndef JAMGAME_DATA_DIR
#define JAMGAME_DATA_DIR "data"
#endif

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, double seconds,
            const std::string& detail = "") {
    std::printf("%s  criterion %2d: %-55s (%.1fs)%s%s\n", pass ? "PASS" : "FAIL",
                criterion, what.c_str(), seconds, detail.empty() ? "" : "  -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

void run(int criterion, const std::string& what,
         const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(criterion, what, pass, seconds, detail);
}

Frame frame_by_name(const std::string& name, int n, int d) {
    if (name == "harmonic") return harmonic_frame(n, d);
    if (name == "simplex") return simplex_frame(d);
    if (name == "mub") return mub_frame(d);
    if (name == "alltop") return alltop_frame(n, d);
    if (name == "sic") {
        if (d == 4) return load_frame(std::string(JAMGAME_DATA_DIR) + "/sic_d4.json");
        return sic_frame(d);
    }
    throw std::invalid_argument("unknown family " + name);
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

int main() {
    const json targets = [] {
        std::ifstream in(std::string(JAMGAME_DATA_DIR) + "/published_targets.json");
        json j;
        in >> j;
        return j;
    }();

    // 1. classical_value equals the aligned exhaustive search exactly on
    //    every game whose strategy space fits the budget.
    run(1, "classical value matches exhaustive search exactly", [](std::string& detail) {
        std::vector<GameParams> cases;
        for (int n = 2; n <= 12; ++n) {
            for (int k = 1; k < n; ++k) {
                GameParams p = GameParams::make(n, k);
                double size = std::pow(double(p.d), double(binomial_u64(n, p.d)));
                if (size <= 1e6) cases.push_back(p);
            }
        }
        // The mandated minimum set must be present.
        for (auto [n, k] : {std::pair{3, 1}, {4, 1}, {4, 2}, {5, 3}, {5, 1}}) {
            bool found = false;
            for (const auto& p : cases) found = found || (p.n == n && p.k == k);
            if (!found) {
                detail = "required case missing from budget sweep";
                return false;
            }
        }
        for (const auto& p : cases) {
            auto bf = brute_force_classical(p, BruteForceMode::Aligned);
            if (bf.value.exact != classical_value(p).exact) {
                detail = "mismatch at (" + std::to_string(p.n) + "," +
                         std::to_string(p.k) + ")";
                return false;
            }
        }
        detail = std::to_string(cases.size()) + " games checked";
        return true;
    });

    // 2. Unrestricted (f,g) search achieves no more than the aligned one.
    run(2, "aligned strategies are optimal for (3,1) and (4,1)", [](std::string& detail) {
        for (auto [n, k] : {std::pair{3, 1}, {4, 1}}) {
            GameParams p = GameParams::make(n, k);
            auto aligned = brute_force_classical(p, BruteForceMode::Aligned);
            auto full = brute_force_classical(p, BruteForceMode::Full, 100'000'000);
            if (full.value.exact != aligned.value.exact) {
                detail = "full search beat aligned at (" + std::to_string(n) + "," +
                         std::to_string(k) + ")";
                return false;
            }
        }
        return true;
    });

    // 3. Deterministic cells of the frame-comparison table at 4 decimals.
    run(3, "frame-comparison table: deterministic cells at 4 d.p.",
        [&](std::string& detail) {
            const double tol = 0.5e-4 + 1e-12;
            int cells = 0;
            for (const auto& row :
                 targets["tables"]["frame-comparison"]["rows"]) {
                int n = row[0], d = row[1], k = row[2];
                GameParams p = GameParams::make(n, k);
                if (!close(classical_value(p).value, row[3], tol)) {
                    detail = "classical mismatch at n=" + std::to_string(n);
                    return false;
                }
                ++cells;
                const char* fams[] = {"simplex", "harmonic", "mub", "sic", "alltop"};
                for (int i = 0; i < 5; ++i) {
                    if (row[4 + i].is_null()) continue;
                    double v = quantum_value(frame_by_name(fams[i], n, d), p).omega;
                    if (!close(v, row[4 + i], tol)) {
                        detail = std::string(fams[i]) + " mismatch at (n=" +
                                 std::to_string(n) + ", d=" + std::to_string(d) + ")";
                        return false;
                    }
                    ++cells;
                }
            }
            detail = std::to_string(cells) + " cells";
            return true;
        });

    // 4. Harmonic d=2 closed form vs pipeline; published table; limit ratio.
    run(4, "harmonic closed form, advantage table, asymptotic ratio",
        [&](std::string& detail) {
            for (int n = 3; n <= 50; ++n) {
                double pipeline =
                    quantum_value(harmonic_frame(n, 2), GameParams::make(n, n - 2)).omega;
                if (!close(harmonic_d2_value(n), pipeline, 1e-10)) {
                    detail = "closed form deviates at n=" + std::to_string(n);
                    return false;
                }
            }
            const double tol4 = 0.5e-4 + 1e-12, tol3 = 0.5e-3 + 1e-12;
            for (const auto& row : targets["tables"]["harmonic-advantage"]["rows"]) {
                int d = row[0], n = row[1];
                GameParams p = GameParams::make(n, n - d);
                double wq = quantum_value(harmonic_frame(n, d), p).omega;
                double wc = classical_value(p).value;
                if (!close(wq, row[2], tol4) || !close(wc, row[3], tol4) ||
                    !close(wq / wc, row[4], tol3)) {
                    detail = "table mismatch at (d=" + std::to_string(d) +
                             ", n=" + std::to_string(n) + ")";
                    return false;
                }
            }
            double ratio = harmonic_d2_value(1000) / classical_value_d2(1000).value;
            if (!close(ratio, harmonic_asymptotic_ratio(), 1e-3)) {
                detail = "n=1000 ratio off the 3/4 + 3/pi^2 limit";
                return false;
            }
            return true;
        });

    // 5. Simplex closed form, advantage window, crossover root.
    run(5, "simplex closed form, advantage iff d <= 5, crossover",
        [](std::string& detail) {
            for (int d = 2; d <= 8; ++d) {
                SimplexValue sv = simplex_value(d);
                double pipeline =
                    quantum_value(simplex_frame(d), GameParams::make(d + 1, 1)).omega;
                if (!close(sv.omega, pipeline, 1e-10)) {
                    detail = "pipeline deviates at d=" + std::to_string(d);
                    return false;
                }
            }
            for (int d = 2; d <= 20; ++d) {
                double wc = classical_value(GameParams::make(d + 1, 1)).value;
                if ((simplex_value(d).omega > wc) != (d <= 5)) {
                    detail = "advantage window wrong at d=" + std::to_string(d);
                    return false;
                }
            }
            double d_star = simplex_crossover();
            if (!close(d_star, 5.70, 0.01)) {
                detail = "crossover " + std::to_string(d_star);
                return false;
            }
            return true;
        });

    // 6. Trace-form evaluation equals the direct double sum.
    run(6, "trace and direct omega_q agree to 1e-12 across families",
        [](std::string& detail) {
            struct Inst {
                std::string family;
                int n, d;
            };
            std::vector<Inst> insts;
            for (int d = 2; d <= 8; ++d) {
                for (int n = d; n <= 20; ++n) {
                    if (binomial(n, d) > 500) continue;
                    insts.push_back({"harmonic", n, d});
                    if (n == d + 1) insts.push_back({"simplex", n, d});
                    if (n == d * d && d <= 3) insts.push_back({"sic", n, d});
                    if (n == d * (d + 1) && (d == 2 || d == 3)) insts.push_back({"mub", n, d});
                    if (is_prime(n) && n >= 5) insts.push_back({"alltop", n, d});
                }
            }
            for (const auto& inst : insts) {
                GameParams p = GameParams::make(inst.n, inst.n - inst.d);
                Frame f = frame_by_name(inst.family, inst.n, inst.d);
                double trace = quantum_value(f, p).omega;
                double direct = quantum_value_direct(f, p).omega;
                if (!close(trace, direct, 1e-12)) {
                    detail = inst.family + " (" + std::to_string(inst.n) + "," +
                             std::to_string(inst.d) + "): |diff| = " +
                             std::to_string(std::abs(trace - direct));
                    return false;
                }
            }
            detail = std::to_string(insts.size()) + " instances";
            return true;
        });

    // 7. Intersection decomposition reconstructs omega_q.
    run(7, "decomposition identity reconstructs omega_q to 1e-10",
        [](std::string& detail) {
            struct Inst {
                Frame frame;
                GameParams params;
            };
            std::vector<Inst> insts;
            for (int d = 2; d <= 5; ++d) {
                for (int n = d + 1; n <= d + 4; ++n) {
                    insts.push_back({harmonic_frame(n, d), GameParams::make(n, n - d)});
                    insts.push_back({random_haar_frame(n, d, 40 + n + d),
                                     GameParams::make(n, n - d)});
                }
                insts.push_back({simplex_frame(d), GameParams::make(d + 1, 1)});
            }
            insts.push_back({sic_frame(2), GameParams::make(4, 2)});
            insts.push_back({mub_frame(2), GameParams::make(6, 4)});
            for (const auto& inst : insts) {
                DecompositionReport rep =
                    decompose_by_intersection(inst.frame, inst.params);
                double omega = quantum_value(inst.frame, inst.params).omega;
                if (!close(rep.reconstructed_omega, omega, 1e-10)) {
                    detail = "mismatch for " + inst.frame.label + " (" +
                             std::to_string(inst.params.n) + "," +
                             std::to_string(inst.params.k) + ")";
                    return false;
                }
            }
            detail = std::to_string(insts.size()) + " instances";
            return true;
        });

    // 8. Monte Carlo estimates at the full 1e6-sample budget.
    run(8, "Monte Carlo: alpha_2, L_1, E[omega_q](3,1), estimator agreement",
        [](std::string& detail) {
            EstimateResult alpha2 = estimate_alpha(2, 1'000'000, 101);
            if (alpha2.stderr_ >= 1e-3) {
                detail = "alpha_2 stderr too large";
                return false;
            }
            if (!close(alpha2.mean, 5.0 / 6.0, 3.0 * alpha2.stderr_)) {
                detail = "alpha_2 off 5/6";
                return false;
            }
            EstimateResult l1 = estimate_Lj(GameParams::make(3, 1), 1, 1'000'000, 102);
            if (!close(l1.mean, 13.0 / 18.0, 3.0 * l1.stderr_)) {
                detail = "L_1(d=2) off 13/18";
                return false;
            }
            EstimateResult ewq = estimate_Ewq(GameParams::make(3, 1), 1'000'000, 103);
            if (!close(ewq.mean, 31.0 / 54.0, 3.0 * ewq.stderr_)) {
                detail = "E[omega_q](3,1) off 31/54";
                return false;
            }
            if (ewq.mean - 5.0 / 9.0 < 3.0 * ewq.stderr_) {
                detail = "no 3-sigma separation above the classical value";
                return false;
            }
            for (int d = 2; d <= 5; ++d) {
                EstimateResult direct = estimate_alpha(d, 100'000, 104 + d);
                EstimateResult pgm = estimate_alpha_via_pgm(d, 100'000, 114 + d);
                double margin = 3.0 * std::sqrt(direct.stderr_ * direct.stderr_ +
                                                pgm.stderr_ * pgm.stderr_);
                if (!close(direct.mean, pgm.mean, margin)) {
                    detail = "alpha estimators disagree at d=" + std::to_string(d);
                    return false;
                }
            }
            return true;
        });

    // 9. Optimization reproduces the published optimized values.
    run(9, "optimizer reproduces Opt. column; rank-1 gap <= 1e-4",
        [&](std::string& detail) {
            OptimizeOptions opts;  // 10 restarts, tol 1e-10, 1000 iterations
            int matched = 0, total = 0;
            std::string misses;
            double omega76_opt = 0.0;
            for (const auto& row : targets["tables"]["ansatz-comparison"]["rows"]) {
                int n = row[0], d = row[1];
                GameParams p = GameParams::make(n, n - d);
                double seed_val = optimize_seed(p, opts, 1).best_value;
                double gen_val = optimize_rank1(p, opts, 1).best_value;
                ++total;
                if (close(seed_val, row[2], 1e-3) &&
                    std::abs(gen_val - seed_val) <= 1e-4) {
                    ++matched;
                } else {
                    misses += " (" + std::to_string(n) + "," + std::to_string(d) + ")";
                }
                if (n == 7 && d == 6) omega76_opt = seed_val;
            }
            double wc76 = classical_value(GameParams::make(7, 1)).value;
            if (omega76_opt >= wc76) {
                detail = "(7,6) optimized value not below the classical value";
                return false;
            }
            detail = std::to_string(matched) + "/" + std::to_string(total) +
                     " points matched" + misses;
            return matched >= 9 && total == 11;
        });

    // 10. Randomized property suite (compact re-run of the documented
    //     invariants; the unit suite covers them in more detail).
    run(10, "randomized invariants on 100 instances per property",
        [](std::string& detail) {
            std::normal_distribution<double> gauss;
            for (int i = 0; i < 100; ++i) {
                auto rng = stream_rng(900 + i, 3);
                int d = 2 + static_cast<int>(rng() % 4);  // 2..5
                int n = d + 1 + static_cast<int>(rng() % 3);
                Frame f = random_haar_frame(n, d, 900 + i);
                GameParams p = GameParams::make(n, n - d);

                // Welch bound.
                double coh = coherence(f);
                if (coh * coh < welch_bound_sq(n, d) - 1e-12) {
                    detail = "Welch bound violated";
                    return false;
                }
                // Gershgorin containment for a random safe set.
                auto sets = enumerate_safe_sets(p);
                SafeSet x = sets[rng() % sets.size()];
                EigDecomposition eig = hermitian_eig(gram_matrix(f, x));
                double radius = (d - 1) * coh;
                if (eig.eigenvalues.minCoeff() < 1.0 - radius - 1e-9 ||
                    eig.eigenvalues.maxCoeff() > 1.0 + radius + 1e-9) {
                    detail = "Gershgorin containment violated";
                    return false;
                }
                // Lowdin orthonormality/completeness.
                MeasurementBasis basis = lowdin_basis(f, x);
                if (basis.projective) {
                    ComplexMatrix v = basis.vectors;
                    if ((v.adjoint() * v - ComplexMatrix::Identity(d, d)).norm() > 1e-9 ||
                        (v * v.adjoint() - ComplexMatrix::Identity(d, d)).norm() > 1e-9) {
                        detail = "Lowdin basis not orthonormal/complete";
                        return false;
                    }
                }
                // Global phase and global unitary invariance.
                double before = quantum_value(f, p).omega;
                Frame phased = f;
                phased.vectors.col(rng() % n) *= Complex(0.6, 0.8);
                if (!close(before, quantum_value(phased, p).omega, 1e-12)) {
                    detail = "global phase changed omega_q";
                    return false;
                }
                ComplexMatrix a(d, d);
                auto rng2 = stream_rng(900 + i, 4);
                for (int r = 0; r < d; ++r)
                    for (int c = 0; c < d; ++c)
                        a(r, c) = Complex(gauss(rng2), gauss(rng2));
                Eigen::HouseholderQR<ComplexMatrix> qr(a);
                Frame rotated = f;
                rotated.vectors = ComplexMatrix(qr.householderQ()) * rotated.vectors;
                if (!close(before, quantum_value(rotated, p).omega, 1e-10)) {
                    detail = "global unitary changed omega_q";
                    return false;
                }
                // Joint probability normalization.
                auto bases = all_bases(f, p);
                SafeSet y = sets[rng() % sets.size()];
                double total = 0.0;
                for (int aa : x)
                    for (int bb : y) {
                        double prob = joint_probability(bases, x, y, aa, bb);
                        if (prob < -1e-15) {
                            detail = "negative probability";
                            return false;
                        }
                        total += prob;
                    }
                if (total > 1.0 + 1e-9) {
                    detail = "joint distribution exceeds 1";
                    return false;
                }
                if (bases.at(x).projective && bases.at(y).projective &&
                    !close(total, 1.0, 1e-9)) {
                    detail = "projective joint distribution not normalized";
                    return false;
                }
            }
            // Equivariance properties on harmonic frames.
            for (int i = 0; i < 100; ++i) {
                int d = 2 + (i % 3);
                int n = d + 2 + (i % 4);
                Frame f = harmonic_frame(n, d);
                GameParams p = GameParams::make(n, n - d);
                auto sets = enumerate_safe_sets(p);
                auto rng = stream_rng(950 + i, 5);
                SafeSet x = sets[rng() % sets.size()];
                SafeSet y = sets[rng() % sets.size()];
                ComplexMatrix clock = ComplexMatrix::Zero(d, d);
                for (int jj = 0; jj < d; ++jj) {
                    double angle = 2.0 * std::numbers::pi * jj / n;
                    clock(jj, jj) = Complex(std::cos(angle), std::sin(angle));
                }
                SafeSet shifted;
                for (int c : x) shifted.push_back((c + 1) % n);
                std::sort(shifted.begin(), shifted.end());
                MeasurementBasis bx = lowdin_basis(f, x);
                MeasurementBasis bs = lowdin_basis(f, shifted);
                for (int c : x) {
                    if ((clock * bx.vector_for(c) - bs.vector_for((c + 1) % n)).norm() >
                        1e-9) {
                        detail = "permutation equivariance violated";
                        return false;
                    }
                }
                std::vector<int> common;
                std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                                      std::back_inserter(common));
                if (common.empty()) continue;
                int c = common[rng() % common.size()];
                auto shift = [&](const SafeSet& s) {
                    SafeSet out;
                    for (int ch : s) out.push_back(((ch - c) % n + n) % n);
                    std::sort(out.begin(), out.end());
                    return out;
                };
                double direct = std::norm(lowdin_basis(f, x).vector_for(c).dot(
                    lowdin_basis(f, y).vector_for(c)));
                double reduced = std::norm(lowdin_basis(f, shift(x)).vector_for(0).dot(
                    lowdin_basis(f, shift(y)).vector_for(0)));
                if (!close(direct, reduced, 1e-10)) {
                    detail = "cyclic reduction violated";
                    return false;
                }
            }
            return true;
        });

    std::printf("%s\n", failures == 0 ? "ACCEPTANCE: all criteria passed"
                                      : "ACCEPTANCE: FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
