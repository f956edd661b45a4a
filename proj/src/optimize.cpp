#include "jamming/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <random>
#include <stdexcept>

#include "jamming/game.hpp"
#include "jamming/measurement.hpp"
#include "jamming/rng.hpp"

namespace jamming {

namespace {

using Eigen::VectorXd;
using Objective = std::function<double(const VectorXd&)>;

VectorXd numerical_gradient(const Objective& f, const VectorXd& x) {
    const double h = 1e-6;
    VectorXd g(x.size());
    VectorXd probe = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        probe(i) = x(i) + h;
        double fp = f(probe);
        probe(i) = x(i) - h;
        double fm = f(probe);
        probe(i) = x(i);
        g(i) = (fp - fm) / (2.0 * h);
    }
    return g;
}

struct LbfgsOutcome {
    VectorXd x;
    double value = 0.0;
    bool converged = false;
};

/// Limited-memory BFGS minimization with backtracking Armijo line search.
LbfgsOutcome lbfgs_minimize(const Objective& f, VectorXd x, double tol,
                            int max_iterations) {
    constexpr int kHistory = 8;
    std::deque<VectorXd> s_hist, y_hist;

    double fx = f(x);
    if (!std::isfinite(fx)) throw NonFiniteObjective();
    VectorXd g = numerical_gradient(f, x);

    LbfgsOutcome out;
    for (int iter = 0; iter < max_iterations; ++iter) {
        if (g.norm() < 1e-9) {
            out.converged = true;
            break;
        }

        // Two-loop recursion for the search direction.
        VectorXd q = g;
        const int m = static_cast<int>(s_hist.size());
        std::vector<double> alpha(m), rho(m);
        for (int i = m - 1; i >= 0; --i) {
            rho[i] = 1.0 / y_hist[i].dot(s_hist[i]);
            alpha[i] = rho[i] * s_hist[i].dot(q);
            q -= alpha[i] * y_hist[i];
        }
        if (m > 0) {
            q *= s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
        }
        for (int i = 0; i < m; ++i) {
            double beta = rho[i] * y_hist[i].dot(q);
            q += (alpha[i] - beta) * s_hist[i];
        }
        VectorXd dir = -q;
        double slope = g.dot(dir);
        if (slope >= 0.0) {  // not a descent direction; fall back to steepest
            dir = -g;
            slope = -g.squaredNorm();
        }

        double step = 1.0;
        double f_new = fx;
        VectorXd x_new = x;
        bool progressed = false;
        for (int ls = 0; ls < 40; ++ls) {
            x_new = x + step * dir;
            f_new = f(x_new);
            if (std::isfinite(f_new) && f_new <= fx + 1e-4 * step * slope) {
                progressed = true;
                break;
            }
            step *= 0.5;
        }
        if (!progressed) {
            out.converged = true;  // no improving step at machine resolution
            break;
        }

        VectorXd g_new = numerical_gradient(f, x_new);
        VectorXd s = x_new - x;
        VectorXd y = g_new - g;
        if (s.dot(y) > 1e-10) {
            s_hist.push_back(std::move(s));
            y_hist.push_back(std::move(y));
            if (static_cast<int>(s_hist.size()) > kHistory) {
                s_hist.pop_front();
                y_hist.pop_front();
            }
        }
        double decrease = fx - f_new;
        x = std::move(x_new);
        fx = f_new;
        g = std::move(g_new);
        if (decrease < tol) {
            out.converged = true;
            break;
        }
    }
    out.x = std::move(x);
    out.value = fx;
    return out;
}

/// omega_q from explicit per-safe-set bases: bases[s] is d x d with column i
/// the measurement vector of channel sets[s][i].
double omega_from_bases(const std::vector<SafeSet>& sets,
                        const std::vector<ComplexMatrix>& bases, int n, int d) {
    const double num_sets = static_cast<double>(sets.size());
    // Per-channel index of (set, column) occurrences.
    std::vector<std::vector<std::pair<int, int>>> where(n);
    for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
        for (int i = 0; i < static_cast<int>(sets[s].size()); ++i) {
            where[sets[s][i]].push_back({s, i});
        }
    }
    double total = 0.0;
    ComplexMatrix a_c(d, d);
    for (int c = 0; c < n; ++c) {
        a_c.setZero();
        for (auto [s, i] : where[c]) {
            a_c.noalias() += bases[s].col(i) * bases[s].col(i).adjoint();
        }
        total += a_c.squaredNorm();
    }
    return total / (d * num_sets * num_sets);
}

Frame frame_from_params(const VectorXd& x, int n, int d) {
    Frame frame{n, d, ComplexMatrix(d, n), "optimized"};
    for (int c = 0; c < n; ++c) {
        ComplexVector v(d);
        for (int j = 0; j < d; ++j) {
            v(j) = Complex(x(2 * (c * d + j)), x(2 * (c * d + j) + 1));
        }
        double norm = v.norm();
        if (norm < 1e-12) throw NonFiniteObjective();
        frame.vectors.col(c) = v / norm;
    }
    return frame;
}

void check_budget(const GameParams& params, std::uint64_t budget) {
    std::uint64_t num_sets = binomial_u64(params.n, params.d);
    if (num_sets > budget / std::max<std::uint64_t>(num_sets, 1)) {
        throw BudgetExceeded(num_sets * num_sets);
    }
}

ComplexMatrix hermitian_from_params(const VectorXd& x, int offset, int d) {
    ComplexMatrix h(d, d);
    int idx = offset;
    for (int i = 0; i < d; ++i) {
        h(i, i) = x(idx++);
    }
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            double re = x(idx++);
            double im = x(idx++);
            h(i, j) = Complex(re, im);
            h(j, i) = Complex(re, -im);
        }
    }
    return h;
}

ComplexMatrix unitary_exp(const ComplexMatrix& h) {
    EigDecomposition eig = hermitian_eig(h);
    ComplexVector phases(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
        phases(i) = Complex(std::cos(eig.eigenvalues(i)), std::sin(eig.eigenvalues(i)));
    }
    return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace

OptimizationResult optimize_seed(const GameParams& params,
                                 const OptimizeOptions& opts, std::uint64_t seed) {
    check_budget(params, opts.budget);
    const int n = params.n, d = params.d;
    const auto sets = enumerate_safe_sets(params);
    const int dim = 2 * n * d;

    Objective objective = [&](const VectorXd& x) {
        Frame frame = frame_from_params(x, n, d);
        std::vector<ComplexMatrix> bases;
        bases.reserve(sets.size());
        for (const SafeSet& s : sets) {
            bases.push_back(lowdin_basis(frame, s).vectors);
        }
        double omega = omega_from_bases(sets, bases, n, d);
        if (!std::isfinite(omega)) throw NonFiniteObjective();
        return -omega;
    };

    OptimizationResult result;
    result.restarts = opts.restarts;
    result.tolerance = opts.tol;
    result.seed = seed;
    VectorXd best_x;
    for (int r = 0; r < opts.restarts; ++r) {
        auto rng = stream_rng(seed, static_cast<std::uint64_t>(r));
        std::normal_distribution<double> gauss;
        VectorXd x0(dim);
        for (int i = 0; i < dim; ++i) x0(i) = gauss(rng);

        LbfgsOutcome run = lbfgs_minimize(objective, x0, opts.tol,
                                          opts.max_iterations);
        double value = -run.value;
        result.per_restart_values.push_back(value);
        if (run.converged) ++result.converged_restarts;
        // First restart within 1e-12 of the running max keeps the parameters.
        if (value > result.best_value + 1e-12 || best_x.size() == 0) {
            result.best_value = value;
            best_x = run.x;
        }
    }
    result.best_value = *std::max_element(result.per_restart_values.begin(),
                                          result.per_restart_values.end());
    result.best_frame = frame_from_params(best_x, n, d);
    return result;
}

OptimizationResult optimize_rank1(const GameParams& params,
                                  const OptimizeOptions& opts, std::uint64_t seed) {
    check_budget(params, opts.budget);
    const int n = params.n, d = params.d;
    const auto sets = enumerate_safe_sets(params);
    const int per_set = d * d;  // real parameters of a d x d Hermitian matrix
    const int dim = per_set * static_cast<int>(sets.size());

    auto build_bases = [&](const VectorXd& x) {
        std::vector<ComplexMatrix> bases;
        bases.reserve(sets.size());
        for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
            bases.push_back(unitary_exp(hermitian_from_params(x, s * per_set, d)));
        }
        return bases;
    };
    Objective objective = [&](const VectorXd& x) {
        double omega = omega_from_bases(sets, build_bases(x), n, d);
        if (!std::isfinite(omega)) throw NonFiniteObjective();
        return -omega;
    };

    OptimizationResult result;
    result.restarts = opts.restarts;
    result.tolerance = opts.tol;
    result.seed = seed;
    VectorXd best_x;
    for (int r = 0; r < opts.restarts; ++r) {
        auto rng = stream_rng(seed, static_cast<std::uint64_t>(r));
        std::normal_distribution<double> gauss;
        VectorXd x0(dim);
        for (int i = 0; i < dim; ++i) x0(i) = gauss(rng);

        LbfgsOutcome run = lbfgs_minimize(objective, x0, opts.tol,
                                          opts.max_iterations);
        double value = -run.value;
        result.per_restart_values.push_back(value);
        if (run.converged) ++result.converged_restarts;
        // First restart within 1e-12 of the running max keeps the parameters.
        if (value > result.best_value + 1e-12 || best_x.size() == 0) {
            result.best_value = value;
            best_x = run.x;
        }
    }
    result.best_value = *std::max_element(result.per_restart_values.begin(),
                                          result.per_restart_values.end());
    result.best_bases = build_bases(best_x);
    return result;
}

std::vector<ScanRow> scan(const std::string& family, int d, int n_min, int n_max) {
    std::vector<ScanRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        ScanRow row;
        row.n = n;
        try {
            Frame frame;
            if (family == "harmonic") {
                frame = harmonic_frame(n, d);
            } else if (family == "simplex") {
                if (n != d + 1) throw UnsupportedDimension("simplex requires n = d+1");
                frame = simplex_frame(d);
            } else if (family == "sic") {
                if (n != d * d) throw UnsupportedDimension("sic requires n = d^2");
                frame = sic_frame(d);
            } else if (family == "mub") {
                if (n != d * (d + 1)) {
                    throw UnsupportedDimension("mub requires n = d(d+1)");
                }
                frame = mub_frame(d);
            } else if (family == "alltop") {
                frame = alltop_frame(n, d);
            } else {
                throw std::invalid_argument("unknown frame family: " + family);
            }
            GameParams params = GameParams::make(n, n - d);
            row.omega_q = quantum_value(frame, params).omega;
            row.omega_c = classical_value(params).value;
            row.ratio = row.omega_q / row.omega_c;
        } catch (const std::invalid_argument& e) {
            row.skipped = true;
            row.reason = e.what();
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace jamming
