#include "jamming/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace jamming {

GameParams GameParams::make(int n, int k) {
    if (n < 1 || k < 0 || k >= n) {
        throw std::invalid_argument("GameParams requires 0 <= k < n");
    }
    return GameParams{n, k, n - k};
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

std::uint64_t binomial_u64(int n, int k) {
    BigInt b = binomial(n, k);
    if (b > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("binomial does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(b);
}

std::vector<SafeSet> enumerate_safe_sets(const GameParams& params) {
    const int n = params.n, d = params.d;
    std::vector<SafeSet> out;
    out.reserve(binomial_u64(n, d));
    SafeSet cur(d);
    for (int i = 0; i < d; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == n - d + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

ExactValue classical_value(const GameParams& params) {
    BigInt wins = 0;
    for (int i = 0; i <= params.k; ++i) {
        BigInt t = binomial(params.n - 1 - i, params.k - i);
        wins += t * t;
    }
    BigInt total = binomial(params.n, params.k);
    Rational r(wins, total * total);
    return {r, static_cast<double>(r)};
}

ExactValue classical_value_d2(int n) {
    if (n < 3) throw std::invalid_argument("classical_value_d2 requires n >= 3");
    Rational r(BigInt(2) * (2 * n - 1), BigInt(3) * n * (n - 1));
    return {r, static_cast<double>(r)};
}

ClassicalStrategy greedy_strategy(const GameParams& params) {
    ClassicalStrategy f;
    for (const auto& x : enumerate_safe_sets(params)) f.assignment.push_back(x.front());
    return f;
}

std::vector<std::uint64_t> allocation(const GameParams& params,
                                      const ClassicalStrategy& f) {
    std::vector<std::uint64_t> a(params.n, 0);
    for (int c : f.assignment) ++a[c];
    return a;
}

BigInt win_count(const GameParams& params, const ClassicalStrategy& f,
                 const ClassicalStrategy& g) {
    auto a = allocation(params, f);
    auto b = allocation(params, g);
    BigInt w = 0;
    for (int c = 0; c < params.n; ++c) w += BigInt(a[c]) * b[c];
    return w;
}

namespace {

// Search size d^count with saturation.
std::uint64_t pow_saturating(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        r *= base;
    }
    return r;
}

// Enumerate every valid strategy (each safe set maps to one of its d
// channels) and record the induced allocations.
void for_each_valid_strategy(
    const GameParams& params, const std::vector<SafeSet>& sets,
    const std::function<void(const ClassicalStrategy&)>& visit) {
    const std::size_t m = sets.size();
    std::vector<int> choice(m, 0);
    ClassicalStrategy f;
    f.assignment.resize(m);
    while (true) {
        for (std::size_t i = 0; i < m; ++i) f.assignment[i] = sets[i][choice[i]];
        visit(f);
        std::size_t i = 0;
        while (i < m && choice[i] == params.d - 1) {
            choice[i] = 0;
            ++i;
        }
        if (i == m) break;
        ++choice[i];
    }
}

}  // namespace

BruteForceResult brute_force_classical(const GameParams& params,
                                       BruteForceMode mode,
                                       std::uint64_t budget) {
    auto sets = enumerate_safe_sets(params);
    std::uint64_t aligned_size = pow_saturating(params.d, sets.size());
    std::uint64_t required = mode == BruteForceMode::Aligned
                                 ? aligned_size
                                 : pow_saturating(aligned_size, 2);
    if (required > budget) throw BudgetExceeded(required);

    BigInt total = binomial(params.n, params.d);
    BigInt denom = total * total;

    BigInt best_w = -1;
    ClassicalStrategy best;
    if (mode == BruteForceMode::Aligned) {
        for_each_valid_strategy(params, sets, [&](const ClassicalStrategy& f) {
            auto a = allocation(params, f);
            BigInt w = 0;
            for (auto ac : a) w += BigInt(ac) * ac;
            if (w > best_w) {
                best_w = w;
                best = f;
            }
        });
    } else {
        // Full mode compares every ordered pair (f, g); the win count only
        // depends on allocations, so collect those first.
        std::vector<std::vector<std::uint64_t>> allocs;
        std::vector<ClassicalStrategy> strategies;
        for_each_valid_strategy(params, sets, [&](const ClassicalStrategy& f) {
            allocs.push_back(allocation(params, f));
            strategies.push_back(f);
        });
        for (std::size_t i = 0; i < allocs.size(); ++i) {
            for (std::size_t j = 0; j < allocs.size(); ++j) {
                BigInt w = 0;
                for (int c = 0; c < params.n; ++c) {
                    w += BigInt(allocs[i][c]) * allocs[j][c];
                }
                if (w > best_w) {
                    best_w = w;
                    best = strategies[i];
                }
            }
        }
    }
    Rational r(best_w, denom);
    return {{r, static_cast<double>(r)}, best};
}

Rational hypergeom_pj(const GameParams& params, int j) {
    if (j < 1 || j > params.d) {
        throw std::invalid_argument("hypergeom_pj requires 1 <= j <= d");
    }
    BigInt num = binomial(params.d - 1, j - 1) * binomial(params.k, params.d - j);
    return Rational(num, binomial(params.n - 1, params.d - 1));
}

double classical_asymptote(ScalingRegime regime, const GameParams& params,
                           double alpha) {
    switch (regime) {
        case ScalingRegime::FixedD: {
            double d = params.d;
            return d * d / ((2 * d - 1) * params.n);
        }
        case ScalingRegime::FixedK:
            return static_cast<double>(params.n - params.k) / (params.n + params.k);
        case ScalingRegime::Proportional:
            if (!(alpha > 0.0 && alpha < 0.5)) {
                throw std::invalid_argument(
                    "proportional regime requires alpha in (0, 1/2)");
            }
            return (1.0 - alpha) / (1.0 + alpha);
    }
    throw std::logic_error("unknown scaling regime");
}

std::string format_strategy(const GameParams& params,
                            const ClassicalStrategy& f) {
    ClassicalStrategy self = f;
    Rational v(win_count(params, f, f),
               binomial(params.n, params.d) * binomial(params.n, params.d));
    std::ostringstream os;
    os << "# (n=" << params.n << ", k=" << params.k << ") value "
       << static_cast<double>(v) << "\n";
    auto sets = enumerate_safe_sets(params);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        os << "{";
        for (std::size_t j = 0; j < sets[i].size(); ++j) {
            if (j) os << ",";
            os << sets[i][j];
        }
        os << "} -> " << f.assignment[i] << "\n";
    }
    return os.str();
}

}  // namespace jamming
