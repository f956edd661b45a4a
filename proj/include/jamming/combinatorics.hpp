#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace jamming {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parameters of an (n,k)-jamming game: n channels, k jammed, safe sets of
/// size d = n - k.
struct GameParams {
    int n = 0;
    int k = 0;
    int d = 0;

    static GameParams make(int n, int k);
};

/// A safe set: strictly increasing channel indices in [0, n).
using SafeSet = std::vector<int>;

/// A deterministic classical strategy: one output channel per safe set, in
/// canonical (lexicographic) enumeration order. The assigned channel must be
/// a member of its safe set.
struct ClassicalStrategy {
    std::vector<int> assignment;
};

struct BudgetExceeded : std::runtime_error {
    std::uint64_t required;
    explicit BudgetExceeded(std::uint64_t req)
        : std::runtime_error("search size " + std::to_string(req) +
                             " exceeds evaluation budget"),
          required(req) {}
};

/// Exact binomial coefficient in arbitrary precision.
BigInt binomial(int n, int k);

/// Binomial as uint64_t; throws std::overflow_error if it does not fit.
std::uint64_t binomial_u64(int n, int k);

/// All d-subsets of [0, n), in lexicographic order of the sorted lists.
std::vector<SafeSet> enumerate_safe_sets(const GameParams& params);

struct ExactValue {
    Rational exact;
    double value = 0.0;
};

/// Classical value omega_c(n,k) = sum_i C(n-1-i, k-i)^2 / C(n,k)^2.
ExactValue classical_value(const GameParams& params);

/// Closed form for d = 2: omega_c(n, n-2) = 2(2n-1) / (3n(n-1)). Requires n >= 3.
ExactValue classical_value_d2(int n);

/// The greedy strategy f*(x) = min(x).
ClassicalStrategy greedy_strategy(const GameParams& params);

/// Number of winning input pairs W(f,g) = sum_c |f^-1(c)| |g^-1(c)|.
BigInt win_count(const GameParams& params, const ClassicalStrategy& f,
                 const ClassicalStrategy& g);

/// Per-channel allocation |f^-1(c)| induced by a strategy.
std::vector<std::uint64_t> allocation(const GameParams& params,
                                      const ClassicalStrategy& f);

enum class BruteForceMode { Aligned, Full };

struct BruteForceResult {
    ExactValue value;
    ClassicalStrategy best;  // Alice's strategy at the maximum
};

/// Exhaustive maximization of W(f,f)/|S|^2 (aligned) or W(f,g)/|S|^2 (full)
/// over valid deterministic strategies. Ties broken by first-found in
/// enumeration order. Throws BudgetExceeded when the search space is larger
/// than `budget` evaluations.
BruteForceResult brute_force_classical(const GameParams& params,
                                       BruteForceMode mode,
                                       std::uint64_t budget = 10'000'000);

/// Hypergeometric intersection-size weight
/// p(j) = C(d-1, j-1) C(k, d-j) / C(n-1, d-1), for 1 <= j <= d.
Rational hypergeom_pj(const GameParams& params, int j);

enum class ScalingRegime { FixedD, FixedK, Proportional };

/// Leading-order classical value in the requested regime:
///   fixed-d:        d^2 / ((2d-1) n)
///   fixed-k:        (n-k) / (n+k)
///   proportional:   (1-alpha) / (1+alpha), alpha in (0, 1/2)
double classical_asymptote(ScalingRegime regime, const GameParams& params,
                           double alpha = 0.0);

/// Human-readable strategy table: header with (n,k) and achieved value, then
/// one "channels -> assigned" line per safe set.
std::string format_strategy(const GameParams& params,
                            const ClassicalStrategy& f);

}  // namespace jamming
