#include <doctest.h>

#include "jamming/combinatorics.hpp"

using namespace jamming;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial_u64(20, 10) == 184756);
    // Pascal's rule on a grid.
    for (int n = 1; n <= 30; ++n) {
        for (int k = 1; k < n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("safe set enumeration is lexicographic and complete") {
    auto sets = enumerate_safe_sets(GameParams::make(5, 3));
    REQUIRE(sets.size() == 10);
    CHECK(sets.front() == SafeSet{0, 1});
    CHECK(sets[1] == SafeSet{0, 2});
    CHECK(sets.back() == SafeSet{3, 4});
    for (size_t i = 1; i < sets.size(); ++i) CHECK(sets[i - 1] < sets[i]);
}

TEST_CASE("classical value closed form") {
    CHECK(classical_value(GameParams::make(3, 1)).exact == Rational(5, 9));
    CHECK(classical_value(GameParams::make(6, 4)).exact == Rational(11, 45));
    CHECK(classical_value(GameParams::make(5, 1)).exact == Rational(17, 25));
    // k = 0: single safe set, always winnable.
    CHECK(classical_value(GameParams::make(4, 0)).exact == 1);
}

TEST_CASE("d=2 closed form matches the general formula") {
    for (int n = 3; n <= 25; ++n) {
        CHECK(classical_value_d2(n).exact ==
              classical_value(GameParams::make(n, n - 2)).exact);
    }
    CHECK_THROWS_AS(classical_value_d2(2), std::invalid_argument);
}

TEST_CASE("win-count recursion W(n,k) = C(n-1,k)^2 + W(n-1,k-1)") {
    auto w = [](int n, int k) {
        GameParams p = GameParams::make(n, k);
        BigInt sets = binomial(n, n - k);
        // omega_c = W / |S|^2 with exact rational arithmetic.
        Rational omega = classical_value(p).exact;
        Rational wins = omega * Rational(sets * sets);
        REQUIRE(denominator(wins) == 1);
        return numerator(wins);
    };
    for (int n = 3; n <= 12; ++n) {
        for (int k = 1; k < n; ++k) {
            CHECK(w(n, k) == binomial(n - 1, k) * binomial(n - 1, k) + w(n - 1, k - 1));
        }
    }
}

TEST_CASE("greedy strategy allocation and optimality") {
    GameParams p = GameParams::make(6, 3);
    ClassicalStrategy greedy = greedy_strategy(p);
    auto alloc = allocation(p, greedy);
    // Channel c (1-indexed) receives C(n-c, k-c+1) safe sets for c <= k+1.
    for (int c = 1; c <= p.k + 1; ++c) {
        CHECK(alloc[c - 1] == binomial_u64(p.n - c, p.k - c + 1));
    }
    for (int c = p.k + 2; c <= p.n; ++c) CHECK(alloc[c - 1] == 0);

    Rational sets(binomial(p.n, p.d));
    CHECK(Rational(win_count(p, greedy, greedy)) / (sets * sets) ==
          classical_value(p).exact);
}

TEST_CASE("aligned brute force agrees with the closed form") {
    for (auto [n, k] : {std::pair{3, 1}, {4, 1}, {4, 2}, {5, 3}}) {
        GameParams p = GameParams::make(n, k);
        auto bf = brute_force_classical(p, BruteForceMode::Aligned);
        CHECK(bf.value.exact == classical_value(p).exact);
    }
}

TEST_CASE("full brute force is no better than aligned") {
    for (auto [n, k] : {std::pair{3, 1}, {4, 1}}) {
        GameParams p = GameParams::make(n, k);
        auto aligned = brute_force_classical(p, BruteForceMode::Aligned);
        auto full = brute_force_classical(p, BruteForceMode::Full);
        CHECK(full.value.exact == aligned.value.exact);
    }
}

TEST_CASE("brute force respects the evaluation budget") {
    CHECK_THROWS_AS(
        brute_force_classical(GameParams::make(10, 5), BruteForceMode::Full, 1000),
        BudgetExceeded);
}

TEST_CASE("hypergeometric intersection weights") {
    GameParams p = GameParams::make(3, 1);
    CHECK(hypergeom_pj(p, 1) == Rational(1, 2));
    CHECK(hypergeom_pj(p, 2) == Rational(1, 2));
    for (auto [n, k] : {std::pair{5, 2}, {6, 3}, {7, 2}, {8, 5}}) {
        GameParams q = GameParams::make(n, k);
        Rational total = 0;
        int j_min = std::max(1, 2 * q.d - q.n);
        for (int j = j_min; j <= q.d; ++j) total += hypergeom_pj(q, j);
        CHECK(total == 1);
    }
}

TEST_CASE("asymptotic regimes") {
    GameParams p = GameParams::make(100, 98);  // d = 2
    CHECK(classical_asymptote(ScalingRegime::FixedD, p) ==
          doctest::Approx(4.0 / (3.0 * 100)).epsilon(1e-12));
    GameParams q = GameParams::make(100, 3);
    CHECK(classical_asymptote(ScalingRegime::FixedK, q) ==
          doctest::Approx(97.0 / 103.0).epsilon(1e-12));
    GameParams r = GameParams::make(100, 25);
    CHECK(classical_asymptote(ScalingRegime::Proportional, r, 0.25) ==
          doctest::Approx(0.75 / 1.25).epsilon(1e-12));
    // The exact value approaches the fixed-d asymptote from above.
    double exact = classical_value(p).value;
    CHECK(exact > classical_asymptote(ScalingRegime::FixedD, p));
    CHECK(exact == doctest::Approx(classical_asymptote(ScalingRegime::FixedD, p))
                       .epsilon(2e-2));
}

TEST_CASE("strategy formatting names every safe set") {
    GameParams p = GameParams::make(3, 1);
    std::string text = format_strategy(p, greedy_strategy(p));
    CHECK(text.find("{0,1} -> 0") != std::string::npos);
    CHECK(text.find("{1,2} -> 1") != std::string::npos);
}
