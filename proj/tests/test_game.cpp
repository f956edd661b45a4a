#include <doctest.h>

#include "jamming/game.hpp"

using namespace jamming;

TEST_CASE("known quantum values") {
    CHECK(quantum_value(harmonic_frame(3, 2), GameParams::make(3, 1)).omega ==
          doctest::Approx(7.0 / 12.0).epsilon(1e-12));
    CHECK(quantum_value(sic_frame(2), GameParams::make(4, 2)).omega ==
          doctest::Approx(5.0 / 12.0).epsilon(1e-12));
    CHECK(quantum_value(mub_frame(2), GameParams::make(6, 4)).omega ==
          doctest::Approx(0.2644).epsilon(2e-4));
    CHECK(quantum_value(simplex_frame(3), GameParams::make(4, 1)).omega ==
          doctest::Approx(209.0 / 324.0).epsilon(1e-12));
}

TEST_CASE("k=0 with an orthonormal frame wins always") {
    GameValue v = quantum_value_direct(harmonic_frame(4, 4), GameParams::make(4, 0));
    CHECK(v.omega == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("trace and direct evaluations agree") {
    struct Case {
        Frame frame;
        GameParams params;
    };
    std::vector<Case> cases = {
        {harmonic_frame(3, 2), GameParams::make(3, 1)},
        {harmonic_frame(6, 3), GameParams::make(6, 3)},
        {simplex_frame(4), GameParams::make(5, 1)},
        {sic_frame(3), GameParams::make(9, 6)},
        {mub_frame(2), GameParams::make(6, 4)},
        {alltop_frame(7, 6), GameParams::make(7, 1)},
        {random_haar_frame(6, 2, 7), GameParams::make(6, 4)},
    };
    for (const auto& c : cases) {
        double trace = quantum_value(c.frame, c.params).omega;
        double direct = quantum_value_direct(c.frame, c.params).omega;
        CHECK(std::abs(trace - direct) < 1e-12);
    }
}

TEST_CASE("joint probabilities") {
    GameParams p = GameParams::make(3, 1);
    Frame f = harmonic_frame(3, 2);
    auto bases = all_bases(f, p);

    SUBCASE("same input, projective: delta_ab / d") {
        for (const auto& [x, basis] : bases) {
            for (int a : x) {
                for (int b : x) {
                    double expected = (a == b) ? 0.5 : 0.0;
                    CHECK(joint_probability(bases, x, x, a, b) ==
                          doctest::Approx(expected).epsilon(1e-12));
                }
            }
        }
    }
    SUBCASE("normalization over both outcomes") {
        for (const auto& [x, bx] : bases) {
            for (const auto& [y, by] : bases) {
                double total = 0.0;
                for (int a : x)
                    for (int b : y) total += joint_probability(bases, x, y, a, b);
                CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
            }
        }
    }
    SUBCASE("cross-context value for the (3,1) harmonic game") {
        // cos^2(pi/6) / 2 = 3/8 at x = {0,1}, y = {0,2}, a = b = 0.
        CHECK(joint_probability(bases, {0, 1}, {0, 2}, 0, 0) ==
              doctest::Approx(3.0 / 8.0).epsilon(1e-12));
    }
    SUBCASE("channel outside safe set is rejected") {
        CHECK_THROWS_AS(joint_probability(bases, {0, 1}, {0, 2}, 2, 0),
                        std::invalid_argument);
    }
}

TEST_CASE("intersection decomposition reconstructs omega_q") {
    struct Case {
        Frame frame;
        GameParams params;
    };
    std::vector<Case> cases = {
        {harmonic_frame(5, 2), GameParams::make(5, 3)},
        {harmonic_frame(6, 3), GameParams::make(6, 3)},
        {simplex_frame(3), GameParams::make(4, 1)},
        {mub_frame(2), GameParams::make(6, 4)},
        {random_haar_frame(6, 3, 11), GameParams::make(6, 3)},
    };
    for (const auto& c : cases) {
        DecompositionReport rep = decompose_by_intersection(c.frame, c.params);
        double omega = quantum_value(c.frame, c.params).omega;
        CHECK(std::abs(rep.reconstructed_omega - omega) < 1e-10);
        double weight_sum = 0.0;
        for (const auto& row : rep.per_j) {
            weight_sum += row.weight;
            CHECK(row.weight ==
                  doctest::Approx(static_cast<double>(hypergeom_pj(c.params, row.j)))
                      .epsilon(1e-12));
        }
        CHECK(weight_sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("simplex decomposition has a single off-diagonal overlap class") {
    // For n = d+1 and k = 1, distinct safe sets always intersect in d-1
    // channels, and every cross overlap equals mu^2.
    for (int d = 2; d <= 5; ++d) {
        Frame f = simplex_frame(d);
        DecompositionReport rep =
            decompose_by_intersection(f, GameParams::make(d + 1, 1));
        REQUIRE(rep.per_j.size() == 2);  // j = d-1 and j = d
        CHECK(rep.per_j[0].j == d - 1);
        CHECK(rep.per_j[1].j == d);
        CHECK(rep.per_j[1].mean_sq_overlap == doctest::Approx(1.0).epsilon(1e-12));
        double mu =
            (d * d * d - 3.0 * d - 2.0 + 2.0 * std::pow(d + 1.0, 1.5)) /
            (d * d * (d + 1.0));
        CHECK(rep.per_j[0].mean_sq_overlap == doctest::Approx(mu * mu).epsilon(1e-9));
    }
}

TEST_CASE("advantage ratios") {
    CHECK(advantage_ratio(simplex_frame(2), GameParams::make(3, 1)) ==
          doctest::Approx(21.0 / 20.0).epsilon(1e-12));
    CHECK(advantage_ratio(mub_frame(2), GameParams::make(6, 4)) ==
          doctest::Approx(1.082).epsilon(1e-3));
    // (7,1) harmonic with d = 6 offers no advantage.
    CHECK(advantage_ratio(harmonic_frame(7, 6), GameParams::make(7, 1)) < 1.0);
}
