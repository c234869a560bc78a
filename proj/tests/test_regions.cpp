#include <catch2/catch_amalgamated.hpp>

#include "berge/regions.hpp"

using namespace berge;

TEST_CASE("g1 region membership") {
    const auto r0 = region_spec::analytic_g1(epsilon(0.0));
    CHECK(r0.contains({1.0, 1.0}));
    CHECK_FALSE(r0.contains({0.99, 1.0}));
    CHECK_FALSE(r0.contains({1.0, 0.99}));

    const auto r05 = region_spec::analytic_g1(epsilon(0.5));
    CHECK(r05.contains({0.95, 0.7}));
    CHECK(r05.contains({1.0, 0.5}));
    CHECK_FALSE(r05.contains({0.9, 0.7}));   // 0.9 < r(0.5) ~ 0.927051
    CHECK_FALSE(r05.contains({0.95, 0.49}));
    CHECK_THROWS_AS(r05.contains({5.0, 0.0}), std::invalid_argument);
}

TEST_CASE("g1 membership matches the closed-form constraints") {
    for (double eps_v : {0.1, 0.2, 0.5, 0.9}) {
        const auto region = region_spec::analytic_g1(epsilon(eps_v));
        const double root = (-3.0 + std::sqrt(49.0 - 8.0 * eps_v)) / 4.0;
        for (int a = 0; a <= 30; ++a)
            for (int b = 0; b <= 30; ++b) {
                const double s1 = -2.0 + 3.0 * a / 30.0;
                const double s2 = -2.0 + 3.0 * b / 30.0;
                // points within rounding noise of a constraint boundary can
                // legitimately flip between the two algebraic forms
                if (std::abs(s2 - (1.0 - eps_v)) < 1e-9 ||
                    std::abs(2.0 * s1 * s1 + 3.0 * s1 - (5.0 - eps_v)) < 1e-9)
                    continue;
                const bool closed_form = s2 >= 1.0 - eps_v &&
                                         2.0 * s1 * s1 + 3.0 * s1 >= 5.0 - eps_v;
                CHECK(region.contains({s1, s2}) == closed_form);
            }
        // every sampled point respects the box [r(eps),1] x [1-eps,1]
        for (const auto& p : region.sample(100)) {
            CHECK(p[0] >= root - 1e-9);
            CHECK(p[0] <= 1.0);
            CHECK(p[1] >= 1.0 - eps_v - 1e-9);
            CHECK(p[1] <= 1.0);
        }
    }
}

TEST_CASE("vcm region membership") {
    const auto r2 = region_spec::analytic_vcm(2, epsilon(0.0));
    CHECK(r2.contains({10.0, 10.0}));
    CHECK_FALSE(r2.contains({9.99, 10.0}));
    CHECK_FALSE(r2.contains({10.0, 9.99}));

    const auto r3 = region_spec::analytic_vcm(3, epsilon(0.5));
    CHECK(r3.contains({10.0, 10.0, 9.0}));        // pair sums >= 18.75
    CHECK_FALSE(r3.contains({10.0, 10.0, 8.7}));  // 18.7 < 18.75
}

TEST_CASE("regions degenerate to the BZ point at eps zero") {
    const auto g1_region = region_spec::analytic_g1(epsilon(0.0));
    int hits = 0;
    for (int a = 0; a <= 20; ++a)
        for (int b = 0; b <= 20; ++b)
            hits += g1_region.contains({-2.0 + 3.0 * a / 20.0, -2.0 + 3.0 * b / 20.0});
    CHECK(hits == 1);  // only the node (1,1)

    for (const auto& p : g1_region.sample(10)) CHECK(p == strategy_profile{1.0, 1.0});
    for (const auto& p : region_spec::analytic_vcm(2, epsilon(0.0)).sample(10))
        CHECK(p == strategy_profile{10.0, 10.0});
}

TEST_CASE("grid-backed region for finite games") {
    const game pd = prisoners_dilemma();
    const auto region = region_spec::from_grid_oracle(pd, epsilon(0.0), grid_spec(2));
    CHECK(region.contains({0, 0}));
    CHECK_FALSE(region.contains({1, 1}));
    for (const auto& p : region.sample(5)) CHECK(p == strategy_profile{0, 0});
}

TEST_CASE("coverage fraction") {
    const auto region = region_spec::analytic_g1(epsilon(0.2));
    const game g = region.owning_game();

    std::vector<payoff_vector> dense;
    for (const auto& p : region.sample(250)) dense.push_back(g.evaluate(p));
    CHECK(coverage_fraction(region, dense, 250) == 1.0);

    const auto point_region = region_spec::analytic_g1(epsilon(0.0));
    const std::vector<payoff_vector> single{g.evaluate({1.0, 1.0})};
    CHECK(coverage_fraction(point_region, single, 50) == 1.0);

    // a front far from the region covers nothing
    const std::vector<payoff_vector> far{g.evaluate({-2.0, -2.0})};
    CHECK(coverage_fraction(region, far, 100, 0.05) == 0.0);

    CHECK_THROWS_AS(coverage_fraction(region, {}, 10), std::invalid_argument);
    CHECK_THROWS_AS(coverage_fraction(region, single, 0), std::invalid_argument);
}
