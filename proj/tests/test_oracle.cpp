#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "berge/oracle.hpp"
#include "support/random_game.hpp"

using namespace berge;

namespace {
const strategy_profile CC{0, 0}, CD{0, 1}, DC{1, 0}, DD{1, 1};

game constant_game() {
    return from_payoff_table("flat", {{"x", "y"}, {"x", "y"}},
                             {{5, 5}, {5, 5}, {5, 5}, {5, 5}});
}

// 3-player game on which the plain (any-deviation) BZ set differs from the
// non-dominated set: player 1's only profitable joint deviation from (0,0,0)
// keeps player 2's coordinate, so the relation cannot see it.
game quantifier_gap_game() {
    std::vector<payoff_vector> table(8, payoff_vector{0, 5, 5});
    table[1] = {10, 5, 5};  // (0,0,1)
    return from_payoff_table("gap", {{"0", "1"}, {"0", "1"}, {"0", "1"}},
                             std::move(table));
}
}  // namespace

TEST_CASE("profile enumeration order and size") {
    const auto pd_profiles = materialize_profiles(profile_grid(prisoners_dilemma(), grid_spec(2)));
    CHECK(pd_profiles == std::vector<strategy_profile>{CC, CD, DC, DD});

    const profile_grid g1_grid(game_g1(), grid_spec(4));
    CHECK(g1_grid.size() == 16);
    CHECK(g1_grid.at(0) == strategy_profile{-2, -2});
    CHECK(g1_grid.at(15) == strategy_profile{1, 1});

    CHECK(profile_grid(game_vcm(3), grid_spec(11)).size() == 1331);
}

TEST_CASE("grid spec needs at least two points per interval") {
    CHECK_THROWS_AS(grid_spec(1), std::invalid_argument);
    CHECK_THROWS_AS(grid_spec(0), std::invalid_argument);
    CHECK(grid_spec(2).points_per_interval == 2);
}

TEST_CASE("mixed finite and interval spaces enumerate and solve") {
    // one finite chooser against one continuous responder
    std::vector<strategy_space> spaces{strategy_space::finite({"L", "R"}),
                                       strategy_space::interval(0.0, 1.0)};
    payoff_fn payoff = [](const strategy_profile& s) {
        const double x = s[1];
        return payoff_vector{s[0] == 0.0 ? x : 1.0 - x, x};
    };
    const game g("mixed", std::move(spaces), std::move(payoff));

    const profile_grid pg(g, grid_spec(3));
    CHECK(pg.size() == 6);
    CHECK(pg.at(0) == strategy_profile{0, 0});
    CHECK(pg.at(5) == strategy_profile{1, 1});

    // Player 1 is unbeatable at (L, 1) and at (R, 0); player 2's payoff does
    // not depend on player 1, so its condition always holds.
    const auto bz = bz_set_bruteforce(g, epsilon(0.0), grid_spec(3));
    CHECK(bz == std::vector<strategy_profile>{{0, 1}, {1, 0}});
    CHECK(verify_equivalence(g, epsilon(0.0), grid_spec(3)).sets_equal);
}

TEST_CASE("enumeration cap is enforced and names the size") {
    try {
        profile_grid(game_vcm(3), grid_spec(1000));
        FAIL("expected enumeration_limit_error");
    } catch (const enumeration_limit_error& e) {
        CHECK(e.size() == 1'000'000'000ull);
        CHECK(e.cap() == default_enumeration_cap);
        CHECK(std::string(e.what()).find("1000000000") != std::string::npos);
    }
    CHECK_NOTHROW(profile_grid(game_vcm(2), grid_spec(1000)));
}

TEST_CASE("is_epsilon_bz on prisoners dilemma") {
    const game pd = prisoners_dilemma();
    const auto all = materialize_profiles(profile_grid(pd, grid_spec(2)));
    CHECK(is_epsilon_bz(pd, CC, epsilon(0.0), all));
    CHECK_FALSE(is_epsilon_bz(pd, DD, epsilon(0.0), all));
    CHECK(is_epsilon_bz(pd, DD, epsilon(2.0), all));
}

TEST_CASE("bz_set_bruteforce") {
    const game pd = prisoners_dilemma();
    CHECK(bz_set_bruteforce(pd, epsilon(0.0), grid_spec(2)) ==
          std::vector<strategy_profile>{CC});
    CHECK(bz_set_bruteforce(pd, epsilon(2.0), grid_spec(2)) ==
          std::vector<strategy_profile>{CC, CD, DC, DD});
    CHECK(bz_set_bruteforce(game_vcm(2), epsilon(0.0), grid_spec(11)) ==
          std::vector<strategy_profile>{{10, 10}});
}

TEST_CASE("nondominated_set_bruteforce") {
    const game pd = prisoners_dilemma();
    CHECK(nondominated_set_bruteforce(pd, epsilon(0.0), grid_spec(2)) ==
          std::vector<strategy_profile>{CC});
    CHECK(nondominated_set_bruteforce(pd, epsilon(2.0), grid_spec(2)) ==
          bz_set_bruteforce(pd, epsilon(2.0), grid_spec(2)));

    const game trivial = from_payoff_table("one", {{"only"}, {"only"}}, {{1, 2}});
    CHECK(nondominated_set_bruteforce(trivial, epsilon(0.0), grid_spec(2)) ==
          std::vector<strategy_profile>{{0, 0}});
}

TEST_CASE("verify_equivalence on known games") {
    const game pd = prisoners_dilemma();
    for (double e : {0.0, 0.5, 1.0, 2.0}) {
        const auto report = verify_equivalence(pd, epsilon(e), grid_spec(2));
        CHECK(report.sets_equal);
        CHECK(report.profile_count == 4);
    }
    const auto vcm_report = verify_equivalence(game_vcm(2), epsilon(0.0), grid_spec(11));
    CHECK(vcm_report.sets_equal);
    CHECK(vcm_report.bz_set == std::vector<strategy_profile>{{10, 10}});
}

TEST_CASE("verify_equivalence on random finite games") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const game g = testing::random_finite_game(seed);
        for (double e : {0.0, 1.0}) {
            const auto report = verify_equivalence(g, epsilon(e), grid_spec(2));
            INFO("seed " << seed << " eps " << e);
            CHECK(report.sets_equal);
        }
    }
}

TEST_CASE("bz members are never counted as losing (Prop 1)") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const game g = testing::random_finite_game(seed);
        const auto profiles = materialize_profiles(profile_grid(g, grid_spec(2)));
        for (double e : {0.0, 0.5, 2.0}) {
            for (const auto& s : bz_set_bruteforce(g, epsilon(e), grid_spec(2)))
                for (const auto& q : profiles)
                    CHECK(b_count(g, s, q, epsilon(e)) == 0);
        }
    }
}

TEST_CASE("epsilon nesting of bz sets") {
    const double eps_values[] = {0.0, 0.5, 1.0, 2.0};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const game g = testing::random_finite_game(seed);
        std::vector<std::vector<strategy_profile>> sets;
        for (double e : eps_values)
            sets.push_back(bz_set_bruteforce(g, epsilon(e), grid_spec(2)));
        for (std::size_t k = 0; k + 1 < sets.size(); ++k)
            for (const auto& s : sets[k])
                CHECK(std::find(sets[k + 1].begin(), sets[k + 1].end(), s) !=
                      sets[k + 1].end());
    }
}

TEST_CASE("factored fast paths match the direct definition check") {
    for (std::uint64_t seed = 40; seed < 55; ++seed) {
        const game g = testing::random_finite_game(seed);
        const auto profiles = materialize_profiles(profile_grid(g, grid_spec(2)));
        for (double e : {0.0, 0.5}) {
            for (const auto mode :
                 {deviation_mode::all_others_move, deviation_mode::any_profile}) {
                std::vector<strategy_profile> direct;
                for (const auto& s : profiles)
                    if (is_epsilon_bz(g, s, epsilon(e), profiles, mode)) direct.push_back(s);
                CHECK(bz_set_bruteforce(g, epsilon(e), grid_spec(2), mode) == direct);
            }
        }
    }
}

TEST_CASE("deviation quantifiers differ exactly where the relation is blind") {
    const game g = quantifier_gap_game();
    const strategy_profile origin{0, 0, 0};
    const auto all = materialize_profiles(profile_grid(g, grid_spec(2)));

    CHECK_FALSE(is_epsilon_bz(g, origin, epsilon(0.0), all, deviation_mode::any_profile));
    CHECK(is_epsilon_bz(g, origin, epsilon(0.0), all, deviation_mode::all_others_move));

    // The all-others-move set still matches the non-dominated set...
    const auto report = verify_equivalence(g, epsilon(0.0), grid_spec(2));
    CHECK(report.sets_equal);
    CHECK(std::find(report.bz_set.begin(), report.bz_set.end(), origin) !=
          report.bz_set.end());
    // ...while the any-profile set is strictly smaller here.
    const auto any_set =
        bz_set_bruteforce(g, epsilon(0.0), grid_spec(2), deviation_mode::any_profile);
    CHECK(any_set.size() < report.bz_set.size());
}

TEST_CASE("general Berge checker on prisoners dilemma") {
    const game pd = prisoners_dilemma();
    const auto all = materialize_profiles(profile_grid(pd, grid_spec(2)));
    const auto bz = coalition_structure::berge_zhukovskii(2);
    const auto nash = coalition_structure::nash(2);
    CHECK(is_general_berge(pd, CC, bz, all));
    CHECK_FALSE(is_general_berge(pd, DD, bz, all));
    CHECK(is_general_berge(pd, DD, nash, all));
    CHECK_FALSE(is_general_berge(pd, CC, nash, all));
}

TEST_CASE("malformed coalition structures are rejected") {
    const game pd = prisoners_dilemma();
    const auto all = materialize_profiles(profile_grid(pd, grid_spec(2)));
    coalition_structure bad;
    bad.partition = {{0}};  // does not cover player 1
    bad.targets = {{1}};
    CHECK_THROWS_AS(is_general_berge(pd, CC, bad, all), std::invalid_argument);
    bad.partition = {{0}, {0}};  // duplicate player
    bad.targets = {{1}, {0}};
    CHECK_THROWS_AS(is_general_berge(pd, CC, bad, all), std::invalid_argument);
    bad.partition = {{0}, {1}};
    bad.targets = {{2}, {0}};  // target out of range
    CHECK_THROWS_AS(is_general_berge(pd, CC, bad, all), std::invalid_argument);
    bad.partition = {{0}, {1}};
    bad.targets = {{1}};  // length mismatch
    CHECK_THROWS_AS(is_general_berge(pd, CC, bad, all), std::invalid_argument);
}

TEST_CASE("nash_set_bruteforce") {
    CHECK(nash_set_bruteforce(prisoners_dilemma(), grid_spec(2)) ==
          std::vector<strategy_profile>{DD});
    CHECK(nash_set_bruteforce(constant_game(), grid_spec(2)) ==
          materialize_profiles(profile_grid(constant_game(), grid_spec(2))));
}

TEST_CASE("nash set equals the singleton general-Berge instantiation") {
    for (std::uint64_t seed = 60; seed < 75; ++seed) {
        const game g = testing::random_finite_game(seed);
        const auto profiles = materialize_profiles(profile_grid(g, grid_spec(2)));
        const auto nash_structure = coalition_structure::nash(g.players());
        std::vector<strategy_profile> accepted;
        for (const auto& s : profiles)
            if (is_general_berge(g, s, nash_structure, profiles)) accepted.push_back(s);
        CHECK(accepted == nash_set_bruteforce(g, grid_spec(2)));
    }
}

TEST_CASE("bz instantiation of the general checker matches the any-profile set") {
    for (std::uint64_t seed = 80; seed < 95; ++seed) {
        const game g = testing::random_finite_game(seed);
        const auto profiles = materialize_profiles(profile_grid(g, grid_spec(2)));
        const auto structure = coalition_structure::berge_zhukovskii(g.players());
        std::vector<strategy_profile> accepted;
        for (const auto& s : profiles)
            if (is_general_berge(g, s, structure, profiles)) accepted.push_back(s);
        CHECK(accepted == bz_set_bruteforce(g, epsilon(0.0), grid_spec(2),
                                            deviation_mode::any_profile));
    }
}
