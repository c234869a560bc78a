#include <catch2/catch_amalgamated.hpp>

#include "berge/game.hpp"

using namespace berge;

TEST_CASE("prisoners dilemma payoff table") {
    const game pd = prisoners_dilemma();
    REQUIRE(pd.players() == 2);
    CHECK(pd.evaluate({0, 0}) == payoff_vector{2, 2});
    CHECK(pd.evaluate({0, 1}) == payoff_vector{0, 3});
    CHECK(pd.evaluate({1, 0}) == payoff_vector{3, 0});
    CHECK(pd.evaluate({1, 1}) == payoff_vector{1, 1});
    CHECK(pd.space(0).actions() == std::vector<std::string>{"Cooperate", "Defect"});
}

TEST_CASE("g1 payoffs") {
    const game g1 = game_g1();
    CHECK(g1.evaluate({1, 1}) == payoff_vector{-1, 1});
    CHECK(g1.evaluate({0, 0}) == payoff_vector{0, 0});
    CHECK(g1.evaluate({-2, 1}) == payoff_vector{-1, -2});
    CHECK(g1.space(0).lower() == -2.0);
    CHECK(g1.space(1).upper() == 1.0);
}

TEST_CASE("vcm payoffs") {
    CHECK(game_vcm(2).evaluate({10, 10}) == payoff_vector{8, 8});
    CHECK(game_vcm(2).evaluate({0, 0}) == payoff_vector{10, 10});
    CHECK(game_vcm(3).evaluate({10, 10, 10}) == payoff_vector{12, 12, 12});
    CHECK_THROWS_AS(game_vcm(1), std::invalid_argument);
}

TEST_CASE("evaluate rejects invalid profiles") {
    const game pd = prisoners_dilemma();
    CHECK_THROWS_AS(pd.evaluate({0}), std::invalid_argument);        // arity
    CHECK_THROWS_AS(pd.evaluate({0, 2}), std::invalid_argument);     // index range
    CHECK_THROWS_AS(pd.evaluate({0.5, 0}), std::invalid_argument);   // non-integral index
    const game g1 = game_g1();
    CHECK_THROWS_AS(g1.evaluate({-2.5, 0}), std::invalid_argument);  // below bounds
    CHECK_THROWS_AS(g1.evaluate({0, 1.5}), std::invalid_argument);   // above bounds
}

TEST_CASE("evaluate is deterministic and finite on builtin games") {
    const game games[] = {prisoners_dilemma(), game_g1(), game_vcm(3)};
    for (const auto& g : games) {
        strategy_profile s(g.players());
        for (std::size_t i = 0; i < g.players(); ++i) {
            const auto& sp = g.space(i);
            s[i] = sp.kind() == space_kind::finite
                       ? 0.0
                       : 0.25 * sp.lower() + 0.75 * sp.upper();
        }
        const auto u1 = g.evaluate(s);
        const auto u2 = g.evaluate(s);
        CHECK(u1 == u2);
        for (double v : u1) CHECK(std::isfinite(v));
    }
}

TEST_CASE("strategy space invariants") {
    CHECK_THROWS_AS(strategy_space::finite({}), std::invalid_argument);
    CHECK_THROWS_AS(strategy_space::finite({"x", "x"}), std::invalid_argument);
    CHECK_THROWS_AS(strategy_space::interval(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(strategy_space::interval(2.0, 1.0), std::invalid_argument);
    const auto iv = strategy_space::interval(-1.0, 1.0);
    CHECK(iv.contains(-1.0));
    CHECK(iv.contains(1.0));
    CHECK_FALSE(iv.contains(1.0000001));
}
