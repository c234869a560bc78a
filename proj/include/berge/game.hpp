#ifndef BERGE_GAME_HPP
#define BERGE_GAME_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace berge {

/// A strategy profile: one value per player. Interval dimensions hold the
/// real strategy; finite dimensions hold the 0-based action index (stored
/// exactly as an integral double).
using strategy_profile = std::vector<double>;

/// values[i] = u_i(s).
using payoff_vector = std::vector<double>;

enum class space_kind { finite, interval };

/// One player's strategy set: either an ordered list of named actions or a
/// closed real interval [lower, upper].
class strategy_space {
public:
    static strategy_space finite(std::vector<std::string> actions) {
        if (actions.empty())
            throw std::invalid_argument("finite strategy space needs at least one action");
        for (std::size_t i = 0; i < actions.size(); ++i)
            for (std::size_t j = i + 1; j < actions.size(); ++j)
                if (actions[i] == actions[j])
                    throw std::invalid_argument("duplicate action label '" + actions[i] + "'");
        strategy_space s;
        s.kind_ = space_kind::finite;
        s.actions_ = std::move(actions);
        return s;
    }

    static strategy_space interval(double lower, double upper) {
        if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower < upper))
            throw std::invalid_argument("interval requires finite bounds with lower < upper");
        strategy_space s;
        s.kind_ = space_kind::interval;
        s.lower_ = lower;
        s.upper_ = upper;
        return s;
    }

    space_kind kind() const noexcept { return kind_; }
    const std::vector<std::string>& actions() const { return actions_; }
    std::size_t cardinality() const { return actions_.size(); }
    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }

    /// Whether v is a valid strategy value for this space: an exact in-range
    /// action index (finite) or an in-bounds real (interval).
    bool contains(double v) const {
        if (kind_ == space_kind::finite)
            return v == std::floor(v) && v >= 0.0 &&
                   v < static_cast<double>(actions_.size());
        return v >= lower_ && v <= upper_;
    }

private:
    strategy_space() = default;
    space_kind kind_ = space_kind::interval;
    std::vector<std::string> actions_;
    double lower_ = 0.0;
    double upper_ = 0.0;
};

using payoff_fn = std::function<payoff_vector(const strategy_profile&)>;

/// An n-player strategic game. Immutable after construction; evaluate() is a
/// pure function of the profile and safe to call concurrently.
class game {
public:
    game(std::string name, std::vector<strategy_space> spaces, payoff_fn payoff)
        : name_(std::move(name)), spaces_(std::move(spaces)), payoff_(std::move(payoff)) {
        if (spaces_.size() < 2)
            throw std::invalid_argument("game requires at least 2 players");
        if (!payoff_)
            throw std::invalid_argument("game requires a payoff function");
    }

    const std::string& name() const noexcept { return name_; }
    std::size_t players() const noexcept { return spaces_.size(); }
    const std::vector<strategy_space>& spaces() const noexcept { return spaces_; }
    const strategy_space& space(std::size_t i) const { return spaces_.at(i); }

    bool all_finite() const {
        for (const auto& sp : spaces_)
            if (sp.kind() != space_kind::finite) return false;
        return true;
    }

    /// Throws std::invalid_argument if s is not a valid profile for this game.
    void validate(const strategy_profile& s) const {
        if (s.size() != spaces_.size())
            throw std::invalid_argument("invalid profile: expected " +
                                        std::to_string(spaces_.size()) + " entries, got " +
                                        std::to_string(s.size()));
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!spaces_[i].contains(s[i]))
                throw std::invalid_argument("invalid profile: entry " + std::to_string(i + 1) +
                                            " out of bounds for player " + std::to_string(i + 1));
    }

    payoff_vector evaluate(const strategy_profile& s) const {
        validate(s);
        payoff_vector u = payoff_(s);
        if (u.size() != spaces_.size())
            throw std::logic_error("payoff function returned wrong arity");
        return u;
    }

private:
    std::string name_;
    std::vector<strategy_space> spaces_;
    payoff_fn payoff_;
};

/// Finite game backed by a full payoff table in lexicographic profile order
/// (last player's index varies fastest).
inline game from_payoff_table(std::string name,
                              std::vector<std::vector<std::string>> actions,
                              std::vector<payoff_vector> table) {
    std::vector<strategy_space> spaces;
    spaces.reserve(actions.size());
    std::size_t total = 1;
    for (auto& a : actions) {
        total *= a.size();
        spaces.push_back(strategy_space::finite(std::move(a)));
    }
    if (table.size() != total)
        throw std::invalid_argument("payoff table has " + std::to_string(table.size()) +
                                    " rows, expected " + std::to_string(total));
    const std::size_t n = spaces.size();
    for (const auto& row : table)
        if (row.size() != n)
            throw std::invalid_argument("payoff table row arity mismatch");
    auto cards = std::make_shared<std::vector<std::size_t>>();
    for (const auto& sp : spaces) cards->push_back(sp.cardinality());
    auto tbl = std::make_shared<std::vector<payoff_vector>>(std::move(table));
    payoff_fn payoff = [cards, tbl](const strategy_profile& s) {
        std::size_t flat = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            flat = flat * (*cards)[i] + static_cast<std::size_t>(s[i]);
        return (*tbl)[flat];
    };
    return game(std::move(name), std::move(spaces), std::move(payoff));
}

/// Two-player Prisoner's Dilemma with actions (Cooperate, Defect) and
/// payoffs (2,2) (0,3) / (3,0) (1,1).
inline game prisoners_dilemma() {
    return from_payoff_table(
        "pd",
        {{"Cooperate", "Defect"}, {"Cooperate", "Defect"}},
        {{2, 2}, {0, 3}, {3, 0}, {1, 1}});
}

/// Two-player continuous game on [-2,1]^2 with
/// u1 = -s1^2 - s1 + s2 and u2 = 2*s1^2 + 3*s1 - s2^2 - 3*s2.
inline game game_g1() {
    std::vector<strategy_space> spaces{strategy_space::interval(-2.0, 1.0),
                                       strategy_space::interval(-2.0, 1.0)};
    payoff_fn payoff = [](const strategy_profile& s) {
        const double s1 = s[0], s2 = s[1];
        return payoff_vector{-s1 * s1 - s1 + s2,
                             2.0 * s1 * s1 + 3.0 * s1 - s2 * s2 - 3.0 * s2};
    };
    return game("g1", std::move(spaces), std::move(payoff));
}

/// n-player voluntary contribution mechanism on [0,10]^n:
/// u_i(s) = 10 - s_i + 0.4 * sum_j s_j (the sum includes s_i).
inline game game_vcm(int players) {
    if (players < 2)
        throw std::invalid_argument("vcm requires at least 2 players");
    std::vector<strategy_space> spaces(static_cast<std::size_t>(players),
                                       strategy_space::interval(0.0, 10.0));
    payoff_fn payoff = [](const strategy_profile& s) {
        double sum = 0.0;
        for (double v : s) sum += v;
        payoff_vector u(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) u[i] = 10.0 - s[i] + 0.4 * sum;
        return u;
    };
    return game("vcm" + std::to_string(players), std::move(spaces), std::move(payoff));
}

}  // namespace berge

#endif  // BERGE_GAME_HPP
