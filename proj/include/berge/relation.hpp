#ifndef BERGE_RELATION_HPP
#define BERGE_RELATION_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "berge/game.hpp"

namespace berge {

/// Additive payoff slack. eps = 0 recovers the plain Berge-Zhukovskii
/// relation; eps > 0 relaxes it.
class epsilon {
public:
    explicit epsilon(double value) : value_(value) {
        if (!(value >= 0.0) || !std::isfinite(value))
            throw std::invalid_argument("epsilon must be finite and >= 0");
    }
    double value() const noexcept { return value_; }

private:
    double value_;
};

/// Three-valued outcome of comparing two profiles under the generative
/// relation: either side dominates, or the profiles are indifferent.
enum class dominance_outcome { left_dominates, right_dominates, indifferent };

/// True iff every component of s and q except the excluded player's differs.
/// Comparison is exact: action indices for finite dimensions, bitwise doubles
/// for interval dimensions.
inline bool all_differ(const strategy_profile& s, const strategy_profile& q,
                       std::size_t excluded) {
    for (std::size_t j = 0; j < s.size(); ++j)
        if (j != excluded && s[j] == q[j]) return false;
    return true;
}

/// b_eps(s,q): the number of players who lose by more than the slack eps by
/// staying at s while every other player switches to q. Player i counts iff
/// u_i(s) < u_i(s_i, q_{-i}) - eps and all components but i's differ between
/// s and q. Overload taking u_s avoids re-evaluating the (cached) payoff of s.
inline int b_count(const game& g, const strategy_profile& s, const payoff_vector& u_s,
                   const strategy_profile& q, epsilon eps) {
    const std::size_t n = g.players();
    int count = 0;
    strategy_profile dev = q;
    for (std::size_t i = 0; i < n; ++i) {
        if (!all_differ(s, q, i)) continue;
        dev[i] = s[i];
        const payoff_vector u_dev = g.evaluate(dev);
        dev[i] = q[i];
        if (u_s[i] < u_dev[i] - eps.value()) ++count;
    }
    return count;
}

inline int b_count(const game& g, const strategy_profile& s, const strategy_profile& q,
                   epsilon eps) {
    return b_count(g, s, g.evaluate(s), q, eps);
}

/// s dominates q (left_dominates) iff b_eps(s,q) < b_eps(q,s); equal counts
/// mean indifference.
inline dominance_outcome compare(const game& g, const strategy_profile& s,
                                 const payoff_vector& u_s, const strategy_profile& q,
                                 const payoff_vector& u_q, epsilon eps) {
    const int b_sq = b_count(g, s, u_s, q, eps);
    const int b_qs = b_count(g, q, u_q, s, eps);
    if (b_sq < b_qs) return dominance_outcome::left_dominates;
    if (b_qs < b_sq) return dominance_outcome::right_dominates;
    return dominance_outcome::indifferent;
}

inline dominance_outcome compare(const game& g, const strategy_profile& s,
                                 const strategy_profile& q, epsilon eps) {
    return compare(g, s, g.evaluate(s), q, g.evaluate(q), eps);
}

/// Members of `profiles` not dominated by any other member, in input order.
/// The output can be empty: the relation admits domination cycles in which
/// every profile is dominated by some other (then the epsilon-BZ set is empty
/// too). Throws on empty input.
inline std::vector<strategy_profile> nondominated_filter(
    const game& g, std::span<const strategy_profile> profiles, epsilon eps) {
    if (profiles.empty())
        throw std::invalid_argument("nondominated_filter: empty profile list");
    const std::size_t k = profiles.size();
    std::vector<payoff_vector> payoffs;
    payoffs.reserve(k);
    for (const auto& p : profiles) payoffs.push_back(g.evaluate(p));

    std::vector<strategy_profile> out;
    for (std::size_t a = 0; a < k; ++a) {
        bool dominated = false;
        for (std::size_t b = 0; b < k && !dominated; ++b) {
            if (b == a) continue;
            dominated = compare(g, profiles[b], payoffs[b], profiles[a], payoffs[a], eps) ==
                        dominance_outcome::left_dominates;
        }
        if (!dominated) out.push_back(profiles[a]);
    }
    return out;
}

inline std::vector<strategy_profile> nondominated_filter(
    const game& g, const std::vector<strategy_profile>& profiles, epsilon eps) {
    return nondominated_filter(g, std::span<const strategy_profile>(profiles), eps);
}

}  // namespace berge

#endif  // BERGE_RELATION_HPP
