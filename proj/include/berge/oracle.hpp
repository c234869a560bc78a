#ifndef BERGE_ORACLE_HPP
#define BERGE_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "berge/errors.hpp"
#include "berge/game.hpp"
#include "berge/relation.hpp"

namespace berge {

inline constexpr std::uint64_t default_enumeration_cap = 10'000'000;

/// Discretization used to enumerate continuous strategy spaces: equally
/// spaced nodes per interval dimension, endpoints included. Finite
/// dimensions are always enumerated exhaustively.
struct grid_spec {
    int points_per_interval = 11;

    explicit grid_spec(int points = 11) : points_per_interval(points) {
        if (points < 2)
            throw std::invalid_argument("grid requires at least 2 points per interval");
    }
};

/// Which opposing profiles quantify an epsilon-BZ check.
///
/// `all_others_move` admits only deviations in which every other player's
/// strategy actually changes; this is the quantifier under which the
/// non-dominated set of the generative relation equals the epsilon-BZ set on
/// every game. `any_profile` is the unrestricted quantifier of the plain
/// Berge-Zhukovskii definition; the two can differ on finite games with
/// three or more players.
enum class deviation_mode { all_others_move, any_profile };

/// Lexicographic enumeration of the (discretized) product strategy space,
/// last dimension fastest. Construction fails if the space exceeds `cap`.
class profile_grid {
public:
    profile_grid(const game& g, grid_spec grid,
                 std::uint64_t cap = default_enumeration_cap) {
        for (const auto& sp : g.spaces()) {
            std::vector<double> axis;
            if (sp.kind() == space_kind::finite) {
                axis.resize(sp.cardinality());
                for (std::size_t a = 0; a < axis.size(); ++a)
                    axis[a] = static_cast<double>(a);
            } else {
                const int m = grid.points_per_interval;
                axis.resize(static_cast<std::size_t>(m));
                const double lo = sp.lower(), hi = sp.upper();
                for (int k = 0; k < m; ++k)
                    axis[static_cast<std::size_t>(k)] =
                        k == m - 1 ? hi : lo + (hi - lo) * k / (m - 1);
            }
            axes_.push_back(std::move(axis));
        }
        const auto max64 = std::numeric_limits<std::uint64_t>::max();
        std::uint64_t total = 1;
        for (const auto& axis : axes_) {
            const std::uint64_t card = axis.size();
            total = total > max64 / card ? max64 : total * card;  // saturating
        }
        size_ = total;
        if (total > cap) throw enumeration_limit_error(size_, cap);
    }

    std::uint64_t size() const noexcept { return size_; }
    const std::vector<std::vector<double>>& axes() const noexcept { return axes_; }

    strategy_profile at(std::uint64_t flat) const {
        strategy_profile p(axes_.size());
        for (std::size_t d = axes_.size(); d-- > 0;) {
            const std::uint64_t card = axes_[d].size();
            p[d] = axes_[d][static_cast<std::size_t>(flat % card)];
            flat /= card;
        }
        return p;
    }

    /// Per-dimension axis indices for the given flat position.
    std::vector<std::size_t> indices_at(std::uint64_t flat) const {
        std::vector<std::size_t> idx(axes_.size());
        for (std::size_t d = axes_.size(); d-- > 0;) {
            const std::uint64_t card = axes_[d].size();
            idx[d] = static_cast<std::size_t>(flat % card);
            flat /= card;
        }
        return idx;
    }

private:
    std::vector<std::vector<double>> axes_;
    std::uint64_t size_ = 0;
};

/// All profiles of the grid, in enumeration order.
inline std::vector<strategy_profile> materialize_profiles(const profile_grid& grid) {
    std::vector<strategy_profile> out;
    out.reserve(static_cast<std::size_t>(grid.size()));
    for (std::uint64_t f = 0; f < grid.size(); ++f) out.push_back(grid.at(f));
    return out;
}

/// Direct definitional check of one candidate against an explicit deviation
/// set: s is an epsilon-BZ equilibrium iff no player can gain more than eps
/// from any admissible opposing deviation.
inline bool is_epsilon_bz(const game& g, const strategy_profile& s, epsilon eps,
                          const std::vector<strategy_profile>& deviations,
                          deviation_mode mode = deviation_mode::all_others_move) {
    const payoff_vector u_s = g.evaluate(s);
    const std::size_t n = g.players();
    strategy_profile dev(n);
    for (const auto& d : deviations) {
        for (std::size_t i = 0; i < n; ++i) {
            if (mode == deviation_mode::all_others_move && !all_differ(s, d, i)) continue;
            dev = d;
            dev[i] = s[i];
            const payoff_vector u_dev = g.evaluate(dev);
            if (u_s[i] < u_dev[i] - eps.value()) return false;
        }
    }
    return true;
}

namespace detail {

// Best and runner-up payoff over the opposing coordinate, per (player, own
// axis index). Runner-up is the best among opposing indices different from
// the argmax, which answers "max excluding one index" queries exactly.
struct top2 {
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_arg = static_cast<std::size_t>(-1);
    double second = -std::numeric_limits<double>::infinity();

    void update(double v, std::size_t arg) {
        if (arg == best_arg) {
            best = std::max(best, v);
        } else if (v > best) {
            second = best;
            best = v;
            best_arg = arg;
        } else if (v > second) {
            second = v;
        }
    }
    double max_excluding(std::size_t arg) const { return arg == best_arg ? second : best; }
};

}  // namespace detail

/// Every grid profile that passes the definitional check against the grid.
/// Exact for finite games, grid-exact for continuous ones.
inline std::vector<strategy_profile> bz_set_bruteforce(
    const game& g, epsilon eps, grid_spec grid,
    deviation_mode mode = deviation_mode::all_others_move,
    std::uint64_t cap = default_enumeration_cap) {
    const profile_grid pg(g, grid, cap);
    const std::size_t n = g.players();
    std::vector<strategy_profile> out;

    if (mode == deviation_mode::any_profile) {
        // The best opposing deviation for player i depends only on s_i, so a
        // single sweep builds max tables keyed by own axis index.
        std::vector<std::vector<double>> best(n);
        for (std::size_t i = 0; i < n; ++i)
            best[i].assign(pg.axes()[i].size(), -std::numeric_limits<double>::infinity());
        for (std::uint64_t f = 0; f < pg.size(); ++f) {
            const auto idx = pg.indices_at(f);
            const payoff_vector u = g.evaluate(pg.at(f));
            for (std::size_t i = 0; i < n; ++i)
                best[i][idx[i]] = std::max(best[i][idx[i]], u[i]);
        }
        for (std::uint64_t f = 0; f < pg.size(); ++f) {
            const auto idx = pg.indices_at(f);
            const strategy_profile s = pg.at(f);
            const payoff_vector u = g.evaluate(s);
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                ok = !(u[i] < best[i][idx[i]] - eps.value());
            if (ok) out.push_back(s);
        }
        return out;
    }

    if (n == 2) {
        // For two players the all-others-move quantifier just excludes the
        // opponent's current coordinate, answerable from top-2 tables.
        std::vector<std::vector<detail::top2>> tables(2);
        tables[0].resize(pg.axes()[0].size());
        tables[1].resize(pg.axes()[1].size());
        for (std::uint64_t f = 0; f < pg.size(); ++f) {
            const auto idx = pg.indices_at(f);
            const payoff_vector u = g.evaluate(pg.at(f));
            tables[0][idx[0]].update(u[0], idx[1]);
            tables[1][idx[1]].update(u[1], idx[0]);
        }
        for (std::uint64_t f = 0; f < pg.size(); ++f) {
            const auto idx = pg.indices_at(f);
            const strategy_profile s = pg.at(f);
            const payoff_vector u = g.evaluate(s);
            const double m0 = tables[0][idx[0]].max_excluding(idx[1]);
            const double m1 = tables[1][idx[1]].max_excluding(idx[0]);
            if (!(u[0] < m0 - eps.value()) && !(u[1] < m1 - eps.value()))
                out.push_back(s);
        }
        return out;
    }

    // n >= 3 with the all-others-move quantifier: no factorization, scan the
    // full deviation set per candidate. Desk-scale only.
    const auto deviations = materialize_profiles(pg);
    for (const auto& s : deviations)
        if (is_epsilon_bz(g, s, eps, deviations, mode)) out.push_back(s);
    return out;
}

/// nondominated_filter applied to the full grid enumeration.
inline std::vector<strategy_profile> nondominated_set_bruteforce(
    const game& g, epsilon eps, grid_spec grid,
    std::uint64_t cap = default_enumeration_cap) {
    const profile_grid pg(g, grid, cap);
    const auto profiles = materialize_profiles(pg);
    std::vector<payoff_vector> payoffs;
    payoffs.reserve(profiles.size());
    for (const auto& p : profiles) payoffs.push_back(g.evaluate(p));

    std::vector<strategy_profile> out;
    for (std::size_t a = 0; a < profiles.size(); ++a) {
        bool dominated = false;
        for (std::size_t b = 0; b < profiles.size() && !dominated; ++b) {
            if (b == a) continue;
            dominated = compare(g, profiles[b], payoffs[b], profiles[a], payoffs[a], eps) ==
                        dominance_outcome::left_dominates;
        }
        if (!dominated) out.push_back(profiles[a]);
    }
    return out;
}

/// Both routes to the epsilon-BZ set plus their set-equality verdict.
struct oracle_report {
    std::vector<strategy_profile> bz_set;
    std::vector<strategy_profile> nondominated_set;
    bool sets_equal = false;
    double epsilon_value = 0.0;
    grid_spec grid{11};
    deviation_mode mode = deviation_mode::all_others_move;
    std::uint64_t profile_count = 0;
};

/// Computes the epsilon-BZ set directly from the definition and the
/// non-dominated set of the generative relation over the same enumeration,
/// and reports whether they coincide. Under the default quantifier a
/// mismatch is an implementation bug; under any_profile the two sets can
/// legitimately differ on finite games with three or more players.
inline oracle_report verify_equivalence(const game& g, epsilon eps, grid_spec grid,
                                        deviation_mode mode = deviation_mode::all_others_move,
                                        std::uint64_t cap = default_enumeration_cap) {
    oracle_report r;
    r.epsilon_value = eps.value();
    r.grid = grid;
    r.mode = mode;
    r.profile_count = profile_grid(g, grid, cap).size();
    r.bz_set = bz_set_bruteforce(g, eps, grid, mode, cap);
    r.nondominated_set = nondominated_set_bruteforce(g, eps, grid, cap);
    // Both sets are produced in enumeration order over identical nodes.
    r.sets_equal = r.bz_set == r.nondominated_set;
    return r;
}

/// The partition P and deviation coalitions R of the general Berge
/// equilibrium. Blocks must be non-empty, disjoint and cover all players;
/// one target coalition per block.
struct coalition_structure {
    std::vector<std::vector<std::size_t>> partition;
    std::vector<std::vector<std::size_t>> targets;

    void validate(std::size_t n) const {
        if (partition.empty() || partition.size() != targets.size())
            throw std::invalid_argument(
                "invalid structure: partition and targets must be non-empty and equally long");
        std::vector<bool> seen(n, false);
        for (const auto& block : partition) {
            if (block.empty())
                throw std::invalid_argument("invalid structure: empty partition block");
            for (std::size_t p : block) {
                if (p >= n || seen[p])
                    throw std::invalid_argument(
                        "invalid structure: partition must cover each player exactly once");
                seen[p] = true;
            }
        }
        for (std::size_t p = 0; p < n; ++p)
            if (!seen[p])
                throw std::invalid_argument(
                    "invalid structure: partition must cover each player exactly once");
        for (const auto& coalition : targets)
            for (std::size_t p : coalition)
                if (p >= n)
                    throw std::invalid_argument("invalid structure: target player out of range");
    }

    /// P = {{i}}, R_i = {i}: instantiates the Nash equilibrium.
    static coalition_structure nash(std::size_t n) {
        coalition_structure c;
        for (std::size_t i = 0; i < n; ++i) {
            c.partition.push_back({i});
            c.targets.push_back({i});
        }
        return c;
    }

    /// P = {{i}}, R_i = N - {i}: instantiates the Berge-Zhukovskii equilibrium.
    static coalition_structure berge_zhukovskii(std::size_t n) {
        coalition_structure c;
        for (std::size_t i = 0; i < n; ++i) {
            c.partition.push_back({i});
            std::vector<std::size_t> rest;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) rest.push_back(j);
            c.targets.push_back(std::move(rest));
        }
        return c;
    }
};

/// Literal general-Berge check: for every block m, player p in P_m and
/// deviation d, the payoff of p at s must be at least its payoff when the
/// coordinates in R_m are replaced by d's.
inline bool is_general_berge(const game& g, const strategy_profile& s,
                             const coalition_structure& structure,
                             const std::vector<strategy_profile>& deviations) {
    structure.validate(g.players());
    const payoff_vector u_s = g.evaluate(s);
    strategy_profile dev(g.players());
    for (std::size_t m = 0; m < structure.partition.size(); ++m) {
        for (const auto& d : deviations) {
            dev = s;
            for (std::size_t r : structure.targets[m]) dev[r] = d[r];
            const payoff_vector u_dev = g.evaluate(dev);
            for (std::size_t p : structure.partition[m])
                if (u_s[p] < u_dev[p]) return false;
        }
    }
    return true;
}

/// Profiles from which no single player can strictly improve by a unilateral
/// deviation within the enumerated space.
inline std::vector<strategy_profile> nash_set_bruteforce(
    const game& g, grid_spec grid, std::uint64_t cap = default_enumeration_cap) {
    const profile_grid pg(g, grid, cap);
    const std::size_t n = g.players();
    std::vector<strategy_profile> out;
    strategy_profile dev(n);
    for (std::uint64_t f = 0; f < pg.size(); ++f) {
        const strategy_profile s = pg.at(f);
        const payoff_vector u = g.evaluate(s);
        bool stable = true;
        for (std::size_t i = 0; i < n && stable; ++i) {
            dev = s;
            for (double a : pg.axes()[i]) {
                dev[i] = a;
                if (g.evaluate(dev)[i] > u[i]) {
                    stable = false;
                    break;
                }
            }
        }
        if (stable) out.push_back(s);
    }
    return out;
}

}  // namespace berge

#endif  // BERGE_ORACLE_HPP
