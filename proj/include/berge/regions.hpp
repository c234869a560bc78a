#ifndef BERGE_REGIONS_HPP
#define BERGE_REGIONS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "berge/game.hpp"
#include "berge/oracle.hpp"
#include "berge/relation.hpp"

namespace berge {

namespace detail {

inline double halton(std::uint64_t index, std::uint64_t base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

inline std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t c = 2; primes.size() < count; ++c) {
        bool prime = true;
        for (std::uint64_t p : primes) {
            if (p * p > c) break;
            if (c % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(c);
    }
    return primes;
}

}  // namespace detail

/// Reference description of the epsilon-BZ set of a game: a membership test
/// plus a quasi-uniform sampler. Analytic constructors exist for the games
/// whose best-response structure is known in closed form (g1, vcm); other
/// games fall back to a grid-oracle region.
///
/// Memberships are evaluated as payoff comparisons against the analytic
/// best-response deviations, which keeps them bit-compatible with the grid
/// oracle. The equivalent closed forms are:
///   g1:      s2 >= 1 - eps  and  2*s1^2 + 3*s1 >= 5 - eps
///   vcm(n):  sum_{j != i} s_j >= 10*(n-1) - 2.5*eps for every player i
/// and at eps = 0 both degenerate to the single BZ point ((1,1) resp. all-10).
class region_spec {
public:
    /// Analytic region for g1 on [-2,1]^2.
    static region_spec analytic_g1(epsilon eps) {
        region_spec r(game_g1(), eps);
        r.membership_ = [g = r.game_, e = eps.value()](const strategy_profile& s) {
            const payoff_vector u = g.evaluate(s);
            // Best responses of the others: u1 maximal in s2 at the upper
            // bound; u2 maximal in s1 at the upper bound (5 > g(-2) = 2).
            const payoff_vector dev1 = g.evaluate({s[0], 1.0});
            const payoff_vector dev2 = g.evaluate({1.0, s[1]});
            return !(u[0] < dev1[0] - e) && !(u[1] < dev2[1] - e);
        };
        // s1 >= r(eps), the in-bounds root of 2x^2+3x = 5-eps; for eps >= 3
        // the constraint can also admit values near the lower bound.
        const double eps_v = eps.value();
        double s1_lo = -2.0;
        if (eps_v < 3.0)
            s1_lo = (-3.0 + std::sqrt(49.0 - 8.0 * eps_v)) / 4.0;
        r.box_lo_ = {s1_lo, std::max(-2.0, 1.0 - eps_v)};
        r.box_hi_ = {1.0, 1.0};
        return r;
    }

    /// Analytic region for the n-player vcm game on [0,10]^n.
    static region_spec analytic_vcm(int players, epsilon eps) {
        region_spec r(game_vcm(players), eps);
        const std::size_t n = static_cast<std::size_t>(players);
        r.membership_ = [g = r.game_, e = eps.value(), n](const strategy_profile& s) {
            const payoff_vector u = g.evaluate(s);
            strategy_profile dev(n, 10.0);
            for (std::size_t i = 0; i < n; ++i) {
                dev = strategy_profile(n, 10.0);
                dev[i] = s[i];
                const payoff_vector u_dev = g.evaluate(dev);
                if (u[i] < u_dev[i] - e) return false;
            }
            return true;
        };
        r.box_lo_.assign(n, std::max(0.0, 10.0 - 2.5 * eps.value()));
        r.box_hi_.assign(n, 10.0);
        return r;
    }

    /// Grid-oracle region for arbitrary games: membership snaps to the
    /// nearest grid node and tests it against the brute-force epsilon-BZ set.
    static region_spec from_grid_oracle(const game& g, epsilon eps, grid_spec grid,
                                        std::uint64_t cap = default_enumeration_cap) {
        region_spec r(g, eps);
        auto pg = std::make_shared<profile_grid>(g, grid, cap);
        const auto members = bz_set_bruteforce(g, eps, grid, deviation_mode::all_others_move, cap);
        auto node_set = std::make_shared<std::unordered_set<std::uint64_t>>();
        for (const auto& m : members) node_set->insert(flat_index(*pg, m));
        r.grid_members_ = std::make_shared<std::vector<strategy_profile>>(members);
        r.membership_ = [pg, node_set](const strategy_profile& s) {
            return node_set->count(snap_index(*pg, s)) > 0;
        };
        return r;
    }

    const game& owning_game() const noexcept { return game_; }
    double epsilon_value() const noexcept { return eps_; }

    /// Grid-backed regions can be empty (games without epsilon-BZ profiles);
    /// analytic regions never are.
    bool empty() const { return grid_members_ && grid_members_->empty(); }

    /// True iff s lies in the region. Throws if s does not fit the game.
    bool contains(const strategy_profile& s) const {
        game_.validate(s);
        return membership_(s);
    }

    /// `count` quasi-uniform points from the region (Halton sequence with
    /// rejection inside the region's bounding box; grid regions cycle their
    /// member nodes). Throws if the region is empty.
    std::vector<strategy_profile> sample(int count) const {
        if (count < 1) throw std::invalid_argument("sample count must be >= 1");
        std::vector<strategy_profile> out;
        out.reserve(static_cast<std::size_t>(count));
        if (grid_members_) {
            if (grid_members_->empty())
                throw std::invalid_argument("cannot sample an empty region");
            for (int k = 0; k < count; ++k)
                out.push_back((*grid_members_)[static_cast<std::size_t>(k) %
                                               grid_members_->size()]);
            return out;
        }
        const auto primes = detail::first_primes(game_.players());
        const std::uint64_t budget =
            static_cast<std::uint64_t>(count) * 10000ull + 1000ull;
        strategy_profile p(game_.players());
        for (std::uint64_t idx = 1; idx <= budget && out.size() < static_cast<std::size_t>(count);
             ++idx) {
            for (std::size_t d = 0; d < p.size(); ++d)
                p[d] = box_lo_[d] +
                       (box_hi_[d] - box_lo_[d]) * detail::halton(idx, primes[d]);
            if (membership_(p)) out.push_back(p);
        }
        if (out.size() < static_cast<std::size_t>(count))
            throw std::runtime_error("region sampling budget exhausted");
        return out;
    }

private:
    region_spec(game g, epsilon eps) : game_(std::move(g)), eps_(eps.value()) {}

    static std::uint64_t flat_index(const profile_grid& pg, const strategy_profile& s) {
        std::uint64_t flat = 0;
        for (std::size_t d = 0; d < pg.axes().size(); ++d)
            flat = flat * pg.axes()[d].size() + nearest_axis_index(pg.axes()[d], s[d]);
        return flat;
    }
    static std::uint64_t snap_index(const profile_grid& pg, const strategy_profile& s) {
        return flat_index(pg, s);
    }
    static std::size_t nearest_axis_index(const std::vector<double>& axis, double v) {
        const auto it = std::lower_bound(axis.begin(), axis.end(), v);
        if (it == axis.begin()) return 0;
        if (it == axis.end()) return axis.size() - 1;
        const std::size_t hi = static_cast<std::size_t>(it - axis.begin());
        return (v - axis[hi - 1] <= axis[hi] - v) ? hi - 1 : hi;
    }

    game game_;
    double eps_;
    std::function<bool(const strategy_profile&)> membership_;
    std::vector<double> box_lo_, box_hi_;
    std::shared_ptr<std::vector<strategy_profile>> grid_members_;
};

/// Membership test named per the command-line workflow.
inline bool region_membership(const region_spec& region, const strategy_profile& s) {
    return region.contains(s);
}

/// Fraction of `samples` region points whose payoff vector lies within
/// `radius` (L-infinity) of some front member's payoffs.
inline double coverage_fraction(const region_spec& region,
                                const std::vector<payoff_vector>& front_payoffs,
                                int samples, double radius = 0.1) {
    if (front_payoffs.empty())
        throw std::invalid_argument("coverage_fraction: empty front");
    if (samples < 1) throw std::invalid_argument("coverage_fraction: samples must be >= 1");
    const auto points = region.sample(samples);
    std::size_t covered = 0;
    for (const auto& p : points) {
        const payoff_vector u = region.owning_game().evaluate(p);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& f : front_payoffs) {
            double d = 0.0;
            for (std::size_t k = 0; k < u.size(); ++k)
                d = std::max(d, std::abs(u[k] - f[k]));
            best = std::min(best, d);
        }
        if (best <= radius) ++covered;
    }
    return static_cast<double>(covered) / static_cast<double>(points.size());
}

}  // namespace berge

#endif  // BERGE_REGIONS_HPP
