#ifndef BERGE_EVOLVER_HPP
#define BERGE_EVOLVER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "berge/game.hpp"
#include "berge/relation.hpp"
#include "berge/rng.hpp"

namespace berge {

struct evolver_config {
    int population_size = 150;
    int generations = 150;
    double eta_c = 20.0;
    double eta_m = 20.0;
    double crossover_probability = 0.9;
    /// Per-variable mutation probability; defaults to 1/n_variables at run time.
    std::optional<double> mutation_probability;
    std::uint64_t seed = 1;

    void validate() const {
        if (population_size < 4 || population_size % 2 != 0)
            throw std::invalid_argument("population_size must be even and >= 4");
        if (generations < 1) throw std::invalid_argument("generations must be >= 1");
        if (!(eta_c >= 0.0) || !(eta_m >= 0.0))
            throw std::invalid_argument("distribution indexes must be >= 0");
        if (!(crossover_probability >= 0.0 && crossover_probability <= 1.0))
            throw std::invalid_argument("crossover_probability must be in [0,1]");
        if (mutation_probability &&
            !(*mutation_probability >= 0.0 && *mutation_probability <= 1.0))
            throw std::invalid_argument("mutation_probability must be in [0,1]");
    }
};

struct individual {
    strategy_profile profile;
    payoff_vector payoffs;  // always evaluate(game, profile)
    int rank = 0;
    double crowding = 0.0;
};

struct front_result {
    std::vector<individual> members;
    evolver_config config;
    double epsilon_value = 0.0;
    std::string game_name;
    int generations_run = 0;
};

/// Simulated binary crossover on interval variables (distribution index
/// eta_c) and uniform index swap on finite variables. With probability
/// 1 - probability the children are plain copies of the parents.
inline std::pair<strategy_profile, strategy_profile> sbx_crossover(
    const strategy_profile& parent_a, const strategy_profile& parent_b,
    const std::vector<strategy_space>& spaces, double eta_c, double probability,
    rng& r) {
    strategy_profile c1 = parent_a, c2 = parent_b;
    if (r.uniform01() >= probability) return {std::move(c1), std::move(c2)};
    for (std::size_t j = 0; j < spaces.size(); ++j) {
        if (spaces[j].kind() == space_kind::finite) {
            if (r.uniform01() < 0.5) std::swap(c1[j], c2[j]);
            continue;
        }
        if (r.uniform01() > 0.5) continue;  // per-variable participation
        const double y1 = std::min(parent_a[j], parent_b[j]);
        const double y2 = std::max(parent_a[j], parent_b[j]);
        if (!(y2 - y1 > 1e-14)) continue;  // identical values: keep copies
        const double yl = spaces[j].lower(), yu = spaces[j].upper();
        const double u = r.uniform01();
        const auto spread = [&](double beta) {
            const double alpha = 2.0 - std::pow(beta, -(eta_c + 1.0));
            return u <= 1.0 / alpha
                       ? std::pow(u * alpha, 1.0 / (eta_c + 1.0))
                       : std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta_c + 1.0));
        };
        const double betaq_lo = spread(1.0 + 2.0 * (y1 - yl) / (y2 - y1));
        const double betaq_hi = spread(1.0 + 2.0 * (yu - y2) / (y2 - y1));
        double lo = 0.5 * ((y1 + y2) - betaq_lo * (y2 - y1));
        double hi = 0.5 * ((y1 + y2) + betaq_hi * (y2 - y1));
        lo = std::clamp(lo, yl, yu);
        hi = std::clamp(hi, yl, yu);
        if (r.uniform01() < 0.5) std::swap(lo, hi);
        c1[j] = lo;
        c2[j] = hi;
    }
    return {std::move(c1), std::move(c2)};
}

/// Polynomial mutation (distribution index eta_m) on interval variables and
/// uniform reset on finite variables, each variable independently with the
/// given probability. Results stay within bounds.
inline void polynomial_mutation(strategy_profile& x,
                                const std::vector<strategy_space>& spaces, double eta_m,
                                double probability, rng& r) {
    for (std::size_t j = 0; j < spaces.size(); ++j) {
        if (r.uniform01() >= probability) continue;
        if (spaces[j].kind() == space_kind::finite) {
            x[j] = static_cast<double>(r.below(spaces[j].cardinality()));
            continue;
        }
        const double yl = spaces[j].lower(), yu = spaces[j].upper();
        const double y = x[j];
        const double delta1 = (y - yl) / (yu - yl);
        const double delta2 = (yu - y) / (yu - yl);
        const double u = r.uniform01();
        const double mut_pow = 1.0 / (eta_m + 1.0);
        double deltaq;
        if (u <= 0.5) {
            const double xy = 1.0 - delta1;
            const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta_m + 1.0);
            deltaq = std::pow(val, mut_pow) - 1.0;
        } else {
            const double xy = 1.0 - delta2;
            const double val =
                2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta_m + 1.0);
            deltaq = 1.0 - std::pow(val, mut_pow);
        }
        x[j] = std::clamp(y + deltaq * (yu - yl), yl, yu);
    }
}

/// Partitions the population into fronts under the generative relation and
/// writes each individual's rank. F1 holds the individuals dominated by
/// nobody; each later front is dominated only by earlier ones. Because the
/// relation can form domination cycles, a round in which every remaining
/// individual is still dominated assigns those with the fewest remaining
/// dominators; with an acyclic relation this never triggers.
inline std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    const game& g, epsilon eps, std::vector<individual>& population) {
    if (population.empty())
        throw std::invalid_argument("fast_nondominated_sort: empty population");
    const std::size_t n = population.size();
    std::vector<int> dominator_count(n, 0);
    std::vector<std::vector<std::size_t>> dominates(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const auto outcome =
                compare(g, population[a].profile, population[a].payoffs,
                        population[b].profile, population[b].payoffs, eps);
            if (outcome == dominance_outcome::left_dominates) {
                dominates[a].push_back(b);
                ++dominator_count[b];
            } else if (outcome == dominance_outcome::right_dominates) {
                dominates[b].push_back(a);
                ++dominator_count[a];
            }
        }
    }
    std::vector<std::vector<std::size_t>> fronts;
    std::vector<bool> assigned(n, false);
    std::size_t remaining = n;
    while (remaining > 0) {
        std::vector<std::size_t> front;
        for (std::size_t i = 0; i < n; ++i)
            if (!assigned[i] && dominator_count[i] <= 0) front.push_back(i);
        if (front.empty()) {
            int min_count = std::numeric_limits<int>::max();
            for (std::size_t i = 0; i < n; ++i)
                if (!assigned[i]) min_count = std::min(min_count, dominator_count[i]);
            for (std::size_t i = 0; i < n; ++i)
                if (!assigned[i] && dominator_count[i] == min_count) front.push_back(i);
        }
        for (std::size_t i : front) {
            assigned[i] = true;
            population[i].rank = static_cast<int>(fronts.size());
            --remaining;
        }
        for (std::size_t i : front)
            for (std::size_t b : dominates[i])
                if (!assigned[b]) --dominator_count[b];
        fronts.push_back(std::move(front));
    }
    return fronts;
}

/// NSGA-II crowding distance in payoff space. Boundary individuals per
/// objective get +infinity, interior ones the normalized neighbor-gap sum;
/// fronts of size <= 2 are all +infinity.
inline void crowding_distance(std::vector<individual>& population,
                              const std::vector<std::size_t>& front) {
    if (front.empty()) throw std::invalid_argument("crowding_distance: empty front");
    const double inf = std::numeric_limits<double>::infinity();
    if (front.size() <= 2) {
        for (std::size_t i : front) population[i].crowding = inf;
        return;
    }
    for (std::size_t i : front) population[i].crowding = 0.0;
    const std::size_t objectives = population[front[0]].payoffs.size();
    std::vector<std::size_t> order(front);
    for (std::size_t k = 0; k < objectives; ++k) {
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return population[a].payoffs[k] < population[b].payoffs[k];
        });
        population[order.front()].crowding = inf;
        population[order.back()].crowding = inf;
        const double range =
            population[order.back()].payoffs[k] - population[order.front()].payoffs[k];
        if (range <= 0.0) continue;
        for (std::size_t m = 1; m + 1 < order.size(); ++m)
            population[order[m]].crowding +=
                (population[order[m + 1]].payoffs[k] - population[order[m - 1]].payoffs[k]) /
                range;
    }
}

/// Tournament core: lower rank wins, ties broken by larger crowding,
/// remaining ties by the first candidate.
inline std::size_t tournament_winner(const std::vector<individual>& population,
                                     std::size_t first, std::size_t second) {
    if (population[second].rank < population[first].rank) return second;
    if (population[first].rank == population[second].rank &&
        population[second].crowding > population[first].crowding)
        return second;
    return first;
}

/// Binary tournament between two uniform picks.
inline std::size_t tournament_select(const std::vector<individual>& population, rng& r) {
    const std::size_t i = static_cast<std::size_t>(r.below(population.size()));
    const std::size_t j = static_cast<std::size_t>(r.below(population.size()));
    return tournament_winner(population, i, j);
}

namespace detail {

/// Environmental selection: fill by front, truncate the last admitted front
/// by descending crowding (stable, so enumeration order breaks ties).
inline std::vector<individual> truncate_by_fronts(
    std::vector<individual>& merged, const std::vector<std::vector<std::size_t>>& fronts,
    std::size_t target) {
    std::vector<individual> next;
    next.reserve(target);
    for (const auto& front : fronts) {
        if (next.size() == target) break;
        if (next.size() + front.size() <= target) {
            for (std::size_t i : front) next.push_back(std::move(merged[i]));
            continue;
        }
        std::vector<std::size_t> order(front);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return merged[a].crowding > merged[b].crowding;
        });
        for (std::size_t m = 0; next.size() < target; ++m)
            next.push_back(std::move(merged[order[m]]));
    }
    return next;
}

inline strategy_profile random_profile(const std::vector<strategy_space>& spaces, rng& r) {
    strategy_profile p(spaces.size());
    for (std::size_t j = 0; j < spaces.size(); ++j)
        p[j] = spaces[j].kind() == space_kind::finite
                   ? static_cast<double>(r.below(spaces[j].cardinality()))
                   : r.uniform(spaces[j].lower(), spaces[j].upper());
    return p;
}

}  // namespace detail

/// BZ-NSGA-II from an explicit starting population (one profile per
/// individual, exactly population_size of them). See run() below.
inline front_result run_with_initial(const game& g, epsilon eps,
                                     const evolver_config& config,
                                     const std::vector<strategy_profile>& initial,
                                     rng& r) {
    config.validate();
    const auto& spaces = g.spaces();
    const std::size_t pop_size = static_cast<std::size_t>(config.population_size);
    if (initial.size() != pop_size)
        throw std::invalid_argument("initial population must have population_size members");
    const double pm =
        config.mutation_probability.value_or(1.0 / static_cast<double>(spaces.size()));
    if (!(pm >= 0.0 && pm <= 1.0))
        throw std::invalid_argument("mutation_probability must be in [0,1]");

    std::vector<individual> population;
    population.reserve(pop_size);
    for (const auto& profile : initial) {
        individual ind;
        ind.profile = profile;
        ind.payoffs = g.evaluate(ind.profile);
        population.push_back(std::move(ind));
    }
    {
        const auto fronts = fast_nondominated_sort(g, eps, population);
        for (const auto& front : fronts) crowding_distance(population, front);
    }

    for (int gen = 0; gen < config.generations; ++gen) {
        // Phase 1: selection draws.
        std::vector<std::size_t> parents(pop_size);
        for (std::size_t i = 0; i < pop_size; ++i)
            parents[i] = tournament_select(population, r);
        // Phase 2: crossover draws.
        std::vector<individual> offspring;
        offspring.reserve(pop_size);
        for (std::size_t p = 0; p + 1 < pop_size; p += 2) {
            auto [c1, c2] =
                sbx_crossover(population[parents[p]].profile,
                              population[parents[p + 1]].profile, spaces,
                              config.eta_c, config.crossover_probability, r);
            offspring.push_back({std::move(c1), {}, 0, 0.0});
            offspring.push_back({std::move(c2), {}, 0, 0.0});
        }
        // Phase 3: mutation draws.
        for (auto& child : offspring)
            polynomial_mutation(child.profile, spaces, config.eta_m, pm, r);
        // Evaluation after all draws of this generation.
        for (auto& child : offspring) child.payoffs = g.evaluate(child.profile);

        std::vector<individual> merged = std::move(population);
        merged.insert(merged.end(), std::make_move_iterator(offspring.begin()),
                      std::make_move_iterator(offspring.end()));
        const auto fronts = fast_nondominated_sort(g, eps, merged);
        for (const auto& front : fronts) crowding_distance(merged, front);
        population = detail::truncate_by_fronts(merged, fronts, pop_size);
    }

    const auto fronts = fast_nondominated_sort(g, eps, population);
    for (const auto& front : fronts) crowding_distance(population, front);

    front_result result;
    result.config = config;
    result.epsilon_value = eps.value();
    result.game_name = g.name();
    result.generations_run = config.generations;

    std::vector<strategy_profile> unique_profiles;
    std::set<strategy_profile> seen;
    for (std::size_t i : fronts.front())
        if (seen.insert(population[i].profile).second)
            unique_profiles.push_back(population[i].profile);
    const auto filtered = nondominated_filter(g, unique_profiles, eps);
    for (const auto& p : filtered) {
        individual ind;
        ind.profile = p;
        ind.payoffs = g.evaluate(p);
        ind.rank = 0;
        result.members.push_back(std::move(ind));
    }
    if (!result.members.empty()) {
        std::vector<std::size_t> all(result.members.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        crowding_distance(result.members, all);
    }
    return result;
}

/// BZ-NSGA-II: the NSGA-II generational loop with Pareto dominance replaced
/// by the generative relation. Initializes uniformly at random in bounds and
/// returns the de-duplicated, re-filtered first front of the final
/// population. Deterministic for a fixed (game, eps, config): all stochastic
/// draws happen on one stream in a fixed phase order (selection, crossover,
/// mutation) each generation.
inline front_result run(const game& g, epsilon eps, const evolver_config& config) {
    config.validate();
    rng r(config.seed);
    std::vector<strategy_profile> initial;
    initial.reserve(static_cast<std::size_t>(config.population_size));
    for (int i = 0; i < config.population_size; ++i)
        initial.push_back(detail::random_profile(g.spaces(), r));
    return run_with_initial(g, eps, config, initial, r);
}

}  // namespace berge

#endif  // BERGE_EVOLVER_HPP
