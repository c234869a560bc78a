#ifndef BERGE_CONFIG_HPP
#define BERGE_CONFIG_HPP

#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "berge/errors.hpp"
#include "berge/expr.hpp"
#include "berge/game.hpp"
#include "berge/oracle.hpp"
#include "berge/text.hpp"

namespace berge {

namespace detail {

struct config_entry {
    std::string value;
    int line;
};

inline int require_int(const config_entry& e, const std::string& key) {
    double v;
    if (!parse_double(e.value, v) || v != static_cast<int>(v))
        throw parse_error(e.line, "expected integer for '" + key + "'");
    return static_cast<int>(v);
}

}  // namespace detail

/// Parses the flat key-value game configuration format:
///
///   name = mygame
///   players = 2
///   builtin = pd                      # pd | g1 | vcm
/// or a finite game given by its full payoff table,
///   actions.1 = Cooperate,Defect      # per player, 1-based
///   payoff.0,1 = 0,3                  # 0-based action indices, one line per
///                                     # profile, values u_1..u_n
/// or a continuous game given by bounds and payoff expressions,
///   bounds.1 = -2,1
///   payoff_expr.1 = -s1^2 - s1 + s2
///
/// '#' starts a comment. The three forms are mutually exclusive.
inline game load_game(const std::string& config_text) {
    std::map<std::string, detail::config_entry> entries;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= config_text.size()) {
        std::size_t end = config_text.find('\n', start);
        if (end == std::string::npos) end = config_text.size();
        std::string_view line(config_text.data() + start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw parse_error(line_no, "expected 'key = value'");
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (key.empty()) throw parse_error(line_no, "empty key");
        if (entries.count(key)) throw parse_error(line_no, "duplicate key '" + key + "'");
        entries[key] = {value, line_no};
    }

    const auto take = [&](const std::string& key) -> detail::config_entry {
        const auto it = entries.find(key);
        if (it == entries.end()) throw parse_error("missing required key '" + key + "'");
        auto e = it->second;
        entries.erase(it);
        return e;
    };
    const auto has_prefix = [&](std::string_view prefix) {
        for (const auto& [k, v] : entries)
            if (k.starts_with(prefix)) return true;
        return false;
    };

    const std::string name = take("name").value;
    const auto players_entry = take("players");
    const int players = detail::require_int(players_entry, "players");
    if (players < 2)
        throw parse_error(players_entry.line, "players must be >= 2");
    const std::size_t n = static_cast<std::size_t>(players);

    if (entries.count("builtin")) {
        const auto builtin = take("builtin");
        if (has_prefix("actions.") || has_prefix("bounds.") || has_prefix("payoff"))
            throw parse_error(builtin.line,
                              "builtin games take no actions/bounds/payoff keys");
        if (!entries.empty())
            throw parse_error(entries.begin()->second.line,
                              "unknown key '" + entries.begin()->first + "'");
        game base = [&]() -> game {
            if (builtin.value == "pd") {
                if (players != 2)
                    throw parse_error(players_entry.line, "builtin pd requires players = 2");
                return prisoners_dilemma();
            }
            if (builtin.value == "g1") {
                if (players != 2)
                    throw parse_error(players_entry.line, "builtin g1 requires players = 2");
                return game_g1();
            }
            if (builtin.value == "vcm") return game_vcm(players);
            throw parse_error(builtin.line, "unknown builtin '" + builtin.value + "'");
        }();
        auto spaces = base.spaces();
        payoff_fn payoff = [base](const strategy_profile& s) { return base.evaluate(s); };
        return game(name, std::move(spaces), std::move(payoff));
    }

    if (has_prefix("actions.")) {
        std::vector<std::vector<std::string>> actions(n);
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) {
            const auto e = take("actions." + std::to_string(i + 1));
            actions[i] = split(e.value, ',');
            if (actions[i].empty() || actions[i].front().empty())
                throw parse_error(e.line, "empty action list");
            total *= actions[i].size();
        }
        // Profiles are keyed by 0-based action indices, enumerated
        // lexicographically with the last player fastest.
        std::vector<payoff_vector> table(total);
        std::vector<bool> filled(total, false);
        std::size_t rows = 0;
        for (const auto& [key, entry] : entries) {
            if (!key.starts_with("payoff."))
                throw parse_error(entry.line, "unknown key '" + key + "'");
            const auto tuple = split(std::string_view(key).substr(7), ',');
            if (tuple.size() != n)
                throw parse_error(entry.line, "profile tuple needs " +
                                                  std::to_string(n) + " indices");
            std::size_t flat = 0;
            for (std::size_t i = 0; i < n; ++i) {
                double idx;
                if (!parse_double(tuple[i], idx) || idx < 0 || idx != std::floor(idx) ||
                    idx >= static_cast<double>(actions[i].size()))
                    throw parse_error(entry.line,
                                      "action index out of range for player " +
                                          std::to_string(i + 1));
                flat = flat * actions[i].size() + static_cast<std::size_t>(idx);
            }
            const auto values = split(entry.value, ',');
            if (values.size() != n)
                throw parse_error(entry.line,
                                  "expected " + std::to_string(n) + " payoff values");
            payoff_vector row(n);
            for (std::size_t i = 0; i < n; ++i)
                if (!parse_double(values[i], row[i]))
                    throw parse_error(entry.line, "malformed payoff value '" + values[i] + "'");
            if (filled[flat]) throw parse_error(entry.line, "duplicate profile '" + key + "'");
            filled[flat] = true;
            table[flat] = std::move(row);
            ++rows;
        }
        if (rows != total)
            throw parse_error("payoff table size mismatch: got " + std::to_string(rows) +
                              " profiles, expected " + std::to_string(total));
        return from_payoff_table(name, std::move(actions), std::move(table));
    }

    if (has_prefix("bounds.")) {
        std::vector<strategy_space> spaces;
        for (std::size_t i = 0; i < n; ++i) {
            const auto e = take("bounds." + std::to_string(i + 1));
            const auto parts = split(e.value, ',');
            double lo, hi;
            if (parts.size() != 2 || !parse_double(parts[0], lo) || !parse_double(parts[1], hi))
                throw parse_error(e.line, "expected 'bounds.<i> = lo,hi'");
            if (!(lo < hi)) throw parse_error(e.line, "bounds require lo < hi");
            spaces.push_back(strategy_space::interval(lo, hi));
        }
        std::vector<polynomial_expr> exprs;
        for (std::size_t i = 0; i < n; ++i) {
            const auto e = take("payoff_expr." + std::to_string(i + 1));
            try {
                exprs.push_back(polynomial_expr::parse(e.value, n));
            } catch (const parse_error& pe) {
                throw parse_error(e.line, std::string("in payoff_expr.") +
                                              std::to_string(i + 1) + ": " + pe.what());
            }
        }
        if (!entries.empty())
            throw parse_error(entries.begin()->second.line,
                              "unknown key '" + entries.begin()->first + "'");
        payoff_fn payoff = [exprs](const strategy_profile& s) {
            payoff_vector u(exprs.size());
            for (std::size_t i = 0; i < exprs.size(); ++i) u[i] = exprs[i].eval(s);
            return u;
        };
        return game(name, std::move(spaces), std::move(payoff));
    }

    throw parse_error("configuration defines no game: need 'builtin', 'actions.*' or 'bounds.*'");
}

/// Serializes a finite game back to the configuration format; payoffs use
/// shortest round-trip decimals so reloading reproduces them bit-exactly.
inline std::string to_config_text(const game& g) {
    if (!g.all_finite())
        throw std::invalid_argument("to_config_text supports finite games only");
    std::string out;
    out += "name = " + g.name() + "\n";
    out += "players = " + std::to_string(g.players()) + "\n";
    for (std::size_t i = 0; i < g.players(); ++i) {
        out += "actions." + std::to_string(i + 1) + " = ";
        const auto& acts = g.space(i).actions();
        for (std::size_t a = 0; a < acts.size(); ++a)
            out += (a ? "," : "") + acts[a];
        out += "\n";
    }
    const profile_grid grid(g, grid_spec{2});
    for (std::uint64_t f = 0; f < grid.size(); ++f) {
        const auto idx = grid.indices_at(f);
        out += "payoff.";
        for (std::size_t i = 0; i < idx.size(); ++i)
            out += (i ? "," : "") + std::to_string(idx[i]);
        out += " = ";
        const auto u = g.evaluate(grid.at(f));
        for (std::size_t i = 0; i < u.size(); ++i)
            out += (i ? "," : "") + format_double(u[i]);
        out += "\n";
    }
    return out;
}

}  // namespace berge

#endif  // BERGE_CONFIG_HPP
