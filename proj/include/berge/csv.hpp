#ifndef BERGE_CSV_HPP
#define BERGE_CSV_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "berge/errors.hpp"
#include "berge/game.hpp"
#include "berge/text.hpp"

namespace berge {

/// One solved row: a profile and its payoffs.
using front_row = std::pair<strategy_profile, payoff_vector>;

/// CSV with header s_1..s_n,u_1..u_n, one row per front member. Finite
/// strategies are written as their action labels, reals as shortest
/// round-trip decimals.
inline std::string write_front_csv(const game& g, const std::vector<front_row>& rows) {
    const std::size_t n = g.players();
    std::string out;
    for (std::size_t i = 0; i < n; ++i) out += "s_" + std::to_string(i + 1) + ",";
    for (std::size_t i = 0; i < n; ++i)
        out += "u_" + std::to_string(i + 1) + (i + 1 < n ? "," : "\n");
    for (const auto& [profile, payoffs] : rows) {
        for (std::size_t i = 0; i < n; ++i) {
            if (g.space(i).kind() == space_kind::finite)
                out += g.space(i).actions()[static_cast<std::size_t>(profile[i])];
            else
                out += format_double(profile[i]);
            out += ",";
        }
        for (std::size_t i = 0; i < n; ++i)
            out += format_double(payoffs[i]) + (i + 1 < n ? "," : "\n");
    }
    return out;
}

/// Parses a CSV produced by write_front_csv back into profiles and payoffs.
inline std::vector<front_row> parse_front_csv(const game& g, const std::string& text) {
    const std::size_t n = g.players();
    std::vector<front_row> rows;
    int line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        const std::string_view line = trim(std::string_view(text).substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty()) continue;
        if (line_no == 1) {
            if (!line.starts_with("s_1,"))
                throw parse_error(1, "missing CSV header");
            continue;
        }
        const auto cells = split(line, ',');
        if (cells.size() != 2 * n)
            throw parse_error(line_no, "expected " + std::to_string(2 * n) + " columns");
        strategy_profile profile(n);
        payoff_vector payoffs(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (g.space(i).kind() == space_kind::finite) {
                const auto& acts = g.space(i).actions();
                const auto it = std::find(acts.begin(), acts.end(), cells[i]);
                if (it == acts.end())
                    throw parse_error(line_no, "unknown action label '" + cells[i] + "'");
                profile[i] = static_cast<double>(it - acts.begin());
            } else if (!parse_double(cells[i], profile[i])) {
                throw parse_error(line_no, "malformed strategy value '" + cells[i] + "'");
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            if (!parse_double(cells[n + i], payoffs[i]))
                throw parse_error(line_no, "malformed payoff value '" + cells[n + i] + "'");
        rows.emplace_back(std::move(profile), std::move(payoffs));
    }
    return rows;
}

}  // namespace berge

#endif  // BERGE_CSV_HPP
