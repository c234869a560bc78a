// Command-line front end: evolutionary detection (solve), brute-force
// verification (oracle) and epsilon sweeps (sweep) for epsilon-BZ equilibria.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "berge/config.hpp"
#include "berge/csv.hpp"
#include "berge/evolver.hpp"
#include "berge/oracle.hpp"
#include "berge/regions.hpp"
#include "berge/run_record.hpp"
#include "berge/text.hpp"
#include "berge/version.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_theorem_violation = 2;
constexpr int exit_resource_cap = 3;

std::uint64_t enumeration_cap() {
    if (const char* env = std::getenv("BERGE_EQ_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("BERGE_EQ_CAP must be a positive integer");
    }
    return berge::default_enumeration_cap;
}

berge::game resolve_game(const std::string& spec, int players) {
    if (spec == "pd") return berge::prisoners_dilemma();
    if (spec == "g1") return berge::game_g1();
    if (spec == "vcm") return berge::game_vcm(players);
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot read game file '" + path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        return berge::load_game(text.str());
    }
    throw std::invalid_argument("unknown game '" + spec + "' (expected pd|g1|vcm|file:<path>)");
}

std::string profile_to_text(const berge::game& g, const berge::strategy_profile& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        if (g.space(i).kind() == berge::space_kind::finite)
            out += g.space(i).actions()[static_cast<std::size_t>(s[i])];
        else
            out += berge::format_double(s[i]);
    }
    return out + ")";
}

struct solver_flags {
    std::string game_spec = "pd";
    int players = 2;
    berge::evolver_config config;
    double mutation_p = -1.0;  // <0 keeps the 1/n default
};

void add_solver_flags(CLI::App& cmd, solver_flags& f) {
    cmd.add_option("--game", f.game_spec, "pd|g1|vcm|file:<path>");
    cmd.add_option("--players", f.players, "player count (vcm only)");
    cmd.add_option("--pop-size", f.config.population_size, "population size");
    cmd.add_option("--generations", f.config.generations, "generations");
    cmd.add_option("--eta-c", f.config.eta_c, "SBX distribution index");
    cmd.add_option("--eta-m", f.config.eta_m, "mutation distribution index");
    cmd.add_option("--crossover-p", f.config.crossover_probability, "crossover probability");
    cmd.add_option("--mutation-p", f.mutation_p, "per-variable mutation probability");
    cmd.add_option("--seed", f.config.seed, "random seed");
}

berge::evolver_config resolved_config(const solver_flags& f) {
    berge::evolver_config cfg = f.config;
    if (f.mutation_p >= 0.0) cfg.mutation_probability = f.mutation_p;
    return cfg;
}

nlohmann::json config_json(const berge::evolver_config& cfg, std::size_t n_vars) {
    return nlohmann::json{
        {"population_size", cfg.population_size},
        {"generations", cfg.generations},
        {"eta_c", cfg.eta_c},
        {"eta_m", cfg.eta_m},
        {"crossover_probability", cfg.crossover_probability},
        {"mutation_probability",
         cfg.mutation_probability.value_or(1.0 / static_cast<double>(n_vars))},
        {"seed", cfg.seed}};
}

std::string joined_command(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i) out += ' ';
        out += argv[i];
    }
    return out;
}

struct solve_outcome {
    berge::front_result front;
    double duration_seconds = 0.0;
};

solve_outcome run_solver(const berge::game& g, double eps_value,
                         const berge::evolver_config& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    solve_outcome out;
    out.front = berge::run(g, berge::epsilon(eps_value), cfg);
    out.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

void write_front_outputs(const berge::game& g, const solve_outcome& outcome,
                         const std::string& out_path, const std::string& command) {
    std::vector<berge::front_row> rows;
    for (const auto& m : outcome.front.members) rows.emplace_back(m.profile, m.payoffs);
    berge::atomic_write_file(out_path, berge::write_front_csv(g, rows));
    berge::run_record record;
    record.command = command;
    record.game = g.name();
    record.epsilons = {outcome.front.epsilon_value};
    record.seed = outcome.front.config.seed;
    record.config = config_json(outcome.front.config, g.players());
    record.output_path = out_path;
    record.duration_seconds = outcome.duration_seconds;
    berge::atomic_write_file(out_path + ".meta.json", record.to_json().dump(2) + "\n");
}

berge::region_spec region_for(const berge::game& g, const std::string& game_spec,
                              double eps_value, int players, int grid_points,
                              std::uint64_t cap) {
    if (game_spec == "g1") return berge::region_spec::analytic_g1(berge::epsilon(eps_value));
    if (game_spec == "vcm")
        return berge::region_spec::analytic_vcm(players, berge::epsilon(eps_value));
    return berge::region_spec::from_grid_oracle(g, berge::epsilon(eps_value),
                                                berge::grid_spec(grid_points), cap);
}

int cmd_solve(const solver_flags& flags, double eps_value, const std::string& out_path,
              const std::string& command) {
    const berge::game g = resolve_game(flags.game_spec, flags.players);
    const auto outcome = run_solver(g, eps_value, resolved_config(flags));
    write_front_outputs(g, outcome, out_path, command);
    std::cout << "wrote " << outcome.front.members.size() << " front member(s) to "
              << out_path << "\n";
    return exit_ok;
}

int cmd_oracle(const std::string& game_spec, int players, double eps_value, int grid_points,
               const std::string& deviations, const std::string& out_path,
               const std::string& command) {
    const berge::game g = resolve_game(game_spec, players);
    const berge::deviation_mode mode = [&] {
        if (deviations == "all-move") return berge::deviation_mode::all_others_move;
        if (deviations == "any") return berge::deviation_mode::any_profile;
        throw std::invalid_argument("--deviations must be all-move or any");
    }();
    const std::uint64_t cap = enumeration_cap();
    const auto t0 = std::chrono::steady_clock::now();
    const auto report =
        berge::verify_equivalence(g, berge::epsilon(eps_value), berge::grid_spec(grid_points),
                                  mode, cap);
    const auto nash = berge::nash_set_bruteforce(g, berge::grid_spec(grid_points), cap);
    const double duration =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::string text;
    text += "game: " + g.name() + "\n";
    text += "players: " + std::to_string(g.players()) + "\n";
    text += "epsilon: " + berge::format_double(report.epsilon_value) + "\n";
    text += "grid: " + std::to_string(report.grid.points_per_interval) + "\n";
    text += std::string("deviations: ") +
            (mode == berge::deviation_mode::all_others_move ? "all-move" : "any") + "\n";
    text += "profiles: " + std::to_string(report.profile_count) + "\n";
    text += "bz_set: " + std::to_string(report.bz_set.size()) + "\n";
    for (const auto& s : report.bz_set) text += "  " + profile_to_text(g, s) + "\n";
    text += "nondominated_set: " + std::to_string(report.nondominated_set.size()) + "\n";
    for (const auto& s : report.nondominated_set) text += "  " + profile_to_text(g, s) + "\n";
    text += std::string("sets_equal: ") + (report.sets_equal ? "true" : "false") + "\n";
    text += "nash_set: " + std::to_string(nash.size()) + "\n";
    for (const auto& s : nash) text += "  " + profile_to_text(g, s) + "\n";
    std::cout << text;

    if (!out_path.empty()) {
        berge::atomic_write_file(out_path, text);
        berge::run_record record;
        record.command = command;
        record.game = g.name();
        record.epsilons = {eps_value};
        record.config = {{"grid", grid_points},
                         {"deviations", deviations},
                         {"cap", cap}};
        record.output_path = out_path;
        record.duration_seconds = duration;
        berge::atomic_write_file(out_path + ".meta.json", record.to_json().dump(2) + "\n");
    }
    if (!report.sets_equal) {
        std::cerr << "equivalence violated: bz_set and nondominated_set differ\n";
        return exit_theorem_violation;
    }
    return exit_ok;
}

int cmd_sweep(const solver_flags& flags, const std::string& epsilons_arg,
              const std::string& out_dir, int grid_points, int samples, double radius,
              const std::string& command) {
    const auto tokens = berge::split(epsilons_arg, ',');
    if (tokens.empty() || tokens.front().empty())
        throw std::invalid_argument("--epsilons needs a non-empty comma-separated list");
    std::vector<double> eps_values;
    for (const auto& t : tokens) {
        double v;
        if (!berge::parse_double(t, v) || v < 0)
            throw std::invalid_argument("bad epsilon '" + t + "'");
        eps_values.push_back(v);
    }
    const berge::game g = resolve_game(flags.game_spec, flags.players);
    const std::uint64_t cap = enumeration_cap();
    std::filesystem::create_directories(out_dir);

    std::string summary;
    summary += "epsilon,front_size";
    for (std::size_t i = 0; i < g.players(); ++i)
        summary += ",u_" + std::to_string(i + 1) + "_min,u_" + std::to_string(i + 1) + "_max";
    summary += ",bbox_volume,coverage\n";

    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t k = 0; k < eps_values.size(); ++k) {
        berge::evolver_config cfg = resolved_config(flags);
        cfg.seed = berge::mix_seed(flags.config.seed, k);
        const auto outcome = run_solver(g, eps_values[k], cfg);
        const std::string csv_path =
            (std::filesystem::path(out_dir) / ("eps_" + tokens[k] + ".csv")).string();
        write_front_outputs(g, outcome, csv_path, command);

        std::vector<berge::payoff_vector> payoffs;
        for (const auto& m : outcome.front.members) payoffs.push_back(m.payoffs);
        double volume = payoffs.empty() ? 0.0 : 1.0;
        summary += tokens[k] + "," + std::to_string(payoffs.size());
        for (std::size_t i = 0; i < g.players(); ++i) {
            double lo = std::numeric_limits<double>::infinity(), hi = -lo;
            for (const auto& u : payoffs) {
                lo = std::min(lo, u[i]);
                hi = std::max(hi, u[i]);
            }
            if (payoffs.empty()) lo = hi = 0.0;
            volume *= hi - lo;
            summary += "," + berge::format_double(lo) + "," + berge::format_double(hi);
        }
        std::string coverage_cell = "nan";  // undefined for empty fronts/regions
        if (!payoffs.empty()) {
            const auto region = region_for(g, flags.game_spec, eps_values[k], flags.players,
                                           grid_points, cap);
            if (!region.empty())
                coverage_cell = berge::format_double(
                    berge::coverage_fraction(region, payoffs, samples, radius));
        }
        summary += "," + berge::format_double(volume) + "," + coverage_cell + "\n";
        std::cout << "epsilon " << tokens[k] << ": " << payoffs.size()
                  << " front member(s), coverage " << coverage_cell << "\n";
    }
    const double duration =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const std::string summary_path = (std::filesystem::path(out_dir) / "summary.csv").string();
    berge::atomic_write_file(summary_path, summary);
    berge::run_record record;
    record.command = command;
    record.game = g.name();
    record.epsilons = eps_values;
    record.seed = flags.config.seed;
    record.config = config_json(resolved_config(flags), g.players());
    record.config["samples"] = samples;
    record.config["radius"] = radius;
    record.config["grid"] = grid_points;
    record.output_path = summary_path;
    record.duration_seconds = duration;
    berge::atomic_write_file(summary_path + ".meta.json", record.to_json().dump(2) + "\n");
    std::cout << "wrote sweep summary to " << summary_path << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"epsilon-Berge-Zhukovskii equilibrium solver"};
    app.set_version_flag("--version", berge::version);
    app.require_subcommand(1);
    const std::string command = joined_command(argc, argv);

    solver_flags solve_f;
    double solve_eps = 0.0;
    std::string solve_out = "front.csv";
    CLI::App* solve = app.add_subcommand("solve", "detect an epsilon-BZ front with BZ-NSGA-II");
    add_solver_flags(*solve, solve_f);
    solve->add_option("--epsilon", solve_eps, "payoff slack (>= 0)")->required();
    solve->add_option("--out", solve_out, "output CSV path");

    std::string oracle_game = "pd", oracle_dev = "all-move", oracle_out;
    int oracle_players = 2, oracle_grid = 11;
    double oracle_eps = 0.0;
    CLI::App* oracle =
        app.add_subcommand("oracle", "brute-force epsilon-BZ sets and equivalence check");
    oracle->add_option("--game", oracle_game, "pd|g1|vcm|file:<path>");
    oracle->add_option("--players", oracle_players, "player count (vcm only)");
    oracle->add_option("--epsilon", oracle_eps, "payoff slack (>= 0)")->required();
    oracle->add_option("--grid", oracle_grid, "points per interval dimension");
    oracle->add_option("--deviations", oracle_dev, "all-move|any");
    oracle->add_option("--out", oracle_out, "also write the report to this path");

    solver_flags sweep_f;
    std::string sweep_eps, sweep_out = "sweep_out";
    int sweep_grid = 51, sweep_samples = 1000;
    double sweep_radius = 0.1;
    CLI::App* sweep = app.add_subcommand("sweep", "one solve per epsilon plus a summary table");
    add_solver_flags(*sweep, sweep_f);
    sweep->add_option("--epsilons", sweep_eps, "comma-separated epsilon list")->required();
    sweep->add_option("--out", sweep_out, "output directory");
    sweep->add_option("--grid", sweep_grid, "grid for oracle-backed regions");
    sweep->add_option("--samples", sweep_samples, "region sample count for coverage");
    sweep->add_option("--radius", sweep_radius, "payoff-space coverage radius");

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return cmd_solve(solve_f, solve_eps, solve_out, command);
        if (oracle->parsed())
            return cmd_oracle(oracle_game, oracle_players, oracle_eps, oracle_grid, oracle_dev,
                              oracle_out, command);
        if (sweep->parsed())
            return cmd_sweep(sweep_f, sweep_eps, sweep_out, sweep_grid, sweep_samples,
                             sweep_radius, command);
        return exit_usage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const berge::enumeration_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resource_cap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
