#ifndef BERGE_RUN_RECORD_HPP
#define BERGE_RUN_RECORD_HPP

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "berge/version.hpp"

namespace berge {

/// Provenance sidecar written next to every output file.
struct run_record {
    std::string command;
    std::string game;
    std::vector<double> epsilons;
    std::uint64_t seed = 0;
    nlohmann::json config;
    std::string output_path;
    double duration_seconds = 0.0;
    std::string tool_version = version;

    nlohmann::json to_json() const {
        return nlohmann::json{{"command", command},
                              {"game", game},
                              {"epsilons", epsilons},
                              {"seed", seed},
                              {"config", config},
                              {"output_path", output_path},
                              {"duration_seconds", duration_seconds},
                              {"tool_version", tool_version}};
    }
};

/// Writes content to a temporary file in the target directory and renames it
/// into place, so readers never observe a partial file.
inline void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
    const auto parent = path.parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write to '" + tmp + "'");
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace berge

#endif  // BERGE_RUN_RECORD_HPP
