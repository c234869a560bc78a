#ifndef BERGE_TESTS_TEST_PATHS_HPP
#define BERGE_TESTS_TEST_PATHS_HPP

#include <cstdlib>
#include <filesystem>
#include <string>

namespace berge::testing {

extern std::string own_binary_path;

/// Path to the berge CLI binary: BERGE_CLI env var if set, otherwise the
/// sibling "berge" of the running test binary (all binaries land in bin/).
inline std::filesystem::path cli_path() {
    if (const char* env = std::getenv("BERGE_CLI")) return env;
    return std::filesystem::absolute(own_binary_path).parent_path() / "berge";
}

}  // namespace berge::testing

#endif  // BERGE_TESTS_TEST_PATHS_HPP
