#ifndef BERGE_ERRORS_HPP
#define BERGE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace berge {

/// Thrown when a requested enumeration exceeds the configured profile cap.
class enumeration_limit_error : public std::runtime_error {
public:
    enumeration_limit_error(std::uint64_t size, std::uint64_t cap)
        : std::runtime_error("enumeration too large: " + std::to_string(size) +
                             " profiles exceed cap of " + std::to_string(cap)),
          size_(size), cap_(cap) {}

    std::uint64_t size() const noexcept { return size_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t size_;
    std::uint64_t cap_;
};

/// Thrown on malformed game-configuration text; carries the offending line.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    explicit parse_error(const std::string& what)
        : std::runtime_error(what), line_(0) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace berge

#endif  // BERGE_ERRORS_HPP
