#ifndef BERGE_VERSION_HPP
#define BERGE_VERSION_HPP

namespace berge {

inline constexpr const char* version = "0.1.0";

}  // namespace berge

#endif  // BERGE_VERSION_HPP
