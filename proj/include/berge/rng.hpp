#ifndef BERGE_RNG_HPP
#define BERGE_RNG_HPP

#include <cstdint>
#include <random>

namespace berge {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Child seed for the k-th run derived from a base seed; distinct indices
/// give independent, reproducible streams.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(base ^ ((index + 1) * 0x9E3779B97F4A7C15ull));
}

/// Deterministic generator: mt19937_64 (sequence pinned by the standard)
/// with explicit conversions, so identical seeds give identical draws on
/// every platform. std::*_distribution is deliberately not used: its output
/// is implementation-defined.
class rng {
public:
    explicit rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n), unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace berge

#endif  // BERGE_RNG_HPP
