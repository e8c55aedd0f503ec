#ifndef SCINT_RNG_HPP
#define SCINT_RNG_HPP

#include <cstdint>

namespace scint {

// Counter-based random numbers. Every variate is a pure function of
// (seed, stream, counter), so parallel consumers get identical values
// no matter how work is scheduled.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ (splitmix64(b) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

/// Uniform in [0,1), 53-bit mantissa.
inline double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    const std::uint64_t key = hash_combine(seed, stream);
    return static_cast<double>(splitmix64(key + 0x632be59bd9b4e019ULL * counter) >> 11)
           * 0x1.0p-53;
}

} // namespace scint

#endif
