#ifndef SCINT_UTIL_HPP
#define SCINT_UTIL_HPP

#include <cstddef>
#include <functional>
#include <string_view>
#include <thread>
#include <vector>

namespace scint {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr std::string_view kCodeVersion = "0.1.0";

/// Run fn(i) for i in [0,n). Work is chunked statically; callers must write
/// results into per-index slots so the outcome is independent of scheduling.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += nt) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace scint

#endif
