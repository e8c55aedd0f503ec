#include "scint/cache.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <unistd.h>

namespace scint {

namespace {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path Cache::path_for(const nlohmann::json& key) const {
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.json",
                  static_cast<unsigned long long>(fnv1a64(key.dump())));
    return dir_ / name;
}

nlohmann::json Cache::get_or_compute(const nlohmann::json& key,
                                     const std::function<nlohmann::json()>& compute,
                                     bool* hit) {
    const auto path = path_for(key);
    if (std::filesystem::exists(path)) {
        try {
            std::ifstream is(path);
            nlohmann::json entry = nlohmann::json::parse(is);
            if (entry.at("key") == key) {
                if (hit) *hit = true;
                return entry.at("result");
            }
            // different key with the same hash: fall through to recompute
        } catch (const std::exception& e) {
            std::cerr << "cache: corrupt entry " << path.string() << " (" << e.what()
                      << "), recomputing\n";
        }
    }
    if (hit) *hit = false;
    nlohmann::json result = compute();
    nlohmann::json entry{{"key", key}, {"result", result}};
    const auto tmp = path.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream os(tmp, std::ios::binary);
        os << entry.dump();
    }
    std::filesystem::rename(tmp, path);
    return result;
}

} // namespace scint
